#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ore/errors.hpp"
#include "ore/extremal.hpp"
#include "ore/serialize.hpp"
#include "test_support.hpp"

using namespace ore;

// Expected strings were produced with networkx.to_graph6_bytes(header=False).
TEST_CASE("graph6 known encodings")
{
    CHECK(to_graph6(Graph::complete(2)) == "A_");
    CHECK(to_graph6(Graph::complete(3)) == "Bw");
    CHECK(to_graph6(testing::path(4)) == "Ch");
    CHECK(to_graph6(testing::cycle(5)) == "Dhc");
    CHECK(to_graph6(empty_graph(0)) == "?");
    CHECK(to_graph6(empty_graph(1)) == "@");
    CHECK(to_graph6(Graph::complete(8)) == "G~~~~{");
}

TEST_CASE("from_graph6")
{
    CHECK(from_graph6("A_") == Graph::complete(2));
    CHECK(from_graph6(">>graph6<<Bw") == Graph::complete(3));
    CHECK(from_graph6("?").order() == 0);
    CHECK(from_graph6("Dhc") == testing::cycle(5));
}

TEST_CASE("from_graph6 rejects malformed input")
{
    auto offset_of = [](std::string_view text) -> std::size_t {
        try {
            from_graph6(text);
        } catch (const ParseError& e) {
            return e.offset();
        }
        FAIL("no ParseError for " << text);
        return 0;
    };
    CHECK(offset_of("") == 0);
    CHECK(offset_of(">>graph6<<") == 10);
    CHECK(offset_of("A") == 1);      // missing data byte
    CHECK(offset_of("A__") == 2);    // trailing data byte
    CHECK(offset_of("A`") == 1);     // padding bit set
    CHECK(offset_of("B ") == 1);     // data byte below 63
    CHECK(offset_of(" ") == 0);      // header below 63
    CHECK(offset_of("~") == 0);      // multi-byte order
}

TEST_CASE("graph6 round trip on random and constructed graphs")
{
    std::mt19937 rng(3);
    for (int trial = 0; trial < 400; ++trial) {
        const int n = trial % 9;
        const Graph g = testing::random_graph(rng, n, 0.5);
        const std::string text = to_graph6(g);
        CHECK(text == testing::reference_graph6(g));
        CHECK(from_graph6(text) == g);
    }
    const Graph big = testing::random_graph(rng, 62, 0.5);
    CHECK(from_graph6(to_graph6(big)) == big);
    for (int k = 1; k <= 4; ++k)
        for (int d = 2; d <= 8; ++d) {
            const Graph t = build_T(k, d).graph;
            CHECK(from_graph6(to_graph6(t)) == t);
        }
}

TEST_CASE("edge list")
{
    CHECK(to_edge_list(Graph::complete(2)) == "0 1\n");
    CHECK(to_edge_list(empty_graph(3)).empty());
    CHECK(to_edge_list(build_T(1, 2).graph) == "0 1\n1 2\n");
    CHECK(to_edge_list(Graph::complete(3)) == "0 1\n0 2\n1 2\n");
}

TEST_CASE("dot")
{
    CHECK(to_dot(empty_graph(3)) == "graph G {\n  0;\n  1;\n  2;\n}\n");
    CHECK(to_dot(Graph::complete(2)) == "graph G {\n  0;\n  1;\n  0 -- 1;\n}\n");
}
