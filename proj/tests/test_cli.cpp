#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "json.hpp"
#include "ore/cli.hpp"

#include <sstream>

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

auto run(std::vector<std::string> args, const std::string& input = "") -> Result
{
    std::istringstream in(input);
    std::ostringstream out;
    std::ostringstream err;
    const int code = ore::cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("formula")
{
    auto r = run({"formula", "--n", "4", "--k", "1", "--d", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "5\n");
    r = run({"formula", "--n", "4", "--k", "1", "--d", "2", "--mode", "paper-literal"});
    CHECK(r.out == "11\n");
    CHECK(r.err.find("infeasible") != std::string::npos);
    CHECK(run({"formula", "--n", "8", "--k", "3", "--d", "2"}).out == "27\n");
}

TEST_CASE("usage and parameter errors")
{
    auto r = run({"formula", "--n", "4", "--k", "1"});
    CHECK(r.code == 1);
    CHECK(r.err.find("--d") != std::string::npos);
    CHECK(run({"bogus"}).code == 1);
    CHECK(run({}).code == 1);
    CHECK(run({"formula", "--n", "4", "--k", "1", "--d", "2", "--frob"}).code == 1);
    CHECK(run({"formula", "--n", "4", "--k", "1", "--d", "2", "--mode", "x"}).code == 1);
    CHECK(run({"formula", "--n", "4", "--k", "2", "--d", "3"}).code == 2);
    CHECK(run({"backbone", "--k", "0", "--d", "3"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("backbone formats")
{
    auto r = run({"backbone", "--k", "2", "--d", "3", "--format", "graph6"});
    CHECK(r.code == 0);
    CHECK(r.out == "Ez[W\n");
    CHECK(run({"backbone", "--k", "1", "--d", "2", "--format", "edgelist"}).out == "0 1\n1 2\n");
    CHECK(run({"backbone", "--k", "1", "--d", "2", "--format", "dot"}).out
          == "graph G {\n  0;\n  1;\n  2;\n  0 -- 1;\n  1 -- 2;\n}\n");
}

TEST_CASE("family output feeds check")
{
    auto fam = run({"family", "--n", "7", "--k", "1", "--d", "4"});
    CHECK(fam.code == 0);
    CHECK(std::count(fam.out.begin(), fam.out.end(), '\n') == 3);

    auto chk = run({"check", "--k", "1"}, fam.out);
    CHECK(chk.code == 0);
    std::istringstream lines(chk.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "graph6\torder\tsize\tdiameter\tkappa\textremal");
    int rows = 0;
    while (std::getline(lines, line)) {
        ++rows;
        CHECK(line.ends_with("\t7\t11\t4\t1\ttrue"));
    }
    CHECK(rows == 3);
}

TEST_CASE("check reports non-extremal and disconnected graphs")
{
    auto r = run({"check", "--k", "1", "--input", "-"}, "Cr\nA?\n");
    CHECK(r.code == 0);
    CHECK(r.out.find("Cr\t4\t4\t2\t2\tfalse\n") != std::string::npos);
    CHECK(r.out.find("A?\t2\t0\tdisconnected\t0\tfalse\n") != std::string::npos);
    CHECK(run({"check", "--k", "1"}, "A`\n").code == 2);
    CHECK(run({"check", "--k", "1", "--input", "/nonexistent/file"}).code == 1);
}

TEST_CASE("oracle")
{
    auto r = run({"oracle", "--n", "4", "--k", "1", "--d", "2", "--emit-extremal"});
    CHECK(r.code == 0);
    CHECK(r.out.starts_with("5\n"));
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 2);
    CHECK(run({"oracle", "--n", "9", "--k", "1", "--d", "2"}).code == 4);
    CHECK(run({"oracle", "--n", "7", "--k", "1", "--d", "5", "--budget", "5"}).code == 4);
    const auto j = nlohmann::json::parse(run({"oracle", "--n", "5", "--k", "1", "--d", "3", "--json"}).out);
    CHECK(j["max_size"] == 6);
}

TEST_CASE("verify")
{
    auto r = run({"verify", "--n", "4", "--k", "1", "--d", "2", "--json"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["schema_version"] == 1);
    CHECK(j["corrected_match"] == true);
    CHECK(j["paper_literal_match"] == false);
    CHECK(j["family_match"] == true);

    r = run({"verify", "--n", "6", "--k", "2", "--d", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("max_size=10") != std::string::npos);
    CHECK(r.out.find("corrected_match=true") != std::string::npos);
}

TEST_CASE("sweep")
{
    auto r = run({"sweep", "--n-max", "5", "--k-max", "1", "--d-max", "3", "--json"});
    CHECK(r.code == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 5);
    CHECK(run({"sweep", "--n-max", "9"}).code == 4);
}
