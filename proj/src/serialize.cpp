#include "ore/serialize.hpp"

#include "ore/errors.hpp"

#include <sstream>

namespace ore {

namespace {

constexpr std::string_view graph6_header = ">>graph6<<";
constexpr int graph6_bias = 63;

auto graph6_data_length(int order) -> std::size_t
{
    const std::size_t bits = static_cast<std::size_t>(order) * (order - 1) / 2;
    return (bits + 5) / 6;
}

} // namespace

auto to_graph6(const Graph& g) -> std::string
{
    const int n = g.order();
    std::string out;
    out.reserve(1 + graph6_data_length(n));
    out.push_back(static_cast<char>(n + graph6_bias));

    int group = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            group = (group << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(group + graph6_bias));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0)
        out.push_back(static_cast<char>((group << (6 - filled)) + graph6_bias));
    return out;
}

auto from_graph6(std::string_view text) -> Graph
{
    std::size_t base = 0;
    if (text.starts_with(graph6_header))
        base = graph6_header.size();
    const std::string_view body = text.substr(base);

    if (body.empty())
        throw ParseError("graph6: missing order byte", base);
    const int header = static_cast<unsigned char>(body[0]);
    if (header == 126)
        throw ParseError("graph6: multi-byte order (order > " + std::to_string(max_order) + ") unsupported", base);
    if (header < graph6_bias || header > 126)
        throw ParseError("graph6: order byte out of range", base);
    const int n = header - graph6_bias;

    const std::size_t expected = graph6_data_length(n);
    if (body.size() - 1 != expected)
        throw ParseError("graph6: expected " + std::to_string(expected) + " data bytes, found "
                             + std::to_string(body.size() - 1),
                         base + std::min(body.size(), expected + 1));

    Graph g(n);
    std::size_t pos = 1;
    int bit = 6;
    int value = 0;
    auto next_bit = [&]() -> bool {
        if (bit == 6) {
            const int c = static_cast<unsigned char>(body[pos]);
            if (c < graph6_bias || c > 126)
                throw ParseError("graph6: data byte out of range", base + pos);
            value = c - graph6_bias;
            ++pos;
            bit = 0;
        }
        return (value >> (5 - bit++)) & 1;
    };
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (next_bit())
                g.add_edge(i, j);

    if (bit < 6 && (value & ((1 << (6 - bit)) - 1)) != 0)
        throw ParseError("graph6: non-zero padding bits", base + pos - 1);
    return g;
}

auto to_edge_list(const Graph& g) -> std::string
{
    std::ostringstream out;
    for (int u = 0; u < g.order(); ++u)
        for_each_member(g.neighbours(u), [&](int v) {
            if (u < v)
                out << u << ' ' << v << '\n';
        });
    return out.str();
}

auto to_dot(const Graph& g) -> std::string
{
    std::ostringstream out;
    out << "graph G {\n";
    for (int v = 0; v < g.order(); ++v)
        out << "  " << v << ";\n";
    for (int u = 0; u < g.order(); ++u)
        for_each_member(g.neighbours(u), [&](int v) {
            if (u < v)
                out << "  " << u << " -- " << v << ";\n";
        });
    out << "}\n";
    return out.str();
}

} // namespace ore
