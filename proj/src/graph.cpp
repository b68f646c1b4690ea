#include "ore/graph.hpp"

#include "ore/errors.hpp"

#include <string>

namespace ore {

auto VertexSet::of(std::initializer_list<int> members) -> VertexSet
{
    VertexSet s;
    for (int v : members) {
        if (v < 0 || v >= max_order)
            throw IndexError("vertex " + std::to_string(v) + " outside set capacity");
        s.insert(v);
    }
    return s;
}

auto VertexSet::members() const -> std::vector<int>
{
    std::vector<int> out;
    out.reserve(size());
    for_each_member(*this, [&](int v) { out.push_back(v); });
    return out;
}

Graph::Graph(int order) : order_(order)
{
    if (order < 0 || order > max_order)
        throw CapacityError("graph order " + std::to_string(order) + " outside 0.." + std::to_string(max_order));
}

auto Graph::complete(int order) -> Graph
{
    Graph g(order);
    const std::uint64_t all = VertexSet::range(0, order).bits();
    for (int v = 0; v < order; ++v)
        g.rows_[v] = all & ~(std::uint64_t{1} << v);
    return g;
}

void Graph::check_vertex(int v) const
{
    if (v < 0 || v >= order_)
        throw IndexError("vertex " + std::to_string(v) + " out of range for order " + std::to_string(order_));
}

auto Graph::size() const -> int
{
    int twice = 0;
    for (int v = 0; v < order_; ++v)
        twice += std::popcount(rows_[v]);
    return twice / 2;
}

auto Graph::adjacent(int u, int v) const -> bool
{
    check_vertex(u);
    check_vertex(v);
    return (rows_[u] >> v) & 1U;
}

auto Graph::neighbours(int v) const -> VertexSet
{
    check_vertex(v);
    return VertexSet{rows_[v]};
}

auto Graph::degree(int v) const -> int
{
    check_vertex(v);
    return std::popcount(rows_[v]);
}

void Graph::add_edge(int u, int v)
{
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw LoopError("loop at vertex " + std::to_string(u));
    rows_[u] |= std::uint64_t{1} << v;
    rows_[v] |= std::uint64_t{1} << u;
}

void Graph::remove_edge(int u, int v)
{
    check_vertex(u);
    check_vertex(v);
    rows_[u] &= ~(std::uint64_t{1} << v);
    rows_[v] &= ~(std::uint64_t{1} << u);
}

auto Graph::operator==(const Graph& other) const -> bool
{
    if (order_ != other.order_)
        return false;
    for (int v = 0; v < order_; ++v)
        if (rows_[v] != other.rows_[v])
            return false;
    return true;
}

auto empty_graph(int order) -> Graph
{
    return Graph(order);
}

auto add_edge(Graph g, int u, int v) -> Graph
{
    g.add_edge(u, v);
    return g;
}

auto size(const Graph& g) -> int
{
    return g.size();
}

auto induced_subgraph(const Graph& g, VertexSet s) -> Graph
{
    if ((s - g.vertices()).bits() != 0)
        throw IndexError("vertex " + std::to_string((s - g.vertices()).first()) + " not in graph of order "
                         + std::to_string(g.order()));
    const auto kept = s.members();
    Graph h(static_cast<int>(kept.size()));
    for (std::size_t i = 0; i < kept.size(); ++i)
        for (std::size_t j = i + 1; j < kept.size(); ++j)
            if (g.adjacent(kept[i], kept[j]))
                h.add_edge(static_cast<int>(i), static_cast<int>(j));
    return h;
}

auto is_clique(const Graph& g, VertexSet s) -> bool
{
    bool ok = true;
    for_each_member(s, [&](int v) {
        if (((s - g.neighbours(v)) - VertexSet::of({v})).bits() != 0)
            ok = false;
    });
    return ok;
}

auto complement(const Graph& g) -> Graph
{
    Graph h = Graph::complete(g.order());
    for (int u = 0; u < g.order(); ++u)
        for_each_member(g.neighbours(u), [&](int v) {
            if (u < v)
                h.remove_edge(u, v);
        });
    return h;
}

auto relabel(const Graph& g, std::span<const int> perm) -> Graph
{
    if (static_cast<int>(perm.size()) != g.order())
        throw DomainError("permutation length does not match graph order");
    std::uint64_t seen = 0;
    for (int p : perm) {
        if (p < 0 || p >= g.order() || ((seen >> p) & 1U))
            throw DomainError("not a permutation of the vertex set");
        seen |= std::uint64_t{1} << p;
    }
    Graph h(g.order());
    for (int u = 0; u < g.order(); ++u)
        for_each_member(g.neighbours(u), [&](int v) {
            if (u < v)
                h.add_edge(perm[u], perm[v]);
        });
    return h;
}

} // namespace ore
