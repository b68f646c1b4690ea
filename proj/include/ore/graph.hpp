#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace ore {

/// Largest order a Graph can hold; matches the single-byte graph6 header.
inline constexpr int max_order = 62;

/// A set of vertex indices stored as a 64-bit mask.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

    static auto of(std::initializer_list<int> members) -> VertexSet;
    static constexpr auto range(int first, int last) -> VertexSet
    {
        VertexSet s;
        for (int v = first; v < last; ++v)
            s.insert(v);
        return s;
    }

    constexpr auto bits() const -> std::uint64_t { return bits_; }
    constexpr auto contains(int v) const -> bool { return (bits_ >> v) & 1U; }
    constexpr auto size() const -> int { return std::popcount(bits_); }
    constexpr auto empty() const -> bool { return bits_ == 0; }
    constexpr void insert(int v) { bits_ |= std::uint64_t{1} << v; }
    constexpr void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }

    /// Lowest member, or -1 when empty.
    constexpr auto first() const -> int { return bits_ ? std::countr_zero(bits_) : -1; }

    auto members() const -> std::vector<int>;

    constexpr auto operator|(VertexSet o) const -> VertexSet { return VertexSet{bits_ | o.bits_}; }
    constexpr auto operator&(VertexSet o) const -> VertexSet { return VertexSet{bits_ & o.bits_}; }
    constexpr auto operator-(VertexSet o) const -> VertexSet { return VertexSet{bits_ & ~o.bits_}; }
    constexpr auto operator==(const VertexSet&) const -> bool = default;

private:
    std::uint64_t bits_ = 0;
};

/// Calls f(v) for every member of s in ascending order.
template <typename F>
void for_each_member(VertexSet s, F&& f)
{
    for (std::uint64_t b = s.bits(); b != 0; b &= b - 1)
        f(std::countr_zero(b));
}

/// Simple undirected graph on vertices 0..order-1 with one adjacency bit row per vertex.
///
/// Rows are kept symmetric and irreflexive by every mutator.
class Graph {
public:
    explicit Graph(int order = 0);

    static auto complete(int order) -> Graph;

    auto order() const -> int { return order_; }
    auto size() const -> int;
    auto vertices() const -> VertexSet { return VertexSet::range(0, order_); }

    auto adjacent(int u, int v) const -> bool;
    auto neighbours(int v) const -> VertexSet;
    auto degree(int v) const -> int;

    /// Idempotent. Throws LoopError for u == v, IndexError for bad indices.
    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    /// Unchecked row access for hot loops.
    auto row(int v) const -> std::uint64_t { return rows_[v]; }

    auto operator==(const Graph& other) const -> bool;

private:
    void check_vertex(int v) const;

    int order_;
    std::array<std::uint64_t, max_order> rows_{};
};

auto empty_graph(int order) -> Graph;
auto add_edge(Graph g, int u, int v) -> Graph;
auto size(const Graph& g) -> int;

/// Subgraph induced by s, relabelled by ascending original index.
auto induced_subgraph(const Graph& g, VertexSet s) -> Graph;
auto is_clique(const Graph& g, VertexSet s) -> bool;
auto complement(const Graph& g) -> Graph;

/// Graph h with h.adjacent(perm[u], perm[v]) == g.adjacent(u, v). perm must be a permutation of 0..order-1.
auto relabel(const Graph& g, std::span<const int> perm) -> Graph;

} // namespace ore
