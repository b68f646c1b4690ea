#pragma once

// Independent reference computations used as test oracles. Nothing here calls
// into the metrics, canonical or serialize modules.

#include "ore/graph.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

namespace ore::testing {

inline auto path(int n) -> Graph
{
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v)
        g.add_edge(v, v + 1);
    return g;
}

inline auto cycle(int n) -> Graph
{
    Graph g = path(n);
    g.add_edge(n - 1, 0);
    return g;
}

inline auto without_edge(Graph g, int u, int v) -> Graph
{
    g.remove_edge(u, v);
    return g;
}

inline auto random_graph(std::mt19937& rng, int n, double p) -> Graph
{
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng))
                g.add_edge(u, v);
    return g;
}

inline auto random_permutation(std::mt19937& rng, int n) -> std::vector<int>
{
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

/// Floyd-Warshall over a plain matrix; -1 for disconnected.
inline auto floyd_diameter(const Graph& g) -> int
{
    const int n = g.order();
    constexpr int inf = 1 << 20;
    std::vector<std::vector<int>> dist(n, std::vector<int>(n, inf));
    for (int u = 0; u < n; ++u) {
        dist[u][u] = 0;
        for (int v = 0; v < n; ++v)
            if (u != v && g.adjacent(u, v))
                dist[u][v] = 1;
    }
    for (int m = 0; m < n; ++m)
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                dist[u][v] = std::min(dist[u][v], dist[u][m] + dist[m][v]);
    int best = 0;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (dist[u][v] >= inf)
                return -1;
            best = std::max(best, dist[u][v]);
        }
    return best;
}

/// Connectivity of g with the vertices of `removed` (bitmask) deleted, by DFS.
inline auto connected_without(const Graph& g, std::uint64_t removed) -> bool
{
    const int n = g.order();
    int start = -1;
    int remaining = 0;
    for (int v = 0; v < n; ++v)
        if (!((removed >> v) & 1U)) {
            ++remaining;
            if (start < 0)
                start = v;
        }
    if (remaining <= 1)
        return true;
    std::vector<bool> seen(n, false);
    std::vector<int> stack{start};
    seen[start] = true;
    int count = 1;
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (int v = 0; v < n; ++v)
            if (!seen[v] && !((removed >> v) & 1U) && g.adjacent(u, v)) {
                seen[v] = true;
                ++count;
                stack.push_back(v);
            }
    }
    return count == remaining;
}

inline auto reaches_without(const Graph& g, std::uint64_t removed, int s, int t) -> bool
{
    std::vector<bool> seen(g.order(), false);
    std::vector<int> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        if (u == t)
            return true;
        for (int v = 0; v < g.order(); ++v)
            if (!seen[v] && !((removed >> v) & 1U) && g.adjacent(u, v)) {
                seen[v] = true;
                stack.push_back(v);
            }
    }
    return false;
}

/// Smallest vertex set whose removal disconnects g; n - 1 for complete graphs.
inline auto brute_force_kappa(const Graph& g) -> int
{
    const int n = g.order();
    int best = n - 1;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
        const int k = std::popcount(s);
        if (k >= best || k >= n - 1)
            continue;
        if (!connected_without(g, s))
            best = k;
    }
    return best;
}

/// Smallest set avoiding s and t that separates them; s, t non-adjacent.
inline auto brute_force_separator(const Graph& g, int s, int t) -> int
{
    const int n = g.order();
    int best = n;
    const std::uint64_t forbidden = (std::uint64_t{1} << s) | (std::uint64_t{1} << t);
    for (std::uint64_t cut = 0; cut < (std::uint64_t{1} << n); ++cut) {
        if (cut & forbidden)
            continue;
        const int k = std::popcount(cut);
        if (k < best && !reaches_without(g, cut, s, t))
            best = k;
    }
    return best;
}

/// Isomorphism by trying every permutation with std::next_permutation.
inline auto brute_force_isomorphic(const Graph& g, const Graph& h) -> bool
{
    if (g.order() != h.order() || g.size() != h.size())
        return false;
    const int n = g.order();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool same = true;
        for (int u = 0; u < n && same; ++u)
            for (int v = u + 1; v < n && same; ++v)
                same = g.adjacent(u, v) == h.adjacent(perm[u], perm[v]);
        if (same)
            return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

/// graph6 written as a '0'/'1' string first, then chopped into sextets.
inline auto reference_graph6(const Graph& g) -> std::string
{
    std::string bits;
    for (int j = 1; j < g.order(); ++j)
        for (int i = 0; i < j; ++i)
            bits += g.adjacent(i, j) ? '1' : '0';
    while (bits.size() % 6 != 0)
        bits += '0';
    std::string out(1, static_cast<char>(63 + g.order()));
    for (std::size_t i = 0; i < bits.size(); i += 6)
        out += static_cast<char>(63 + std::stoi(bits.substr(i, 6), nullptr, 2));
    return out;
}

} // namespace ore::testing
