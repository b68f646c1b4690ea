#pragma once

#include "ore/graph.hpp"

#include <limits>
#include <vector>

namespace ore {

/// Distance layers around a source: layers[r] holds the vertices at distance exactly r.
struct LayerProfile {
    int source = 0;
    std::vector<VertexSet> layers;

    auto eccentricity() const -> int { return static_cast<int>(layers.size()) - 1; }
    /// Union of all layers (the component of source).
    auto reached() const -> VertexSet;
};

auto bfs_layers(const Graph& g, int source) -> LayerProfile;

/// Diameter of a graph, or the disconnected sentinel.
class Diameter {
public:
    static auto disconnected() -> Diameter { return Diameter(-1); }
    static auto of(int value) -> Diameter { return Diameter(value); }

    auto is_disconnected() const -> bool { return value_ < 0; }
    /// Throws DomainError on the disconnected sentinel.
    auto value() const -> int;

    auto operator==(const Diameter&) const -> bool = default;

private:
    explicit Diameter(int value) : value_(value) {}
    int value_;
};

auto diameter(const Graph& g) -> Diameter;

/// Maximum number of internally vertex-disjoint s-t paths for non-adjacent s != t.
/// Stops augmenting once limit paths are found.
auto local_connectivity(const Graph& g, int s, int t, int limit = std::numeric_limits<int>::max()) -> int;

struct ConnectivityResult {
    int kappa = 0;
    /// Minimum separating set; empty for complete or disconnected graphs.
    VertexSet witness_cut;
};

/// kappa(K_n) = n - 1; kappa = 0 when disconnected. The witness is the source-side
/// minimum cut of the first (lexicographic) non-adjacent pair attaining the minimum.
auto vertex_connectivity(const Graph& g) -> ConnectivityResult;

/// order > k and kappa >= k.
auto is_k_connected(const Graph& g, int k) -> bool;

/// Checks that layers 1..d-1 around x each hold at least k vertices and that
/// every two consecutive layers together form a clique, where d = d(x, y)
/// must equal the diameter.
auto layer_structure_check(const Graph& g, int x, int y, int k) -> bool;

} // namespace ore
