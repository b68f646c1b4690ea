#pragma once

#include "ore/graph.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace ore {

/// Canonical forms are computed by exhaustive permutation search; orders above this are refused.
inline constexpr int canonical_max_order = 10;

/// Upper-triangle adjacency bits, column order x(0,1), x(0,2), x(1,2), ..., of the
/// relabelling that makes this bit string lexicographically smallest. The first
/// bit is the most significant bit of code, so integer order is string order.
struct CanonicalForm {
    int order = 0;
    std::uint64_t code = 0;

    /// The canonically labelled graph.
    auto graph() const -> Graph;
    /// graph6 string of the canonically labelled graph.
    auto bytes() const -> std::string;

    auto operator<=>(const CanonicalForm&) const = default;
};

/// perm[v] is the canonical label of vertex v.
auto canonical_labeling(const Graph& g) -> std::vector<int>;
auto canonical_form(const Graph& g) -> CanonicalForm;
auto is_isomorphic(const Graph& g, const Graph& h) -> bool;

} // namespace ore
