#pragma once

#include "ore/graph.hpp"

#include <vector>

namespace ore {

/// A validated instance (n, k, d): k >= 1, d >= 2, kd - k + 2 <= n <= max_order.
class Parameters {
public:
    /// Throws DomainError when the triple violates the invariants.
    Parameters(int n, int k, int d);

    auto n() const -> int { return n_; }
    auto k() const -> int { return k_; }
    auto d() const -> int { return d_; }
    /// Number of vertices outside the backbone, n - (kd - k + 2).
    auto outside() const -> int;

    auto operator==(const Parameters&) const -> bool = default;

private:
    int n_;
    int k_;
    int d_;
};

enum class FormulaMode {
    /// Attachment term multiplied by the number of outside vertices.
    corrected,
    /// Attachment term multiplied by the backbone order, as in the displayed statement.
    paper_literal,
};

auto order_T(int k, int d) -> int;
auto edge_count_T(int k, int d) -> int;

/// Most backbone vertices a single outside vertex can see without shortening
/// the pole distance: 3k for d >= 4, (d - 1)k + 4 - d for d = 2, 3.
auto attachment_cap(int k, int d) -> int;

auto formula_f(const Parameters& p, FormulaMode mode = FormulaMode::corrected) -> int;

/// True when the formula value exceeds C(n, 2) and so cannot be the size of any graph.
auto formula_exceeds_complete(const Parameters& p, FormulaMode mode) -> bool;

/// Blocks T_1..T_{d+1} of a backbone inside a constructed graph.
struct BlockMap {
    std::vector<VertexSet> blocks;
    int x = 0;
    int y = 0;
};

struct Construction {
    Graph graph;
    BlockMap blocks;
};

/// The sequential join K_1 v K_k v ... v K_k v K_1 with d - 1 middle blocks.
/// Layout: x = 0, then T_2..T_d in order, then y.
auto build_T(int k, int d) -> Construction;

enum class Side { first_three, last_three };

/// One extremal-family member: outside vertices attach to three consecutive
/// blocks starting at window_start (1-based); in a four-block window each
/// outside vertex takes either the first three or the last three.
struct FamilyMemberSpec {
    int window_start = 1;
    int window_len = 3;
    std::vector<Side> side_of;
};

/// Backbone plus an outside clique attached by spec. Outside vertices follow y.
auto build_family_member(const Parameters& p, const FamilyMemberSpec& spec) -> Construction;

/// Every window/side choice, kept only when the built graph has diameter d,
/// is k-connected and has formula_f(p) edges. One representative per
/// isomorphism class, sorted by canonical form. Requires n <= canonical_max_order.
auto enumerate_family(const Parameters& p) -> std::vector<Graph>;

/// Whether g is k-connected, has formula_f edges for its own (n, k, d) and is
/// isomorphic to a family member. Disconnected or out-of-domain graphs give false.
auto is_extremal(const Graph& g, int k) -> bool;

} // namespace ore
