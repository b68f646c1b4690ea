#pragma once

#include "ore/extremal.hpp"
#include "ore/graph.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace ore {

struct OracleOptions {
    /// Largest n the exhaustive search accepts; never above canonical_max_order.
    int max_order = 8;
    /// Candidate graphs tested before aborting with BudgetError.
    std::uint64_t budget = 1'000'000'000;
};

inline constexpr int report_schema_version = 1;

struct OracleReport {
    Parameters params;
    /// Empty when no graph of order n has diameter d and connectivity >= k.
    std::optional<int> max_size;
    /// Canonical graph6 strings of all maximizers, sorted, one per isomorphism class.
    std::vector<std::string> extremal;
    /// Match flags are meaningful only once verify_theorem has filled them.
    bool verified = false;
    bool corrected_match = false;
    bool paper_literal_match = false;
    bool family_match = false;
    std::uint64_t candidates = 0;
    std::chrono::duration<double> elapsed{};
};

/// Exact maximum size over all labelled graphs on n vertices with diameter
/// exactly d and connectivity >= k, found by removing ever larger edge sets
/// from K_n until some candidate qualifies.
auto max_size_bruteforce(const Parameters& p, const OracleOptions& options = {}) -> OracleReport;

/// Number of labelled graphs with exactly `edges` edges satisfying the constraints.
auto count_qualifying(const Parameters& p, int edges, const OracleOptions& options = {}) -> std::uint64_t;

/// Runs the brute force and compares it with both formula modes and enumerate_family.
auto verify_theorem(const Parameters& p, const OracleOptions& options = {}) -> OracleReport;

/// verify_theorem over every valid (n, k, d) with n <= n_max, k <= k_max,
/// 2 <= d <= d_max, in lexicographic order.
auto sweep(int n_max, int k_max, int d_max, const OracleOptions& options = {}) -> std::vector<OracleReport>;

auto to_json(const OracleReport& report) -> nlohmann::json;

} // namespace ore
