#include "ore/oracle.hpp"

#include "ore/canonical.hpp"
#include "ore/errors.hpp"
#include "ore/metrics.hpp"
#include "ore/serialize.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <utility>

namespace ore {

namespace {

void check_guard(const Parameters& p, const OracleOptions& options)
{
    const int guard = std::min(options.max_order, canonical_max_order);
    if (p.n() > guard)
        throw CapacityError("oracle limited to n <= " + std::to_string(guard) + ", got n = " + std::to_string(p.n()));
}

// True iff every eccentricity is at most d and at least one equals d; false
// when disconnected. Each BFS stops after d rounds.
auto diameter_equals(const std::uint64_t* rows, int n, int d) -> bool
{
    const std::uint64_t all = (std::uint64_t{1} << n) - 1;
    bool attained = false;
    for (int s = 0; s < n; ++s) {
        std::uint64_t reached = std::uint64_t{1} << s;
        std::uint64_t frontier = reached;
        for (int r = 0; r < d && reached != all; ++r) {
            std::uint64_t next = 0;
            for (std::uint64_t b = frontier; b != 0; b &= b - 1)
                next |= rows[std::countr_zero(b)];
            frontier = next & ~reached;
            reached |= next;
            if (r == d - 1 && frontier != 0)
                attained = true;
        }
        if (reached != all)
            return false;
    }
    return attained;
}

// Visits every graph obtained from K_n by deleting exactly `removed` edges.
// Edge masks are walked in increasing order with Gosper's hack.
class ComplementLevel {
public:
    ComplementLevel(const Parameters& p, const OracleOptions& options, std::uint64_t& candidates)
        : p_(p), options_(options), candidates_(candidates)
    {
        for (int j = 1; j < p.n(); ++j)
            for (int i = 0; i < j; ++i)
                edges_.emplace_back(i, j);
    }

    auto edge_count() const -> int { return static_cast<int>(edges_.size()); }

    template <typename F>
    void for_each_qualifying(int removed, F&& f)
    {
        const int total = edge_count();
        if (removed < 0 || removed > total)
            return;
        const int n = p_.n();
        const Graph full = Graph::complete(n);
        const std::uint64_t limit = std::uint64_t{1} << total;
        std::uint64_t mask = removed == 0 ? 0 : (std::uint64_t{1} << removed) - 1;
        while (true) {
            if (++candidates_ > options_.budget)
                throw BudgetError("oracle budget of " + std::to_string(options_.budget) + " candidates exhausted");
            std::array<std::uint64_t, canonical_max_order> rows;
            for (int v = 0; v < n; ++v)
                rows[v] = full.row(v);
            for (std::uint64_t b = mask; b != 0; b &= b - 1) {
                const auto& [u, v] = edges_[std::countr_zero(b)];
                rows[u] ^= std::uint64_t{1} << v;
                rows[v] ^= std::uint64_t{1} << u;
            }
            if (diameter_equals(rows.data(), n, p_.d())) {
                Graph g = full;
                for (std::uint64_t b = mask; b != 0; b &= b - 1) {
                    const auto& [u, v] = edges_[std::countr_zero(b)];
                    g.remove_edge(u, v);
                }
                if (is_k_connected(g, p_.k()))
                    f(g);
            }
            if (mask == 0)
                break;
            const std::uint64_t low = mask & -mask;
            const std::uint64_t ripple = mask + low;
            mask = (((ripple ^ mask) >> 2) / low) | ripple;
            if (mask >= limit)
                break;
        }
    }

private:
    const Parameters& p_;
    const OracleOptions& options_;
    std::uint64_t& candidates_;
    std::vector<std::pair<int, int>> edges_;
};

} // namespace

auto max_size_bruteforce(const Parameters& p, const OracleOptions& options) -> OracleReport
{
    check_guard(p, options);
    const auto start = std::chrono::steady_clock::now();

    OracleReport report{p, std::nullopt, {}};
    ComplementLevel level(p, options, report.candidates);
    for (int removed = 0; removed <= level.edge_count(); ++removed) {
        std::set<CanonicalForm> found;
        level.for_each_qualifying(removed, [&](const Graph& g) { found.insert(canonical_form(g)); });
        if (!found.empty()) {
            report.max_size = level.edge_count() - removed;
            for (const auto& form : found)
                report.extremal.push_back(form.bytes());
            std::sort(report.extremal.begin(), report.extremal.end());
            break;
        }
    }

    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
}

auto count_qualifying(const Parameters& p, int edges, const OracleOptions& options) -> std::uint64_t
{
    check_guard(p, options);
    std::uint64_t candidates = 0;
    std::uint64_t count = 0;
    ComplementLevel level(p, options, candidates);
    level.for_each_qualifying(level.edge_count() - edges, [&](const Graph&) { ++count; });
    return count;
}

auto verify_theorem(const Parameters& p, const OracleOptions& options) -> OracleReport
{
    const auto start = std::chrono::steady_clock::now();
    OracleReport report = max_size_bruteforce(p, options);
    report.verified = true;
    if (report.max_size) {
        report.corrected_match = *report.max_size == formula_f(p, FormulaMode::corrected);
        report.paper_literal_match = *report.max_size == formula_f(p, FormulaMode::paper_literal);

        std::vector<std::string> family;
        for (const auto& g : enumerate_family(p))
            family.push_back(canonical_form(g).bytes());
        std::sort(family.begin(), family.end());
        report.family_match = family == report.extremal;
    }
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
}

auto sweep(int n_max, int k_max, int d_max, const OracleOptions& options) -> std::vector<OracleReport>
{
    std::vector<OracleReport> reports;
    for (int n = 1; n <= n_max; ++n)
        for (int k = 1; k <= k_max; ++k)
            for (int d = 2; d <= d_max; ++d) {
                if (k * d - k + 2 > n)
                    continue;
                reports.push_back(verify_theorem(Parameters(n, k, d), options));
            }
    return reports;
}

auto to_json(const OracleReport& report) -> nlohmann::json
{
    nlohmann::json j;
    j["schema_version"] = report_schema_version;
    j["params"] = {{"n", report.params.n()}, {"k", report.params.k()}, {"d", report.params.d()}};
    j["max_size"] = report.max_size ? nlohmann::json(*report.max_size) : nlohmann::json(nullptr);
    j["infeasible"] = !report.max_size.has_value();
    j["extremal"] = report.extremal;
    j["formula_corrected"] = formula_f(report.params, FormulaMode::corrected);
    j["formula_paper_literal"] = formula_f(report.params, FormulaMode::paper_literal);
    if (report.verified) {
        j["corrected_match"] = report.corrected_match;
        j["paper_literal_match"] = report.paper_literal_match;
        j["family_match"] = report.family_match;
    }
    j["candidates"] = report.candidates;
    j["elapsed_seconds"] = report.elapsed.count();
    return j;
}

} // namespace ore
