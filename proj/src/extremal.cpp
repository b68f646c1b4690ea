#include "ore/extremal.hpp"

#include "ore/canonical.hpp"
#include "ore/errors.hpp"
#include "ore/metrics.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace ore {

namespace {

void check_kd(int k, int d)
{
    if (k < 1)
        throw DomainError("k must be at least 1, got " + std::to_string(k));
    if (d < 2)
        throw DomainError("d must be at least 2, got " + std::to_string(d));
}

auto choose2(int m) -> int
{
    return m < 2 ? 0 : m * (m - 1) / 2;
}

} // namespace

Parameters::Parameters(int n, int k, int d) : n_(n), k_(k), d_(d)
{
    check_kd(k, d);
    // kd - k + 2 grows fast; bound the factors before multiplying.
    if (k > max_order || d > max_order || n < order_T(k, d))
        throw DomainError("n = " + std::to_string(n) + " leaves no room for the backbone of order kd - k + 2");
    if (n > max_order)
        throw DomainError("n = " + std::to_string(n) + " above " + std::to_string(max_order));
}

auto Parameters::outside() const -> int
{
    return n_ - order_T(k_, d_);
}

auto order_T(int k, int d) -> int
{
    check_kd(k, d);
    return k * d - k + 2;
}

auto edge_count_T(int k, int d) -> int
{
    check_kd(k, d);
    return ((3 * d - 5) * k * k + (5 - d) * k) / 2;
}

auto attachment_cap(int k, int d) -> int
{
    check_kd(k, d);
    return d >= 4 ? 3 * k : (d - 1) * k + 4 - d;
}

auto formula_f(const Parameters& p, FormulaMode mode) -> int
{
    const int k = p.k();
    const int d = p.d();
    const int r = p.outside();
    const int multiplier = mode == FormulaMode::corrected ? r : order_T(k, d);
    return edge_count_T(k, d) + choose2(r) + attachment_cap(k, d) * multiplier;
}

auto formula_exceeds_complete(const Parameters& p, FormulaMode mode) -> bool
{
    return formula_f(p, mode) > choose2(p.n());
}

auto build_T(int k, int d) -> Construction
{
    const int order = order_T(k, d);
    Construction c{Graph(order), {}};
    auto& blocks = c.blocks.blocks;
    blocks.push_back(VertexSet::of({0}));
    for (int i = 0; i < d - 1; ++i)
        blocks.push_back(VertexSet::range(1 + i * k, 1 + (i + 1) * k));
    blocks.push_back(VertexSet::of({order - 1}));
    c.blocks.x = 0;
    c.blocks.y = order - 1;

    for (std::size_t i = 0; i < blocks.size(); ++i) {
        const VertexSet span = i + 1 < blocks.size() ? blocks[i] | blocks[i + 1] : blocks[i];
        for_each_member(blocks[i], [&](int u) {
            for_each_member(span, [&](int v) {
                if (u != v)
                    c.graph.add_edge(u, v);
            });
        });
    }
    return c;
}

auto build_family_member(const Parameters& p, const FamilyMemberSpec& spec) -> Construction
{
    const int d = p.d();
    const int r = p.outside();
    const int blocks = d + 1;
    if (spec.window_len != 3 && spec.window_len != 4)
        throw DomainError("window length must be 3 or 4");
    if (spec.window_start < 1 || spec.window_start + spec.window_len - 1 > blocks)
        throw DomainError("window [" + std::to_string(spec.window_start) + ", "
                          + std::to_string(spec.window_start + spec.window_len - 1) + "] outside blocks 1.."
                          + std::to_string(blocks));
    if (static_cast<int>(spec.side_of.size()) != r)
        throw DomainError("side assignment covers " + std::to_string(spec.side_of.size()) + " vertices, expected "
                          + std::to_string(r));
    const auto firsts = std::count(spec.side_of.begin(), spec.side_of.end(), Side::first_three);
    if (spec.window_len == 3 && firsts != r)
        throw DomainError("three-block window admits only first_three assignments");
    if (spec.window_len == 4 && (firsts == 0 || firsts == r))
        throw DomainError("four-block window needs both sides non-empty");

    Construction backbone = build_T(p.k(), d);
    Construction c{Graph(p.n()), backbone.blocks};
    for (int u = 0; u < backbone.graph.order(); ++u)
        for_each_member(backbone.graph.neighbours(u), [&](int v) { c.graph.add_edge(u, v); });

    const int first_outside = backbone.graph.order();
    for (int i = 0; i < r; ++i) {
        const int u = first_outside + i;
        for (int j = i + 1; j < r; ++j)
            c.graph.add_edge(u, first_outside + j);
        // window_start is 1-based; last_three shifts the window by one block.
        const int from = spec.window_start - 1 + (spec.side_of[i] == Side::last_three ? 1 : 0);
        for (int b = from; b < from + 3; ++b)
            for_each_member(c.blocks.blocks[b], [&](int v) { c.graph.add_edge(u, v); });
    }
    return c;
}

auto enumerate_family(const Parameters& p) -> std::vector<Graph>
{
    if (p.n() > canonical_max_order)
        throw CapacityError("family enumeration limited to order " + std::to_string(canonical_max_order));

    const int r = p.outside();
    const int blocks = p.d() + 1;
    const int target = formula_f(p);

    std::vector<FamilyMemberSpec> specs;
    for (int s = 1; s + 2 <= blocks; ++s)
        specs.push_back({s, 3, std::vector<Side>(r, Side::first_three)});
    for (int s = 1; s + 3 <= blocks; ++s)
        for (int firsts = 1; firsts < r; ++firsts) {
            FamilyMemberSpec spec{s, 4, std::vector<Side>(r, Side::last_three)};
            std::fill_n(spec.side_of.begin(), firsts, Side::first_three);
            specs.push_back(std::move(spec));
        }

    std::map<CanonicalForm, Graph> members;
    for (const auto& spec : specs) {
        Graph g = build_family_member(p, spec).graph;
        if (g.size() != target)
            continue;
        const Diameter diam = diameter(g);
        if (diam.is_disconnected() || diam.value() != p.d() || !is_k_connected(g, p.k()))
            continue;
        members.try_emplace(canonical_form(g), std::move(g));
    }

    std::vector<Graph> out;
    out.reserve(members.size());
    for (auto& [form, g] : members)
        out.push_back(std::move(g));
    return out;
}

auto is_extremal(const Graph& g, int k) -> bool
{
    if (g.order() > canonical_max_order)
        throw CapacityError("extremality check limited to order " + std::to_string(canonical_max_order));
    if (g.order() == 0 || k < 1)
        return false;
    const Diameter diam = diameter(g);
    if (diam.is_disconnected() || diam.value() < 2)
        return false;
    const int d = diam.value();
    if (k > max_order || d > max_order || g.order() < order_T(k, d))
        return false;
    const Parameters p(g.order(), k, d);
    if (!is_k_connected(g, k) || g.size() != formula_f(p))
        return false;
    const CanonicalForm form = canonical_form(g);
    const auto family = enumerate_family(p);
    return std::any_of(family.begin(), family.end(), [&](const Graph& m) { return canonical_form(m) == form; });
}

} // namespace ore
