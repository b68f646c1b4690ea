#include "ore/canonical.hpp"

#include "ore/errors.hpp"
#include "ore/serialize.hpp"

namespace ore {

namespace {

void check_guard(const Graph& g)
{
    if (g.order() > canonical_max_order)
        throw CapacityError("canonical form limited to order " + std::to_string(canonical_max_order) + ", got "
                            + std::to_string(g.order()));
}

// Branch and bound over vertex-to-position assignments. Placing a vertex at
// position p fixes the p bits of column p, so any prefix that already compares
// greater than the best prefix is abandoned.
class Minimizer {
public:
    explicit Minimizer(const Graph& g) : g_(g), n_(g.order()), total_bits_(n_ * (n_ - 1) / 2) {}

    auto run() -> std::vector<int>
    {
        placed_.assign(n_, -1);
        best_placed_.assign(n_, -1);
        have_best_ = false;
        search(0, 0, 0, 0);

        std::vector<int> perm(n_);
        for (int p = 0; p < n_; ++p)
            perm[best_placed_[p]] = p;
        return perm;
    }

private:
    void search(int position, std::uint64_t used, std::uint64_t prefix, int prefix_bits)
    {
        if (position == n_) {
            if (!have_best_ || prefix < best_) {
                best_ = prefix;
                best_placed_ = placed_;
                have_best_ = true;
            }
            return;
        }
        for (int v = 0; v < n_; ++v) {
            if ((used >> v) & 1U)
                continue;
            std::uint64_t next = prefix;
            for (int q = 0; q < position; ++q)
                next = (next << 1) | ((g_.row(placed_[q]) >> v) & 1U);
            const int next_bits = prefix_bits + position;
            if (have_best_) {
                const std::uint64_t best_prefix = next_bits == 0 ? 0 : best_ >> (total_bits_ - next_bits);
                if (next > best_prefix)
                    continue;
            }
            placed_[position] = v;
            search(position + 1, used | (std::uint64_t{1} << v), next, next_bits);
        }
    }

    const Graph& g_;
    int n_;
    int total_bits_;
    std::vector<int> placed_;
    std::vector<int> best_placed_;
    std::uint64_t best_ = 0;
    bool have_best_ = false;
};

} // namespace

auto canonical_labeling(const Graph& g) -> std::vector<int>
{
    check_guard(g);
    return Minimizer(g).run();
}

auto canonical_form(const Graph& g) -> CanonicalForm
{
    const Graph c = relabel(g, canonical_labeling(g));
    CanonicalForm form;
    form.order = g.order();
    for (int j = 1; j < c.order(); ++j)
        for (int i = 0; i < j; ++i)
            form.code = (form.code << 1) | (c.adjacent(i, j) ? 1U : 0U);
    return form;
}

auto CanonicalForm::graph() const -> Graph
{
    Graph g(order);
    int shift = order * (order - 1) / 2;
    for (int j = 1; j < order; ++j)
        for (int i = 0; i < j; ++i)
            if ((code >> --shift) & 1U)
                g.add_edge(i, j);
    return g;
}

auto CanonicalForm::bytes() const -> std::string
{
    return to_graph6(graph());
}

auto is_isomorphic(const Graph& g, const Graph& h) -> bool
{
    check_guard(g);
    check_guard(h);
    if (g.order() != h.order() || g.size() != h.size())
        return false;
    return canonical_form(g) == canonical_form(h);
}

} // namespace ore
