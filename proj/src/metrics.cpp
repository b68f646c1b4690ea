#include "ore/metrics.hpp"

#include "ore/errors.hpp"

#include <array>
#include <string>

namespace ore {

auto LayerProfile::reached() const -> VertexSet
{
    VertexSet all;
    for (auto layer : layers)
        all = all | layer;
    return all;
}

auto bfs_layers(const Graph& g, int source) -> LayerProfile
{
    if (source < 0 || source >= g.order())
        throw IndexError("bfs source " + std::to_string(source) + " out of range");

    LayerProfile profile;
    profile.source = source;
    std::uint64_t reached = std::uint64_t{1} << source;
    std::uint64_t frontier = reached;
    while (frontier != 0) {
        profile.layers.emplace_back(frontier);
        std::uint64_t next = 0;
        for_each_member(VertexSet{frontier}, [&](int v) { next |= g.row(v); });
        frontier = next & ~reached;
        reached |= frontier;
    }
    return profile;
}

auto Diameter::value() const -> int
{
    if (is_disconnected())
        throw DomainError("diameter of a disconnected graph");
    return value_;
}

auto diameter(const Graph& g) -> Diameter
{
    if (g.order() == 0)
        throw DomainError("diameter of the empty graph");
    const std::uint64_t all = g.vertices().bits();
    int best = 0;
    for (int s = 0; s < g.order(); ++s) {
        std::uint64_t reached = std::uint64_t{1} << s;
        std::uint64_t frontier = reached;
        int ecc = 0;
        while (true) {
            std::uint64_t next = 0;
            for_each_member(VertexSet{frontier}, [&](int v) { next |= g.row(v); });
            frontier = next & ~reached;
            if (frontier == 0)
                break;
            reached |= frontier;
            ++ecc;
        }
        if (reached != all)
            return Diameter::disconnected();
        best = std::max(best, ecc);
    }
    return Diameter::of(best);
}

namespace {

// Flow network on the vertex-split digraph: vertex v becomes in(v) = 2v and
// out(v) = 2v + 1 joined by a unit arc; graph edges give uncapacitated arcs
// out(u) -> in(v). Every arc carries at most one unit because each in-node
// has a single unit exit, so residual capacity fits in one bit per ordered pair
// once edge arcs are never cleared.
class SplitNetwork {
public:
    static constexpr int max_nodes = 2 * max_order;

    SplitNetwork(const Graph& g, int s, int t) : source_(out(s)), sink_(in(t))
    {
        for (int v = 0; v < g.order(); ++v) {
            if (v != s && v != t)
                set(in(v), out(v));
            for_each_member(g.neighbours(v), [&](int w) { set(out(v), in(w)); });
        }
    }

    auto augment() -> bool
    {
        std::array<int, max_nodes> parent;
        parent.fill(-1);
        Bits seen;
        seen.set(source_);
        std::array<int, max_nodes> queue;
        int head = 0;
        int tail = 0;
        queue[tail++] = source_;
        while (head < tail) {
            const int u = queue[head++];
            for (int word = 0; word < 2; ++word) {
                std::uint64_t fresh = residual_[u].w[word] & ~seen.w[word];
                for (; fresh != 0; fresh &= fresh - 1) {
                    const int v = word * 64 + std::countr_zero(fresh);
                    seen.set(v);
                    parent[v] = u;
                    if (v == sink_) {
                        for (int x = sink_; x != source_; x = parent[x])
                            push(parent[x], x);
                        return true;
                    }
                    queue[tail++] = v;
                }
            }
        }
        reachable_ = seen;
        return false;
    }

    /// Vertices whose in-node is on the source side of the final residual graph and out-node is not.
    auto min_cut(int order) const -> VertexSet
    {
        VertexSet cut;
        for (int v = 0; v < order; ++v)
            if (reachable_.test(in(v)) && !reachable_.test(out(v)))
                cut.insert(v);
        return cut;
    }

private:
    struct Bits {
        std::array<std::uint64_t, 2> w{};
        void set(int i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
        void reset(int i) { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
        auto test(int i) const -> bool { return (w[i >> 6] >> (i & 63)) & 1U; }
    };

    void push(int a, int b)
    {
        const bool edge_arc = (a & 1) && !(b & 1);
        const bool edge_reverse = !(a & 1) && (b & 1) && (a >> 1) != (b >> 1);
        if (!edge_arc)
            residual_[a].reset(b);
        if (!edge_reverse)
            residual_[b].set(a);
    }

    static auto in(int v) -> int { return 2 * v; }
    static auto out(int v) -> int { return 2 * v + 1; }
    void set(int a, int b) { residual_[a].set(b); }

    int source_;
    int sink_;
    std::array<Bits, max_nodes> residual_{};
    Bits reachable_;
};

void check_pair(const Graph& g, int s, int t)
{
    if (s == t)
        throw DomainError("local connectivity needs distinct endpoints");
    if (g.adjacent(s, t))
        throw DomainError("local connectivity undefined for adjacent endpoints " + std::to_string(s) + ", "
                          + std::to_string(t));
}

auto is_complete(const Graph& g) -> bool
{
    return 2 * g.size() == g.order() * (g.order() - 1);
}

} // namespace

auto local_connectivity(const Graph& g, int s, int t, int limit) -> int
{
    check_pair(g, s, t);
    SplitNetwork net(g, s, t);
    int flow = 0;
    while (flow < limit && net.augment())
        ++flow;
    return flow;
}

auto vertex_connectivity(const Graph& g) -> ConnectivityResult
{
    if (g.order() == 0)
        throw DomainError("vertex connectivity of the empty graph");
    if (is_complete(g))
        return {g.order() - 1, {}};
    if (bfs_layers(g, 0).reached() != g.vertices())
        return {0, {}};

    ConnectivityResult best{g.order() - 1, {}};
    for (int s = 0; s < g.order(); ++s) {
        for (int t = s + 1; t < g.order(); ++t) {
            if (g.adjacent(s, t))
                continue;
            SplitNetwork net(g, s, t);
            int flow = 0;
            while (flow < best.kappa && net.augment())
                ++flow;
            if (flow < best.kappa) {
                best.kappa = flow;
                best.witness_cut = net.min_cut(g.order());
            }
        }
    }
    return best;
}

auto is_k_connected(const Graph& g, int k) -> bool
{
    if (k < 1)
        throw DomainError("connectivity level must be at least 1");
    if (g.order() <= k)
        return false;
    for (int v = 0; v < g.order(); ++v)
        if (std::popcount(g.row(v)) < k)
            return false;
    if (bfs_layers(g, 0).reached() != g.vertices())
        return false;
    if (k == 1)
        return true;
    for (int s = 0; s < g.order(); ++s)
        for (int t = s + 1; t < g.order(); ++t)
            if (!g.adjacent(s, t) && local_connectivity(g, s, t, k) < k)
                return false;
    return true;
}

auto layer_structure_check(const Graph& g, int x, int y, int k) -> bool
{
    const Diameter diam = diameter(g);
    if (diam.is_disconnected())
        throw DomainError("layer structure check on a disconnected graph");
    const LayerProfile profile = bfs_layers(g, x);
    if (y < 0 || y >= g.order())
        throw IndexError("pole " + std::to_string(y) + " out of range");
    const int d = diam.value();
    if (profile.eccentricity() < d || !profile.layers[d].contains(y))
        throw DomainError("poles are not at distance equal to the diameter");

    for (int i = 1; i <= d - 1; ++i) {
        if (profile.layers[i].size() < k)
            return false;
        if (!is_clique(g, profile.layers[i] | profile.layers[i + 1]))
            return false;
    }
    return true;
}

} // namespace ore
