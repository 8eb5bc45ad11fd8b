#include "qsat/saturation.hpp"

#include <algorithm>
#include <numeric>

namespace qsat {

// ----- embedding search -----

namespace {

constexpr vertex_t kUnpinned = ~vertex_t{0};

struct Embedder {
    const CubeSubgraph& h;
    const Tree& t;
    std::vector<vertex_t> pin;    // forced image per tree vertex, or kUnpinned
    std::vector<int> order;       // assignment order (BFS from the root)
    std::vector<int> parent;      // tree parent in that order, -1 for the root
    std::vector<vertex_t> image;  // partial embedding
    std::vector<char> used;

    Embedder(const CubeSubgraph& h_, const Tree& t_)
        : h(h_),
          t(t_),
          pin(t_.order(), kUnpinned),
          parent(t_.order(), -1),
          image(t_.order(), 0),
          used(h_.vertex_count(), 0) {}

    void plan(int root) {
        order.assign(1, root);
        order.reserve(t.order());
        std::vector<char> seen(t.order(), 0);
        seen[root] = 1;
        for (std::size_t i = 0; i < order.size(); ++i)
            for (int u : t.adj[order[i]])
                if (!seen[u]) {
                    seen[u] = 1;
                    parent[u] = order[i];
                    order.push_back(u);
                }
    }

    bool feasible() const {
        if (t.order() > static_cast<int>(h.vertex_count())) return false;
        if (t.order() < 2) return true;
        // both sides of the tree must fit among vertices of positive degree,
        // one side per cube parity
        int usable[2] = {0, 0};
        for (vertex_t v = 0; v < h.vertex_count(); ++v)
            if (h.degree(v) > 0) ++usable[weight(v) & 1];
        auto color = t.bipartition();
        int c0 = static_cast<int>(std::count(color.begin(), color.end(), 0));
        int c1 = t.order() - c0;
        return (c0 <= usable[0] && c1 <= usable[1]) ||
               (c0 <= usable[1] && c1 <= usable[0]);
    }

    bool place(std::size_t i) {
        if (i == order.size()) return true;
        int tv = order[i];
        int need = t.degree(tv);
        auto try_at = [&](vertex_t cand) {
            if (used[cand] || h.degree(cand) < need) return false;
            used[cand] = 1;
            image[tv] = cand;
            if (place(i + 1)) return true;
            used[cand] = 0;
            return false;
        };
        if (parent[tv] < 0) {
            if (pin[tv] != kUnpinned) return try_at(pin[tv]);
            for (vertex_t v = 0; v < h.vertex_count(); ++v)
                if (try_at(v)) return true;
            return false;
        }
        vertex_t at = image[parent[tv]];
        if (pin[tv] != kUnpinned)
            return weight(at ^ pin[tv]) == 1 && h.has_edge(at, pin[tv]) &&
                   try_at(pin[tv]);
        std::uint32_t mask = h.adj_mask(at);
        while (mask) {
            int d = __builtin_ctz(mask);
            mask &= mask - 1;
            if (try_at(at ^ (vertex_t{1} << d))) return true;
        }
        return false;
    }
};

std::optional<embedding> embed(const CubeSubgraph& h, const Tree& t,
                               const std::vector<std::pair<int, vertex_t>>& pins) {
    Embedder e(h, t);
    for (auto [tv, at] : pins) {
        if (tv < 0 || tv >= t.order()) throw error("embedding pin: no such tree vertex");
        if (at >= h.vertex_count()) throw error("embedding pin: no such cube vertex");
        e.pin[tv] = at;
    }
    if (!e.feasible()) return std::nullopt;
    e.plan(pins.empty() ? t.centroid() : pins.front().first);
    if (!e.place(0)) return std::nullopt;
    return e.image;
}

}  // namespace

std::optional<embedding> contains_tree(const CubeSubgraph& h, const Tree& t) {
    return embed(h, t, {});
}

std::optional<embedding> contains_tree_rooted(const CubeSubgraph& h, const Tree& t,
                                              int root, vertex_t at) {
    return embed(h, t, {{root, at}});
}

bool creates_copy(const CubeSubgraph& h, const Tree& t, vertex_t u, vertex_t v) {
    if (u >= h.vertex_count() || v >= h.vertex_count() || weight(u ^ v) != 1 ||
        h.has_edge(u, v))
        throw error("creates_copy needs a missing cube edge");
    CubeSubgraph hp = h;
    hp.add_edge(u, v);
    for (auto [x, y] : t.edges()) {
        if (embed(hp, t, {{x, u}, {y, v}})) return true;
        if (embed(hp, t, {{x, v}, {y, u}})) return true;
    }
    return false;
}

// ----- saturation -----

SaturationReport is_saturated(const CubeSubgraph& h, const Tree& t) {
    SaturationReport r;
    r.edges = h.edge_count();
    if (auto w = contains_tree(h, t)) {
        r.witness = std::move(w);
        return r;
    }
    r.free = true;
    for (auto [u, v] : h.non_edges())
        if (!creates_copy(h, t, u, v)) r.failing_edges.emplace_back(u, v);
    r.saturated = r.failing_edges.empty();
    return r;
}

// ----- endpoints -----

namespace {

Tree remove_leaf(const Tree& t, int l) {
    Tree out;
    out.adj.resize(t.order() - 1);
    for (int v = 0; v < t.order(); ++v) {
        if (v == l) continue;
        for (int u : t.adj[v])
            if (u != l) out.adj[v > l ? v - 1 : v].push_back(u > l ? u - 1 : u);
    }
    return out;
}

}  // namespace

std::vector<vertex_t> endpoints(const CubeSubgraph& h, const Tree& t, EndpointRule rule) {
    std::vector<char> in_u(h.vertex_count(), 0);
    if (rule == EndpointRule::attachment) {
        for (int l : t.leaves()) {
            int p = t.adj[l][0];
            Tree rest = remove_leaf(t, l);
            int pr = p > l ? p - 1 : p;
            for (vertex_t v = 0; v < h.vertex_count(); ++v)
                if (!in_u[v] && contains_tree_rooted(h, rest, pr, v)) in_u[v] = 1;
        }
    } else {
        for (vertex_t v = 0; v < h.vertex_count(); ++v) {
            bool all = true, any = false;
            for (int d = 0; d < h.dim(); ++d) {
                if (h.adj_mask(v) >> d & 1) continue;
                bool c = creates_copy(h, t, v ^ (vertex_t{1} << d), v);
                all = all && c;
                any = any || c;
            }
            in_u[v] = rule == EndpointRule::every_nonedge ? all : any;
        }
    }
    std::vector<vertex_t> out;
    for (vertex_t v = 0; v < h.vertex_count(); ++v)
        if (in_u[v]) out.push_back(v);
    return out;
}

std::optional<CubeAutomorphism> endpoint_automorphism_exists(const CubeSubgraph& h,
                                                             const Tree& t,
                                                             EndpointRule rule) {
    int dim = h.dim();
    if (dim > 7) throw error("automorphism search supports dim <= 7");
    std::vector<char> in_u(h.vertex_count(), 0);
    for (vertex_t v : endpoints(h, t, rule)) in_u[v] = 1;
    std::vector<vertex_t> outside;
    for (vertex_t v = 0; v < h.vertex_count(); ++v)
        if (!in_u[v]) outside.push_back(v);
    if (outside.empty()) return CubeAutomorphism::identity(dim);

    // shifts alone first, then proper coordinate permutations with shifts
    auto first_shift = [&](const std::vector<vertex_t>& permuted)
        -> std::optional<vertex_t> {
        for (vertex_t s = 0; s < h.vertex_count(); ++s) {
            bool ok = true;
            for (vertex_t w : permuted)
                if (!in_u[w ^ s]) {
                    ok = false;
                    break;
                }
            if (ok) return s;
        }
        return std::nullopt;
    };

    std::vector<int> perm(dim);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<vertex_t> permuted(outside.size());
    do {
        CubeAutomorphism a{perm, 0};
        for (std::size_t i = 0; i < outside.size(); ++i) permuted[i] = a.apply(outside[i]);
        if (auto s = first_shift(permuted)) {
            a.shift = *s;
            return a;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

// ----- greedy completion -----

CubeSubgraph greedy_saturate(const CubeSubgraph& h0, const Tree& t,
                             const std::optional<edge_list>& candidates) {
    if (contains_tree(h0, t)) throw error("greedy_saturate: seed already contains the tree");
    edge_list pool;
    if (candidates) {
        pool = *candidates;
        for (auto& [u, v] : pool)
            if (u > v) std::swap(u, v);
        std::sort(pool.begin(), pool.end());
        pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
    } else {
        pool = h0.non_edges();
    }
    CubeSubgraph h = h0;
    for (auto [u, v] : pool) {
        if (h.has_edge(u, v)) continue;
        h.add_edge(u, v);
        if (contains_tree(h, t)) h.remove_edge(u, v);
    }
    return h;
}

}  // namespace qsat
