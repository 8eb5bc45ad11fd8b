// Lower bounds, exact small-cube saturation numbers, disjoint-path counts
// from a vertex, and the two conjecture checkers.
//
// exact_sat enumerates edge subsets of Q_n by increasing size for n <= 3
// (at most 2^12 graphs) and runs a branch-and-bound over the 32 edges of
// Q_4: edges are decided in canonical order, a branch excluding an edge is
// cut as soon as even the largest remaining completion cannot cover it,
// and including an edge keeps the graph free.  pj_qk searches for j
// vertex-disjoint paths of exact length m leaving vertex 0, canonicalized
// by strictly increasing first directions, growing m until failure.

#include "qsat/bounds.hpp"

#include <algorithm>
#include <functional>

#include "qsat/constructions.hpp"
#include "qsat/saturation.hpp"

namespace qsat {

namespace {

std::int64_t pow2(int e) { return std::int64_t{1} << e; }

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

CubeSubgraph graph_from_mask(const edge_list& all, std::uint32_t mask, int dim) {
    CubeSubgraph g(dim);
    for (std::size_t i = 0; i < all.size(); ++i)
        if (mask >> i & 1) g.add_edge(all[i].first, all[i].second);
    return g;
}

}  // namespace

// ----- lower bound -----

Rational lower_bound(const Tree& t, int n) {
    if (n < 1 || n > kMaxDim) throw error("n must be in [1, 24]");
    int d = emin(t).value;
    if (d > n) throw error("emin(T) exceeds n; the tree cannot embed");
    return Rational(d - 1, 2 * n - d + 1) * Rational(n) * Rational(pow2(n - 1));
}

// ----- exact values -----

std::uint64_t exact_sat(const Tree& t, int n, std::uint64_t budget) {
    if (n < 0 || n > 4) throw error("exact_sat supports n <= 4");
    edge_list all = full_cube(n).edges();
    int e = static_cast<int>(all.size());
    if (n <= 3) {
        for (int c = 0; c <= e; ++c) {
            std::uint32_t mask = c == 0 ? 0 : (1u << c) - 1;
            while (true) {
                if (is_saturated(graph_from_mask(all, mask, n), t).saturated)
                    return static_cast<std::uint64_t>(c);
                if (c == 0) break;
                std::uint32_t lo = mask & -mask;  // Gosper's next c-subset
                std::uint32_t up = mask + lo;
                mask = up | (((up ^ mask) / lo) >> 2);
                if (mask >= (1u << e)) break;
            }
        }
        throw error("no saturated subgraph exists");
    }
    std::uint64_t best = UINT64_MAX;
    std::uint64_t nodes = 0;
    CubeSubgraph cur(n);
    std::function<void(int, std::uint64_t)> rec = [&](int idx, std::uint64_t chosen) {
        if (++nodes > budget) throw budget_error("exact_sat node budget exceeded");
        if (chosen >= best) return;
        if (idx == e) {
            if (is_saturated(cur, t).saturated) best = chosen;
            return;
        }
        auto [u, v] = all[idx];
        // exclude: viable only while the largest completion still covers uv
        CubeSubgraph upper = cur;
        for (int i = idx + 1; i < e; ++i) upper.add_edge(all[i].first, all[i].second);
        if (creates_copy(upper, t, u, v)) rec(idx + 1, chosen);
        // include: the graph must stay free
        cur.add_edge(u, v);
        if (!contains_tree(cur, t)) rec(idx + 1, chosen + 1);
        cur.remove_edge(u, v);
    };
    rec(0, 0);
    if (best == UINT64_MAX) throw error("no saturated subgraph exists");
    return best;
}

// ----- disjoint paths from a vertex -----

int pj_qk(int j, int k, std::uint64_t budget) {
    if (k < 1 || k > 5) throw error("pj_qk supports 1 <= k <= 5");
    if (j < 1) throw error("j must be >= 1");
    const int size = static_cast<int>(pow2(k));
    std::uint64_t nodes = 0;
    std::uint64_t used = 0;

    std::function<bool(int, int, int)> place;  // next path, min first direction
    std::function<bool(int, vertex_t, int, int, int)> walk;
    place = [&](int p, int dmin, int m) -> bool {
        if (p == j) return true;
        if (++nodes > budget) throw budget_error("pj_qk node budget exceeded");
        for (int d = dmin; d < k; ++d) {
            vertex_t v = vertex_t{1} << d;
            if (used >> v & 1) continue;
            used |= std::uint64_t{1} << v;
            if (walk(p, v, 1, d, m)) return true;
            used &= ~(std::uint64_t{1} << v);
        }
        return false;
    };
    walk = [&](int p, vertex_t at, int len, int first, int m) -> bool {
        if (len == m) return place(p + 1, first + 1, m);
        if (++nodes > budget) throw budget_error("pj_qk node budget exceeded");
        for (int d = 0; d < k; ++d) {
            vertex_t nxt = at ^ (vertex_t{1} << d);
            if (nxt == 0 || (used >> nxt & 1)) continue;
            used |= std::uint64_t{1} << nxt;
            if (walk(p, nxt, len + 1, first, m)) return true;
            used &= ~(std::uint64_t{1} << nxt);
        }
        return false;
    };

    int m = 0;
    while (1 + std::int64_t{j} * (m + 1) <= size) {
        used = 1;
        if (!place(0, 0, m + 1)) break;
        ++m;
    }
    return m;
}

std::vector<std::vector<vertex_t>> rotated_paths(int j, int k) {
    if (k < 2 || k > kMaxDim) throw error("k must be in [2, 24]");
    if (j < 1 || j > k) throw error("j must be in [1, k]");
    std::vector<std::vector<vertex_t>> out;
    for (int a = 0; a < j; ++a) {
        std::vector<vertex_t> p{0};
        vertex_t at = 0;
        for (int t = 0; t < k - 1; ++t) {
            at ^= vertex_t{1} << ((a + t) % k);
            p.push_back(at);
        }
        out.push_back(std::move(p));
    }
    return out;
}

// ----- conjecture checkers -----

PjPrediction conjecture_pj(int j, int n) {
    if (j < 1) throw error("j must be >= 1");
    if (n < 1 || n > kMaxDim) throw error("n must be in [1, 24]");
    PjPrediction r;
    r.j = j;
    r.n = n;
    for (int k = 2; k <= n / 2; ++k) r.e_count += binomial(n, k);
    r.o_count = (std::uint64_t{1} << n) - r.e_count - 1;
    r.a = r.e_count / j;
    r.b = r.o_count / j;
    r.predicted = std::min(r.a, r.b) == r.b ? 2 * static_cast<std::int64_t>(r.b)
                                            : 2 * static_cast<std::int64_t>(r.a) + 1;
    if (n <= 5) {
        try {
            r.actual = pj_qk(j, n);
            r.agrees = *r.actual == r.predicted;
        } catch (const budget_error&) {
        }
    }
    return r;
}

SatBoundCheck conjecture_sat_upper(const Tree& t, int n) {
    if (t.order() < 2) throw error("tree must have at least one edge");
    int v = t.order();
    std::vector<std::vector<int>> dist(v, std::vector<int>(v, -1));
    std::vector<std::vector<int>> par(v, std::vector<int>(v, -1));
    for (int s = 0; s < v; ++s) {
        std::vector<int> q{s};
        dist[s][s] = 0;
        for (std::size_t head = 0; head < q.size(); ++head) {
            int u = q[head];
            for (int w : t.adj[u])
                if (dist[s][w] < 0) {
                    dist[s][w] = dist[s][u] + 1;
                    par[s][w] = u;
                    q.push_back(w);
                }
        }
    }
    int du = 0, dv = 1, dmax = 0;
    for (int a = 0; a < v; ++a)
        for (int b = a + 1; b < v; ++b)
            if (dist[a][b] > dmax) {
                dmax = dist[a][b];
                du = a;
                dv = b;
            }
    std::vector<char> on_path(v, 0);
    for (int w = dv; w >= 0; w = par[du][w]) {
        on_path[w] = 1;
        if (w == du) break;
    }
    SatBoundCheck out;
    for (int w = 0; w < v; ++w) {
        int d = INT32_MAX;
        for (int p = 0; p < v; ++p)
            if (on_path[p]) d = std::min(d, dist[w][p]);
        out.c = std::max(out.c, d);
    }
    out.delta = emin(t).value;
    out.bound = Rational(out.delta + out.c - 1) * Rational(pow2(n - 1));
    out.exact = exact_sat(t, n);
    out.holds = Rational(static_cast<std::int64_t>(out.exact)) <= out.bound;
    return out;
}

// ----- interval summary -----

SatInterval satnum(const std::string& tree_literal, int n) {
    Tree t = parse_tree(tree_literal);
    SatInterval s;
    s.tree = tree_literal;
    s.n = n;
    s.lower = lower_bound(t, n);
    for (const Construction& c : applicable_constructions(tree_literal, n)) {
        if (!c.graph) continue;
        if (!s.upper || c.report.edges < *s.upper) {
            s.upper = c.report.edges;
            s.upper_method = c.report.method;
        }
    }
    if (n <= 3) s.exact = exact_sat(t, n);
    return s;
}

}  // namespace qsat
