// Builders for saturated subgraphs: disjoint subcubes, deleted-vertex path
// graphs, the two-block generalized-star construction, dominating-set
// stars, Hamming-code double/multi stars, and the kappa-constructions for
// caterpillars and very generalized stars.
//
// The deleted-set machinery writes j - 1 in binary as a_{k-1} ... a_1 and
// removes, for each a_i = 1, the even vertices whose leading set bit is i,
// plus the all-zeros vertex.  The longest surviving path then chains
// through the subcubes with a_i = 0 in increasing order of i: jump into
// the subcube with leading bit i, walk a Hamiltonian path of its low i
// coordinates, and jump onward.  Starting the path from an arbitrary odd
// vertex first drains that vertex's own subcube (when its index carries
// a_i = 0) or detours through the untouched top half (when a_i = 1).

#include "qsat/constructions.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <sstream>

#include "qsat/bounds.hpp"
#include "qsat/codes.hpp"
#include "qsat/matching.hpp"
#include "qsat/saturation.hpp"

namespace qsat {

namespace {

vertex_t bit(int d) { return vertex_t{1} << d; }

std::int64_t pow2(int e) { return std::int64_t{1} << e; }

// ----- hamiltonian path pieces -----

// gray-code order of the d low bits starting at `from`
std::vector<vertex_t> gray_path(int d, vertex_t from) {
    std::vector<vertex_t> p;
    p.reserve(std::size_t{1} << d);
    for (vertex_t x = 0; x < bit(d); ++x) p.push_back(from ^ (x ^ (x >> 1)));
    return p;
}

// hamiltonian path u -> v over the subcube spanned by `dirs` (ascending);
// u and v must differ in an odd number of those directions
std::vector<vertex_t> ham_between(const std::vector<int>& dirs, vertex_t u, vertex_t v) {
    if (dirs.size() == 1) return {u, v};
    int c = -1;
    for (int d : dirs)
        if ((u ^ v) >> d & 1) {
            c = d;
            break;
        }
    std::vector<int> rest;
    for (int d : dirs)
        if (d != c) rest.push_back(d);
    vertex_t m = u ^ bit(rest.front());
    std::vector<vertex_t> path = ham_between(rest, u, m);
    std::vector<vertex_t> tail = ham_between(rest, m ^ bit(c), v);
    path.insert(path.end(), tail.begin(), tail.end());
    return path;
}

// path u -> v of length 2^d - 2 (all vertices but one) over `dirs`;
// u and v must be distinct and differ in an even number of directions
std::vector<vertex_t> near_ham(const std::vector<int>& dirs, vertex_t u, vertex_t v) {
    if (dirs.size() == 2) return {u, u ^ bit(dirs.front()), v};
    int c = -1;
    for (int d : dirs)
        if ((u ^ v) >> d & 1) {
            c = d;
            break;
        }
    std::vector<int> rest;
    for (int d : dirs)
        if (d != c) rest.push_back(d);
    vertex_t forbidden = v ^ bit(c);  // the vertex that must stay reachable
    vertex_t m = 0;
    for (int d : rest)
        if ((u ^ bit(d)) != forbidden) {
            m = u ^ bit(d);
            break;
        }
    std::vector<vertex_t> path = ham_between(rest, u, m);
    std::vector<vertex_t> tail = near_ham(rest, m ^ bit(c), v);
    path.insert(path.end(), tail.begin(), tail.end());
    return path;
}

// ----- deleted sets and chains -----

bool digit(int j, int i) { return (j - 1) >> (i - 1) & 1; }  // a_i of j - 1

std::vector<vertex_t> deleted_set(int k, int j) {
    std::vector<vertex_t> c{0};
    for (int i = 1; i < k; ++i) {
        if (!digit(j, i)) continue;
        for (vertex_t w = 0; w < bit(i); ++w)
            if (weight(bit(i) | w) % 2 == 0) c.push_back(bit(i) | w);
    }
    std::sort(c.begin(), c.end());
    return c;
}

// chain from 0..01 through every subcube with a_i = 0 (i != skip),
// smallest leading bit first
std::vector<vertex_t> chain_path(int k, int j, int skip) {
    std::vector<vertex_t> path{1};
    for (int i = 1; i < k; ++i) {
        if (i == skip || digit(j, i)) continue;
        vertex_t low = path.back();  // all bits of the endpoint are below i
        for (vertex_t x : gray_path(i, low)) path.push_back(bit(i) | x);
    }
    return path;
}

// ----- shared report plumbing -----

void set_counts(Construction& c) {
    if (c.graph) c.report.edges = c.graph->edge_count();
}

std::string join_degrees(const std::vector<int>& ks) {
    std::string s;
    for (std::size_t i = 0; i < ks.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(ks[i]);
    }
    return s;
}

// component label for every member of a dominating set, breadth-first
std::vector<int> pds_components(const DominatingSet& s, int* count) {
    std::vector<int> comp(std::size_t{1} << s.dim, -1);
    std::vector<char> in(std::size_t{1} << s.dim, 0);
    for (vertex_t v : s.members) in[v] = 1;
    int next = 0;
    for (vertex_t v : s.members) {
        if (comp[v] >= 0) continue;
        std::vector<vertex_t> queue{v};
        comp[v] = next;
        while (!queue.empty()) {
            vertex_t u = queue.back();
            queue.pop_back();
            for (int d = 0; d < s.dim; ++d) {
                vertex_t w = u ^ bit(d);
                if (in[w] && comp[w] < 0) {
                    comp[w] = next;
                    queue.push_back(w);
                }
            }
        }
        ++next;
    }
    if (count) *count = next;
    return comp;
}

// all cube edges of Q_dim whose endpoints both satisfy `keep`
edge_list edges_among(int dim, const std::vector<char>& keep) {
    edge_list out;
    for (vertex_t u = 0; u < bit(dim); ++u) {
        if (!keep[u]) continue;
        for (int d = 0; d < dim; ++d) {
            vertex_t w = u ^ bit(d);
            if (w > u && keep[w]) out.emplace_back(u, w);
        }
    }
    return out;
}

}  // namespace

// ----- deleted-vertex paths -----

DeletedPath longest_path_after_deletion(int k, int j, std::optional<vertex_t> start) {
    if (k < 1 || k > kMaxDim) throw error("k must be in [1, 24]");
    if (j < 1 || std::int64_t{j} > pow2(k - 1)) throw error("j must be in [1, 2^{k-1}]");
    DeletedPath out;
    out.deleted = deleted_set(k, j);
    if (!start) {
        out.path = chain_path(k, j, -1);
        return out;
    }
    vertex_t v = *start;
    if (v >= bit(k)) throw error("start vertex out of range");
    if (weight(v) % 2 == 0) throw error("start vertex must have odd weight");
    if (v == 1) {
        out.path = chain_path(k, j, -1);
        return out;
    }
    if (k < 2 || std::int64_t{j} > pow2(k - 2))
        throw error("a chosen start vertex requires j <= 2^{k-2}");
    int h = 31 - __builtin_clz(v);  // leading set bit
    if (!digit(j, h)) {
        // drain v's own subcube down to its local 0..01, then chain onward
        std::vector<int> dirs(h);
        for (int d = 0; d < h; ++d) dirs[d] = d;
        for (vertex_t x : ham_between(dirs, v ^ bit(h), 1)) out.path.push_back(bit(h) | x);
    } else {
        // detour through the untouched top half, ending at 10..01
        std::vector<int> dirs(k - 1);
        for (int d = 0; d < k - 1; ++d) dirs[d] = d;
        out.path.push_back(v);
        for (vertex_t x : near_ham(dirs, v, 1)) out.path.push_back(bit(k - 1) | x);
        h = k - 1;  // the top subcube is now consumed
    }
    std::vector<vertex_t> rest = chain_path(k, j, h);
    out.path.insert(out.path.end(), rest.begin(), rest.end());
    return out;
}

// ----- verification -----

SaturationReport verify_construction(Construction& c, const Tree& t) {
    if (!c.graph) return {};
    SaturationReport r = is_saturated(*c.graph, t);
    c.report.verified = r.free && r.saturated;
    if (!r.free) c.report.notes.push_back("verification: graph is not free");
    if (r.free && !r.saturated)
        c.report.notes.push_back("verification: " + std::to_string(r.failing_edges.size()) +
                                 " missing edges create no copy");
    return r;
}

// ----- disjoint subcubes -----

Construction disjoint_subcube(const Tree& t, int n, const std::string& tree_literal) {
    if (t.order() < 2) throw error("tree must have at least one edge");
    int cdt = cubical_dimension(t);
    if (n < cdt) throw error("n must be at least cd(T) = " + std::to_string(cdt));
    int k = INT_MAX;
    for (auto [x, y] : t.edges()) {
        // split T at xy and take the larger cubical dimension of the parts
        std::vector<int> side(t.order(), -1);
        std::vector<int> stack{x};
        side[x] = 0;
        side[y] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : t.adj[u])
                if (side[w] < 0) {
                    side[w] = 0;
                    stack.push_back(w);
                }
        }
        stack = {y};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : t.adj[u])
                if (side[w] < 0) {
                    side[w] = 1;
                    stack.push_back(w);
                }
        }
        int worst = 0;
        for (int part = 0; part < 2; ++part) {
            std::vector<int> label(t.order(), -1);
            int m = 0;
            for (int u = 0; u < t.order(); ++u)
                if (side[u] == part) label[u] = m++;
            Tree piece;
            piece.adj.assign(m, {});
            for (auto [a, b] : t.edges())
                if (side[a] == part && side[b] == part) {
                    piece.adj[label[a]].push_back(label[b]);
                    piece.adj[label[b]].push_back(label[a]);
                }
            worst = std::max(worst, cubical_dimension(piece));
        }
        k = std::min(k, worst);
    }
    if (k >= cdt)
        throw hypothesis_error("removing one edge never lowers the cubical dimension");
    Construction c;
    c.report.tree = tree_literal;
    c.report.method = "subcube";
    c.report.n = n;
    c.report.base_dim = k;
    c.report.formula = Rational(k) * Rational(pow2(n - 1));
    c.graph = lift_to_qn(full_cube(k), full_cube(k), n);
    set_counts(c);
    return c;
}

// ----- paths -----

Construction path_construction(int k, int n) {
    if (k <= 4) throw error("path construction requires k > 4");
    int i = 0;
    while (pow2(i + 1) < k) ++i;  // k = 2^i + r with 0 < r <= 2^i
    int r = k - static_cast<int>(pow2(i));
    Construction c;
    c.report.tree = "path:" + std::to_string(k);
    c.report.method = "path";
    c.report.n = n;
    if (r % 2 == 1) {
        int base = i + 1;
        c.report.base_dim = base;
        if (base > kMaxDim) throw budget_error("base cube exceeds the dimension cap");
        if (n < base) throw error("n must be at least " + std::to_string(base));
        int j = static_cast<int>(pow2(i - 1)) - (r - 1) / 2;
        CubeSubgraph h = full_cube(base);
        for (vertex_t v : deleted_set(base, j))
            for (vertex_t w : neighbors(v, base)) h.remove_edge(v, w);
        c.graph = lift_to_qn(h, translate(h, 1), n);
        c.report.formula =
            Rational(std::int64_t{i + 1} * (k - 1), pow2(i + 1)) * Rational(pow2(n - 1));
    } else {
        int base = i + 2;
        c.report.base_dim = base;
        if (base > kMaxDim) throw budget_error("base cube exceeds the dimension cap");
        if (n < base) throw error("n must be at least " + std::to_string(base));
        int j = static_cast<int>(pow2(i - 1)) - (r - 2) / 2;
        std::vector<vertex_t> del = deleted_set(i + 1, j);
        vertex_t flip = vertex_t{3} << (i - 1);  // the top two coordinates of Q_{i+1}
        std::vector<char> in_c(std::size_t{1} << (i + 1), 0);
        std::vector<char> in_c2(std::size_t{1} << (i + 1), 0);
        for (vertex_t v : del) {
            in_c[v] = 1;
            in_c2[v ^ flip] = 1;
        }
        for (vertex_t v = 0; v < bit(i + 1); ++v)
            if (in_c[v] && in_c2[v]) throw error("internal: deleted sets intersect");
        CubeSubgraph h(base);
        vertex_t top = bit(i + 1);
        for (vertex_t u = 0; u < top; ++u)
            for (int d = 0; d <= i; ++d) {
                vertex_t w = u ^ bit(d);
                if (w < u) continue;
                if (!in_c[u] && !in_c[w]) h.add_edge(u, w);
                if (!in_c2[u] && !in_c2[w]) h.add_edge(top | u, top | w);
            }
        for (vertex_t v : del) {
            h.add_edge(v, top | v);
            h.add_edge(v ^ flip, top | (v ^ flip));
        }
        c.graph = lift_to_qn(h, translate(h, 1), n);
        c.report.formula =
            (Rational(std::int64_t{i} * (k - 2), pow2(i + 1)) + Rational(1)) *
            Rational(pow2(n - 1));
    }
    set_counts(c);
    return c;
}

// ----- stars -----

Construction star_construction(int k, int n) {
    if (k < 2) throw error("star construction requires k >= 2");
    int t = 0;
    while (pow2(t + 1) - 1 <= k) ++t;  // k = (2^t - 1) + m with 0 <= m < 2^t
    int m = k - static_cast<int>(pow2(t) - 1);
    Construction c;
    c.report.tree = "star:" + std::to_string(k);
    c.report.method = "star";
    c.report.n = n;
    c.report.base_dim = k;
    if (n < k) throw error("n must be at least k");
    DominatingSet pds = weichsel_pds(k, t);
    std::vector<char> in(std::size_t{1} << k, 0);
    for (vertex_t v : pds.members) in[v] = 1;
    CubeSubgraph h(k);
    for (vertex_t u = 0; u < bit(k); ++u)
        for (int d = 0; d < k; ++d) {
            vertex_t w = u ^ bit(d);
            if (w > u && in[u] == in[w]) h.add_edge(u, w);
        }
    // translating by the top coordinate moves the code block, so members
    // land outside the set and the two layers interleave soundly
    c.graph = lift_to_qn(h, translate(h, bit(k - 1)), n);
    c.report.formula =
        (Rational(k - 2) + Rational(2, k - m + 1)) * Rational(pow2(n - 1));
    set_counts(c);
    return c;
}

// ----- generalized stars -----

Construction genstar_construction(int k, int m, int n) {
    if (k < 2) throw error("generalized star needs k >= 2 legs");
    if (m < 2) throw error("two-block construction needs leg length m >= 2");
    Construction c;
    c.report.tree = "genstar:" + std::to_string(k) + "x" + std::to_string(m);
    c.report.method = "genstar";
    c.report.n = n;
    c.report.base_dim = k;
    if (k > kMaxDim) throw budget_error("base cube exceeds the dimension cap");
    if (n < k) throw error("n must be at least k");
    int mp = 0;
    while (pow2(mp + 1) < m) ++mp;  // 2^{m'} < m <= 2^{m'+1}
    int f = m - static_cast<int>(pow2(mp));  // 1 <= f <= 2^{m'}
    int j = 0;
    while (pow2(j) < f) ++j;  // smallest j with f <= 2^j
    if (mp > k - 1 || j > k - 1 - mp)
        throw error("legs too long to block-decompose Q_{k-1}");

    // the leg-count hypothesis m <= P_{k-1}(Q_{k-1}) is reported, not gated
    if (k - 1 <= 5) {
        try {
            int cap = pj_qk(k - 1, k - 1);
            if (m > cap)
                c.report.notes.push_back("hypothesis fails: m > P_{k-1}(Q_{k-1}) = " +
                                         std::to_string(cap));
        } catch (const budget_error&) {
            c.report.notes.push_back("hypothesis unchecked: P_{k-1}(Q_{k-1}) out of budget");
        }
    } else {
        c.report.notes.push_back("hypothesis unchecked: P_{k-1}(Q_{k-1}) out of budget");
    }

    vertex_t top = bit(k - 1);
    CubeSubgraph h(k);
    for (vertex_t u = 0; u < top; ++u)  // A = (0, Q_{k-1}), complete
        for (int d = 0; d < k - 1; ++d) {
            vertex_t w = u ^ bit(d);
            if (w > u) h.add_edge(u, w);
        }
    for (vertex_t u = top; u < bit(k); ++u)  // B splits into m'-cubes b_i
        for (int d = 0; d < mp; ++d) {
            vertex_t w = u ^ bit(d);
            if (w > u) h.add_edge(u, w);
        }

    // base points of the b_i form a (k-1-m')-cube; partition it into
    // j-cubes c_i, walk a hamiltonian path through each, and single out
    // the vertex whose longest in-path run is exactly f - 1
    Tree rooted_leg = build_path(std::max(f, 1));
    int cdim = k - 1 - mp;
    std::uint64_t blocks = std::uint64_t{1} << (cdim - j);
    std::vector<vertex_t> heads;
    for (std::uint64_t u = 0; u < blocks; ++u) {
        std::vector<vertex_t> walk;
        for (vertex_t z = 0; z < bit(j); ++z) {
            vertex_t w = (static_cast<vertex_t>(u) << j) | (z ^ (z >> 1));
            walk.push_back(top | (w << mp));
        }
        for (std::size_t p = 0; p + 1 < walk.size(); ++p) h.add_edge(walk[p], walk[p + 1]);
        vertex_t head = walk[static_cast<std::size_t>(pow2(j) - f)];
        heads.push_back(head);
        h.add_edge(head, head ^ top);  // the single A-B edge of this block
        if (f == pow2(j)) {
            // saturate the block outright: every edge of the j-cube
            for (vertex_t z = 0; z < bit(j); ++z)
                for (int d = 0; d < j; ++d) {
                    vertex_t z2 = z ^ bit(d);
                    if (z2 < z) continue;
                    vertex_t a = top | (((static_cast<vertex_t>(u) << j) | z) << mp);
                    vertex_t b = top | (((static_cast<vertex_t>(u) << j) | z2) << mp);
                    if (!h.has_edge(a, b)) h.add_edge(a, b);
                }
        } else if (j > 0) {
            // greedily add block edges while no path of length f leaves
            // the head inside the block
            CubeSubgraph block(k);
            for (std::size_t p = 0; p + 1 < walk.size(); ++p)
                block.add_edge(walk[p], walk[p + 1]);
            for (vertex_t z = 0; z < bit(j); ++z)
                for (int d = 0; d < j; ++d) {
                    vertex_t z2 = z ^ bit(d);
                    if (z2 < z) continue;
                    vertex_t s = top | (((static_cast<vertex_t>(u) << j) | z) << mp);
                    vertex_t s2 = top | (((static_cast<vertex_t>(u) << j) | z2) << mp);
                    if (block.has_edge(s, s2)) continue;
                    block.add_edge(s, s2);
                    if (contains_tree_rooted(block, rooted_leg, 0, head))
                        block.remove_edge(s, s2);
                }
            for (auto [x, y] : block.edges())
                if (!h.has_edge(x, y)) h.add_edge(x, y);
        }
    }

    // remaining A-B edges join greedily until saturated
    Tree gs = build_genstar(k, m);
    edge_list crossing;
    for (vertex_t u = 0; u < top; ++u)
        if (!h.has_edge(u, u | top)) crossing.emplace_back(u, u | top);
    h = greedy_saturate(h, gs, crossing);

    c.graph = lift_to_qn(h, h, n);
    c.report.formula =
        (Rational(k + 1 + mp) + Rational(j, pow2(mp))) * Rational(pow2(n - 2));
    set_counts(c);
    if (Rational(static_cast<std::int64_t>(c.report.edges)) > c.report.formula)
        c.report.notes.push_back("edge count exceeds the certified bound");
    return c;
}

// ----- double stars -----

Construction doublestar_construction(int k, int r, int n) {
    if (r < 2 || k < r) throw error("double star needs k >= r >= 2");
    int i = 2;
    while (pow2(i) - 1 <= k) ++i;  // kappa = 2^i - 1 > k
    int kappa = static_cast<int>(pow2(i) - 1);
    if (i > 4) throw budget_error("kappa exceeds the Q_15 budget");
    Construction c;
    c.report.tree = "cat:" + std::to_string(k) + "," + std::to_string(r);
    c.report.method = "doublestar";
    c.report.n = n;
    c.report.base_dim = kappa;
    if (n < kappa) throw error("n must be at least kappa = " + std::to_string(kappa));
    DominatingSet code = hamming_code(i);
    CubeSubgraph h(kappa);
    for (vertex_t v : code.members)
        for (int d = 0; d < kappa; ++d)
            if (!h.has_edge(v, v ^ bit(d))) h.add_edge(v, v ^ bit(d));
    if (r > 2) {
        std::vector<char> outside(std::size_t{1} << kappa, 1);
        for (vertex_t v : code.members) outside[v] = 0;
        h = raise_to_degree(h, r - 1, edges_among(kappa, outside));
    }
    c.graph = lift_to_qn(h, h, n);
    c.report.formula = Rational(r) * Rational(pow2(n - 1));
    c.report.proof_count = (Rational(kappa * pow2(kappa), kappa + 1) +
                            Rational((r - 2) * kappa * pow2(kappa - 1), kappa + 1)) *
                           Rational(pow2(n - kappa));
    set_counts(c);
    if (c.report.proof_count &&
        Rational(static_cast<std::int64_t>(c.report.edges)) != *c.report.proof_count)
        c.report.notes.push_back("direct count differs from the count expression");
    return c;
}

// ----- multi stars -----

Construction multistar_construction(const std::vector<int>& degrees, int n) {
    int m = static_cast<int>(degrees.size());
    if (m != 3 && m != 4) throw error("multistar covers spines of 3 or 4 vertices");
    for (int d : degrees)
        if (d < 2) throw error("spine degrees must be >= 2");
    int r = *std::min_element(degrees.begin(), degrees.end());
    int kmax = *std::max_element(degrees.begin(), degrees.end());
    bool middle = (m == 3) ? degrees[1] == r : (degrees[1] == r || degrees[2] == r);

    int i = 2;
    while (pow2(i) - 1 <= kmax) ++i;
    int kappa = static_cast<int>(pow2(i) - 1);
    if (i > 4) throw budget_error("kappa exceeds the Q_15 budget");

    Construction c;
    c.report.tree = "cat:" + join_degrees(degrees);
    c.report.method = "multistar";
    c.report.n = n;
    c.report.base_dim = kappa;
    c.report.formula = Rational(r) * Rational(pow2(n - 1));
    if (n < kappa) throw error("n must be at least kappa = " + std::to_string(kappa));

    // the m = 3 hypothesis (all degrees >= 2) coincides with validity above
    if (m == 4 && r < 3) {
        c.report.status = "refused";
        c.report.notes.push_back("hypothesis fails: spine degrees must all be >= 3");
        return c;
    }
    int codes = (m == 4 && !middle) ? 3 : 2;
    if (r - 1 < codes) {
        c.report.status = "open";
        c.report.notes.push_back("degree raising infeasible: vertices outside the codes "
                                 "already have degree " +
                                 std::to_string(codes));
        return c;
    }

    DominatingSet base = hamming_code(i);
    std::vector<DominatingSet> sets{base, translate(base, bit(kappa - 1))};
    if (codes == 3) sets.push_back(translate(base, bit(kappa - 2)));
    CubeSubgraph h(kappa);
    std::vector<char> outside(std::size_t{1} << kappa, 1);
    for (const DominatingSet& s : sets)
        for (vertex_t v : s.members) {
            outside[v] = 0;
            for (int d = 0; d < kappa; ++d)
                if (!h.has_edge(v, v ^ bit(d))) h.add_edge(v, v ^ bit(d));
        }
    if (r - 1 > codes) {
        try {
            h = raise_to_degree(h, r - 1, edges_among(kappa, outside));
        } catch (const infeasible_error& e) {
            c.report.status = "open";
            c.report.notes.push_back(std::string("degree raising infeasible: ") + e.what());
            return c;
        }
    }
    c.graph = lift_to_qn(h, h, n);
    if (middle)
        c.report.proof_count =
            (Rational((2 * kappa - 1) * pow2(kappa), kappa + 1) +
             Rational((r - 3) * (kappa * pow2(kappa - 1) - pow2(kappa)), kappa + 1)) *
            Rational(pow2(n - kappa));
    else
        c.report.proof_count =
            (Rational((3 * kappa - 2) * pow2(kappa), kappa + 1) +
             Rational((r - 4) * (kappa * pow2(kappa - 1) - pow2(kappa + 1)), kappa + 1)) *
            Rational(pow2(n - kappa));
    set_counts(c);
    if (Rational(static_cast<std::int64_t>(c.report.edges)) != *c.report.proof_count)
        c.report.notes.push_back("direct count differs from the count expression");
    if (Rational(static_cast<std::int64_t>(c.report.edges)) > c.report.formula)
        c.report.notes.push_back("edge count exceeds the certified bound");
    return c;
}

// ----- caterpillars -----

Construction caterpillar_construction(const std::vector<int>& degrees, int n) {
    int m = static_cast<int>(degrees.size());
    for (int d : degrees)
        if (d < 2) throw error("spine degrees must be >= 2");
    int a = -1;
    for (int cand = 1; cand <= 5; ++cand)
        if (pow2(cand) + 2 <= m && m <= pow2(cand + 1)) {
            a = cand;
            break;
        }
    if (a < 0)
        throw hypothesis_error("spine length is not 2^a + b with 2 <= b <= 2^a");
    int b = m - static_cast<int>(pow2(a));
    int best = INT_MAX;
    for (int p = 1; p < m; ++p) best = std::min(best, std::max(degrees[p - 1], degrees[p]));
    int j = -1;
    for (int p = b; p < pow2(a); ++p)
        if (std::max(degrees[p - 1], degrees[p]) == best) {
            j = p;
            break;
        }
    if (j < 0)
        throw hypothesis_error("no minimum-degree spine pair with b - 1 < j < 2^a");
    int rdeg = best;
    int logm = 0;
    while (pow2(logm + 1) <= m) ++logm;
    if (rdeg < logm) throw hypothesis_error("max{k_j, k_{j+1}} < log2(m)");

    int kmax = *std::max_element(degrees.begin(), degrees.end());
    int s = 1;
    while (pow2(s) <= kmax) ++s;  // kappa = a + 2^s - 1 > kmax + a - 1
    int kappa = a + static_cast<int>(pow2(s) - 1);
    if (s > 4 || kappa > 15) throw budget_error("kappa exceeds the Q_15 budget");

    Construction c;
    c.report.tree = "cat:" + join_degrees(degrees);
    c.report.method = "caterpillar";
    c.report.n = n;
    c.report.base_dim = kappa;
    c.report.formula = Rational(rdeg) * Rational(pow2(n - 1));
    if (n < kappa) throw error("n must be at least kappa = " + std::to_string(kappa));

    if (rdeg - 1 < a + 1) {
        c.report.status = "open";
        c.report.notes.push_back(
            "degree raising infeasible: same-subcube edges already force degree " +
            std::to_string(a + 1));
        return c;
    }

    DominatingSet pds = weichsel_pds(kappa, s);  // components are Q_a's
    std::vector<int> comp = pds_components(pds, nullptr);
    std::vector<char> outside(std::size_t{1} << kappa, 1);
    CubeSubgraph h(kappa);
    for (vertex_t v : pds.members) {
        outside[v] = 0;
        for (int d = 0; d < kappa; ++d)
            if (!h.has_edge(v, v ^ bit(d))) h.add_edge(v, v ^ bit(d));
    }
    std::vector<int> dom(std::size_t{1} << kappa, -1);
    for (vertex_t v = 0; v < bit(kappa); ++v) {
        if (!outside[v]) continue;
        for (int d = 0; d < kappa; ++d)
            if (!outside[v ^ bit(d)]) dom[v] = comp[v ^ bit(d)];
    }
    edge_list mandatory;
    edge_list pool;
    for (auto [u, w] : edges_among(kappa, outside)) {
        if (dom[u] == dom[w])
            mandatory.emplace_back(u, w);
        else
            pool.emplace_back(u, w);
    }
    try {
        h = raise_to_degree(h, rdeg - 1, pool, mandatory);
    } catch (const infeasible_error& e) {
        c.report.status = "open";
        c.report.notes.push_back(std::string("degree raising infeasible: ") + e.what());
        return c;
    }
    c.graph = lift_to_qn(h, h, n);
    c.report.proof_count =
        (Rational(a * pow2(kappa - 1), kappa - a + 1) +
         Rational((kappa - a) * pow2(kappa), kappa - a + 1) +
         Rational((rdeg - 2) * (kappa - a) * pow2(kappa - 1), kappa - a + 1)) *
        Rational(pow2(n - kappa));
    set_counts(c);
    if (Rational(static_cast<std::int64_t>(c.report.edges)) != *c.report.proof_count)
        c.report.notes.push_back("direct count differs from the count expression");
    return c;
}

// ----- very generalized stars -----

Construction vgs_construction(int k, int m, const std::vector<std::vector<int>>& leg_degrees,
                              int n) {
    if (k < 2) throw error("very generalized star needs k >= 2 legs");
    if (m < 2) throw error("legs must have length >= 2");
    if (static_cast<int>(leg_degrees.size()) != k) throw error("expected one degree list per leg");
    for (const auto& leg : leg_degrees) {
        if (static_cast<int>(leg.size()) != m) throw error("each leg needs m degrees");
        for (int d : leg)
            if (d < 1) throw error("leg degrees must be >= 1");
    }
    std::ostringstream lit;
    lit << "vgs:k=" << k << ",m=" << m << ",deg=";
    for (int i = 0; i < k; ++i) {
        if (i) lit << ";";
        lit << join_degrees(leg_degrees[i]);
    }
    int r = INT_MAX;
    for (const auto& leg : leg_degrees) r = std::min(r, std::max(leg[0], leg[1]));

    Construction c;
    c.report.tree = lit.str();
    c.report.method = "vgs";
    c.report.n = n;
    c.report.formula = Rational(r) * Rational(pow2(n - 1));

    int big_first = 0;
    for (const auto& leg : leg_degrees)
        if (leg[0] >= r) ++big_first;
    if (big_first < 2) {
        c.report.status = "refused";
        c.report.notes.push_back("hypothesis fails: needs two legs with first degree >= r");
    }
    if (k - 1 <= 5) {
        try {
            int cap = pj_qk(k - 1, k - 1);
            if (m > cap) {
                c.report.status = "refused";
                c.report.notes.push_back("hypothesis fails: m > P_{k-1}(Q_{k-1}) = " +
                                         std::to_string(cap));
            }
        } catch (const budget_error&) {
            c.report.status = "refused";
            c.report.notes.push_back("hypothesis unchecked: P_{k-1}(Q_{k-1}) out of budget");
        }
    } else {
        c.report.status = "refused";
        c.report.notes.push_back("hypothesis unchecked: P_{k-1}(Q_{k-1}) out of budget");
    }
    if (r < k) {
        c.report.status = "refused";
        c.report.notes.push_back("hypothesis fails: needs r >= k");
    }
    if (c.report.status == "refused") return c;

    int kmax = 0;
    for (const auto& leg : leg_degrees) kmax = std::max(kmax, *std::max_element(leg.begin(), leg.end()));
    int s = 1;
    while ((k - 1) + pow2(s) - 1 <= kmax + k - 2) ++s;  // kappa > kmax + k - 2
    int kappa = (k - 1) + static_cast<int>(pow2(s) - 1);
    if (s > 4 || kappa > 15) throw budget_error("kappa exceeds the Q_15 budget");
    c.report.base_dim = kappa;
    if (n < kappa) throw error("n must be at least kappa = " + std::to_string(kappa));

    DominatingSet pds = weichsel_pds(kappa, s);  // components are Q_{k-1}'s
    std::vector<int> comp = pds_components(pds, nullptr);
    std::vector<char> outside(std::size_t{1} << kappa, 1);
    CubeSubgraph h(kappa);
    for (vertex_t v : pds.members) {
        outside[v] = 0;
        for (int d = 0; d < kappa; ++d)
            if (!h.has_edge(v, v ^ bit(d))) h.add_edge(v, v ^ bit(d));
    }
    std::vector<int> dom(std::size_t{1} << kappa, -1);
    for (vertex_t v = 0; v < bit(kappa); ++v) {
        if (!outside[v]) continue;
        for (int d = 0; d < kappa; ++d)
            if (!outside[v ^ bit(d)]) dom[v] = comp[v ^ bit(d)];
    }
    edge_list mandatory;
    edge_list pool;
    for (auto [u, w] : edges_among(kappa, outside)) {
        if (dom[u] == dom[w])
            mandatory.emplace_back(u, w);
        else
            pool.emplace_back(u, w);
    }
    try {
        h = raise_to_degree(h, r - 1, pool, mandatory);
    } catch (const infeasible_error& e) {
        c.report.status = "open";
        c.report.notes.push_back(std::string("degree raising infeasible: ") + e.what());
        return c;
    }
    c.graph = lift_to_qn(h, h, n);
    c.report.proof_count =
        (Rational(pow2(kappa - k) * kappa * pow2(k), kappa - k + 2) +
         Rational((r - 2) * pow2(kappa - 1))) *
        Rational(pow2(n - kappa));
    set_counts(c);
    if (Rational(static_cast<std::int64_t>(c.report.edges)) != *c.report.proof_count)
        c.report.notes.push_back("direct count differs from the count expression");
    return c;
}

// ----- family dispatch -----

namespace {

std::vector<int> parse_int_list(const std::string& s, char sep) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(std::stoi(item));
    return out;
}

}  // namespace

std::vector<Construction> applicable_constructions(const std::string& tree_literal, int n) {
    Tree t = parse_tree(tree_literal);  // validates the literal up front
    auto colon = tree_literal.find(':');
    std::string family = tree_literal.substr(0, colon);
    std::string rest = colon == std::string::npos ? "" : tree_literal.substr(colon + 1);

    std::vector<std::pair<std::string, std::function<Construction()>>> builders;
    if (t.order() <= 16)  // cubical-dimension search stays affordable
        builders.emplace_back("subcube", [&] { return disjoint_subcube(t, n, tree_literal); });
    if (family == "path") {
        int k = std::stoi(rest);
        builders.emplace_back("path", [=] { return path_construction(k, n); });
    } else if (family == "star") {
        int k = std::stoi(rest);
        builders.emplace_back("star", [=] { return star_construction(k, n); });
    } else if (family == "genstar") {
        auto x = rest.find('x');
        int k = std::stoi(rest.substr(0, x));
        int m = std::stoi(rest.substr(x + 1));
        if (m == 1)
            builders.emplace_back("star", [=] { return star_construction(k, n); });
        else
            builders.emplace_back("genstar", [=] { return genstar_construction(k, m, n); });
    } else if (family == "cat") {
        std::vector<int> ks = parse_int_list(rest, ',');
        if (ks.size() == 1) {
            builders.emplace_back("star", [=] { return star_construction(ks[0], n); });
        } else if (ks.size() == 2) {
            int hi = std::max(ks[0], ks[1]);
            int lo = std::min(ks[0], ks[1]);
            builders.emplace_back("doublestar",
                                  [=] { return doublestar_construction(hi, lo, n); });
        } else if (ks.size() <= 4) {
            builders.emplace_back("multistar", [=] { return multistar_construction(ks, n); });
        } else {
            builders.emplace_back("caterpillar",
                                  [=] { return caterpillar_construction(ks, n); });
        }
    } else if (family == "vgs") {
        auto dpos = rest.find("deg=");
        std::string head = rest.substr(0, dpos);  // "k=K,m=M,"
        int k = std::stoi(head.substr(head.find("k=") + 2));
        int m = std::stoi(head.substr(head.find("m=") + 2));
        std::vector<std::vector<int>> legs;
        std::stringstream ss(rest.substr(dpos + 4));
        std::string leg;
        while (std::getline(ss, leg, ';')) legs.push_back(parse_int_list(leg, ','));
        builders.emplace_back("vgs", [=] { return vgs_construction(k, m, legs, n); });
    }

    std::vector<Construction> out;
    for (auto& [name, make] : builders) {
        try {
            out.push_back(make());
        } catch (const std::exception& e) {
            Construction c;
            c.report.method = name;
            c.report.n = n;
            c.report.status = "refused";
            c.report.notes.push_back(e.what());
            out.push_back(std::move(c));
        }
        out.back().report.tree = tree_literal;
    }
    return out;
}

}  // namespace qsat
