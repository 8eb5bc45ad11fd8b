#include "qsat/trees.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace qsat {

// ----- tree basics -----

std::vector<std::pair<int, int>> Tree::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int v = 0; v < order(); ++v)
        for (int u : adj[v])
            if (v < u) out.emplace_back(v, u);
    return out;
}

std::vector<int> Tree::leaves() const {
    std::vector<int> out;
    for (int v = 0; v < order(); ++v)
        if (degree(v) == 1) out.push_back(v);
    return out;
}

int Tree::max_degree() const {
    int d = 0;
    for (int v = 0; v < order(); ++v) d = std::max(d, degree(v));
    return d;
}

std::vector<int> Tree::bipartition() const {
    std::vector<int> color(order(), -1);
    std::vector<int> stack{0};
    color[0] = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : adj[v])
            if (color[u] < 0) {
                color[u] = color[v] ^ 1;
                stack.push_back(u);
            }
    }
    return color;
}

int Tree::centroid() const {
    int best = 0, best_load = order();
    // subtree sizes from a DFS rooted at 0; component sizes follow
    std::vector<int> size(order(), 1), parent(order(), -1), order_out;
    std::vector<int> stack{0};
    std::vector<char> seen(order(), 0);
    seen[0] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        order_out.push_back(v);
        for (int u : adj[v])
            if (!seen[u]) {
                seen[u] = 1;
                parent[u] = v;
                stack.push_back(u);
            }
    }
    for (auto it = order_out.rbegin(); it != order_out.rend(); ++it)
        if (parent[*it] >= 0) size[parent[*it]] += size[*it];
    for (int v = 0; v < order(); ++v) {
        int load = order() - size[v];
        for (int u : adj[v])
            if (parent[u] == v) load = std::max(load, size[u]);
        if (load < best_load) {
            best_load = load;
            best = v;
        }
    }
    return best;
}

// ----- builders -----

static void link(Tree& t, int u, int v) {
    t.adj[u].push_back(v);
    t.adj[v].push_back(u);
}

Tree build_path(int k) {
    if (k < 1) throw error("path needs at least one edge");
    Tree t;
    t.adj.resize(k + 1);
    for (int i = 0; i < k; ++i) link(t, i, i + 1);
    return t;
}

Tree build_star(int k) {
    if (k < 1) throw error("star needs at least one leaf");
    Tree t;
    t.adj.resize(k + 1);
    for (int i = 1; i <= k; ++i) link(t, 0, i);
    return t;
}

Tree build_genstar(int k, int m) {
    if (k < 1 || m < 1) throw error("genstar needs k >= 1 legs of length m >= 1");
    Tree t;
    t.adj.resize(1 + k * m);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < m; ++j)
            link(t, j == 0 ? 0 : 1 + i * m + j - 1, 1 + i * m + j);
    return t;
}

Tree build_caterpillar(const std::vector<int>& ks) {
    int m = static_cast<int>(ks.size());
    if (m < 1) throw error("caterpillar needs a central path");
    for (int k : ks)
        if (k < 2) throw error("caterpillar central degrees must be >= 2");
    Tree t;
    t.adj.resize(m);
    for (int i = 0; i + 1 < m; ++i) link(t, i, i + 1);
    for (int i = 0; i < m; ++i) {
        int path_deg = (m == 1) ? 0 : (i == 0 || i == m - 1) ? 1 : 2;
        for (int l = 0; l < ks[i] - path_deg; ++l) {
            t.adj.emplace_back();
            link(t, i, t.order() - 1);
        }
    }
    return t;
}

Tree build_vgs(int k, int m, const std::vector<std::vector<int>>& degs) {
    if (k < 2 || m < 1) throw error("vgs needs k >= 2 legs of length m >= 1");
    if (static_cast<int>(degs.size()) != k)
        throw error("vgs needs one degree list per leg");
    Tree t = build_genstar(k, m);
    for (int i = 0; i < k; ++i) {
        if (static_cast<int>(degs[i].size()) != m)
            throw error("vgs needs m degrees per leg");
        for (int j = 0; j < m; ++j) {
            int v = 1 + i * m + j;
            int need = degs[i][j] - t.degree(v);
            if (need < 0)
                throw error("vgs degree below the leg path degree");
            for (int l = 0; l < need; ++l) {
                t.adj.emplace_back();
                link(t, v, t.order() - 1);
            }
        }
    }
    return t;
}

// ----- emin -----

EminResult emin(const Tree& t) {
    EminResult best{t.order(), {0, 0}};
    for (auto [u, v] : t.edges()) {
        int val = std::max(t.degree(u), t.degree(v));
        if (val < best.value) best = {val, {u, v}};
    }
    return best;
}

// ----- cubical dimension -----

namespace {

// backtracking embedding of a tree into the full Q_d, root pinned to 0;
// directions never used before are interchangeable, so only the smallest
// fresh direction is tried at each step
bool embeds_in_cube(const Tree& t, int d) {
    int n = t.order();
    if (n > 1 << d) return false;
    auto color = t.bipartition();
    int half = 1 << (d > 0 ? d - 1 : 0);
    int c0 = static_cast<int>(std::count(color.begin(), color.end(), 0));
    if (c0 > half || n - c0 > half) return false;

    // BFS order from vertex 0 so parents are always placed first
    std::vector<int> order{0}, parent(n, -1);
    for (std::size_t i = 0; i < order.size(); ++i)
        for (int u : t.adj[order[i]])
            if (u != parent[order[i]]) {
                parent[u] = order[i];
                order.push_back(u);
            }

    std::vector<vertex_t> img(n, 0);
    std::vector<char> used(std::size_t{1} << d, 0);
    used[0] = 1;

    std::function<bool(int, std::uint32_t)> place = [&](int idx, std::uint32_t dirs) {
        if (idx == n) return true;
        int v = order[idx];
        vertex_t p = img[parent[v]];
        bool tried_fresh = false;
        for (int dir = 0; dir < d; ++dir) {
            bool fresh = !(dirs >> dir & 1);
            if (fresh && tried_fresh) continue;
            if (fresh) tried_fresh = true;
            vertex_t cand = p ^ (vertex_t{1} << dir);
            if (used[cand]) continue;
            used[cand] = 1;
            img[v] = cand;
            if (place(idx + 1, dirs | (1u << dir))) return true;
            used[cand] = 0;
        }
        return false;
    };
    return place(1, 0);
}

}  // namespace

int cubical_dimension(const Tree& t) {
    if (t.order() == 1) return 0;
    int lb = t.max_degree();
    while ((1 << lb) < t.order()) ++lb;
    for (int d = lb; d < t.order(); ++d)
        if (embeds_in_cube(t, d)) return d;
    return t.order() - 1;  // every tree on m vertices fits in Q_{m-1}
}

// ----- literals -----

namespace {

std::vector<int> parse_ints(const std::string& s, char sep) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) {
        if (item.empty()) throw error("bad tree literal list: '" + s + "'");
        out.push_back(std::stoi(item));
    }
    if (out.empty()) throw error("bad tree literal list: '" + s + "'");
    return out;
}

}  // namespace

Tree parse_tree(const std::string& literal) {
    auto colon = literal.find(':');
    if (colon == std::string::npos)
        throw error("tree literal needs a family prefix: '" + literal + "'");
    std::string family = literal.substr(0, colon), rest = literal.substr(colon + 1);
    if (family == "path") return build_path(std::stoi(rest));
    if (family == "star") return build_star(std::stoi(rest));
    if (family == "genstar") {
        auto x = rest.find('x');
        if (x == std::string::npos) throw error("genstar literal is genstar:KxM");
        return build_genstar(std::stoi(rest.substr(0, x)), std::stoi(rest.substr(x + 1)));
    }
    if (family == "cat") return build_caterpillar(parse_ints(rest, ','));
    if (family == "vgs") {
        auto deg_at = rest.find("deg=");
        if (deg_at == std::string::npos)
            throw error("vgs literal is vgs:k=K,m=M,deg=a,b;c,d;...");
        int k = -1, m = -1;
        std::stringstream ss(rest.substr(0, deg_at));
        std::string field;
        while (std::getline(ss, field, ',')) {
            if (field.rfind("k=", 0) == 0)
                k = std::stoi(field.substr(2));
            else if (field.rfind("m=", 0) == 0)
                m = std::stoi(field.substr(2));
            else if (!field.empty())
                throw error("bad vgs field '" + field + "'");
        }
        std::vector<std::vector<int>> degs;
        std::stringstream legs(rest.substr(deg_at + 4));
        std::string leg;
        while (std::getline(legs, leg, ';')) degs.push_back(parse_ints(leg, ','));
        if (k < 0 || m < 0 || degs.empty())
            throw error("vgs literal is vgs:k=K,m=M,deg=a,b;c,d;...");
        return build_vgs(k, m, degs);
    }
    throw error("unknown tree family '" + family + "'");
}

}  // namespace qsat
