#include "qsat/matching.hpp"

#include <algorithm>
#include <cstring>
#include <queue>

namespace qsat {

// ----- dinic max-flow on unit-ish capacities -----

namespace {

struct FlowNet {
    struct Arc {
        int to;
        int cap;
    };
    std::vector<Arc> arcs;           // paired: arc i and i^1 are reverses
    std::vector<std::vector<int>> out;
    std::vector<int> level, it;

    explicit FlowNet(int n) : out(n), level(n), it(n) {}

    int add(int u, int v, int cap) {
        int id = static_cast<int>(arcs.size());
        arcs.push_back({v, cap});
        arcs.push_back({u, 0});
        out[u].push_back(id);
        out[v].push_back(id + 1);
        return id;
    }

    bool bfs(int s, int t) {
        std::fill(level.begin(), level.end(), -1);
        std::queue<int> q;
        level[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int id : out[u])
                if (arcs[id].cap > 0 && level[arcs[id].to] < 0) {
                    level[arcs[id].to] = level[u] + 1;
                    q.push(arcs[id].to);
                }
        }
        return level[t] >= 0;
    }

    int dfs(int u, int t, int limit) {
        if (u == t) return limit;
        for (int& i = it[u]; i < static_cast<int>(out[u].size()); ++i) {
            int id = out[u][i];
            const Arc& a = arcs[id];
            if (a.cap <= 0 || level[a.to] != level[u] + 1) continue;
            int pushed = dfs(a.to, t, std::min(limit, a.cap));
            if (pushed > 0) {
                arcs[id].cap -= pushed;
                arcs[id ^ 1].cap += pushed;
                return pushed;
            }
        }
        return 0;
    }

    long long max_flow(int s, int t) {
        long long total = 0;
        while (bfs(s, t)) {
            std::fill(it.begin(), it.end(), 0);
            while (int pushed = dfs(s, t, 1 << 30)) total += pushed;
        }
        return total;
    }
};

// choose a subset of candidate edges giving each target vertex its exact
// remaining demand; every candidate endpoint must be a target
bool exact_degree_subset(int dim, const edge_list& candidates,
                         const std::vector<int>& demand,
                         const std::vector<vertex_t>& targets, edge_list& chosen) {
    long long need_even = 0, need_odd = 0;
    std::vector<int> node(std::size_t{1} << dim, -1);
    int next = 2;  // 0 = source, 1 = sink
    for (vertex_t v : targets) {
        node[v] = next++;
        (weight(v) % 2 == 0 ? need_even : need_odd) += demand[v];
    }
    if (need_even != need_odd) return false;

    FlowNet net(next);
    for (vertex_t v : targets) {
        if (weight(v) % 2 == 0)
            net.add(0, node[v], demand[v]);
        else
            net.add(node[v], 1, demand[v]);
    }
    std::vector<int> arc_of(candidates.size());
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        auto [u, v] = candidates[i];
        if (weight(u) % 2 != 0) std::swap(u, v);
        if (node[u] < 0 || node[v] < 0) throw error("candidate endpoint is not a target");
        arc_of[i] = net.add(node[u], node[v], 1);
    }
    if (net.max_flow(0, 1) != need_even) return false;

    chosen.clear();
    for (std::size_t i = 0; i < candidates.size(); ++i)
        if (net.arcs[arc_of[i]].cap == 0) chosen.push_back(candidates[i]);
    return true;
}

}  // namespace

// ----- public operations -----

edge_list perfect_matching(const CubeSubgraph& b) {
    edge_list cand = b.edges();
    std::vector<int> demand(b.vertex_count(), 1);
    std::vector<vertex_t> support;
    for (vertex_t v = 0; v < b.vertex_count(); ++v)
        if (b.degree(v) > 0) support.push_back(v);
    edge_list m;
    if (!exact_degree_subset(b.dim(), cand, demand, support, m))
        throw infeasible_error("graph has no perfect matching on its support");
    std::sort(m.begin(), m.end());
    return m;
}

CubeSubgraph extract_regular(const CubeSubgraph& b, int r) {
    int k = 0;
    for (vertex_t v = 0; v < b.vertex_count(); ++v) {
        int d = b.degree(v);
        if (d == 0) continue;
        if (k == 0) k = d;
        if (d != k) throw error("extract_regular requires a regular graph");
    }
    if (r < 0 || r > k) throw error("extract_regular target out of range");
    CubeSubgraph out = b;
    for (int step = 0; step < k - r; ++step)
        for (auto [u, v] : perfect_matching(out)) out.remove_edge(u, v);
    return out;
}

CubeSubgraph raise_to_degree(const CubeSubgraph& h, int target,
                             const edge_list& candidates,
                             const edge_list& mandatory) {
    CubeSubgraph out = h;
    for (auto [u, v] : mandatory)
        if (!out.has_edge(u, v)) out.add_edge(u, v);

    edge_list pool;
    for (auto [u, v] : candidates) {
        auto e = std::minmax(u, v);
        if (!out.has_edge(e.first, e.second)) pool.emplace_back(e.first, e.second);
    }
    std::sort(pool.begin(), pool.end());
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());

    std::vector<char> is_target(out.vertex_count(), 0);
    for (auto [u, v] : pool) is_target[u] = is_target[v] = 1;
    for (auto [u, v] : mandatory) is_target[u] = is_target[v] = 1;

    std::vector<int> demand(out.vertex_count(), 0);
    std::vector<vertex_t> targets;
    for (vertex_t v = 0; v < out.vertex_count(); ++v) {
        if (!is_target[v]) continue;
        int need = target - out.degree(v);
        if (need < 0)
            throw infeasible_error("vertex " + vertex_string(v, out.dim()) +
                                   " is forced above the target degree");
        demand[v] = need;
        targets.push_back(v);
    }

    edge_list chosen;
    if (!exact_degree_subset(out.dim(), pool, demand, targets, chosen))
        throw infeasible_error("no completion to the target degree exists");
    for (auto [u, v] : chosen) out.add_edge(u, v);
    return out;
}

}  // namespace qsat
