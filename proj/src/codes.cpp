#include "qsat/codes.hpp"

#include <algorithm>

namespace qsat {

// ----- hamming codes -----

// syndrome of v: xor of the (1-based) coordinate indices at which v is 1
static std::uint32_t syndrome(vertex_t v, int n) {
    std::uint32_t s = 0;
    for (int i = 1; i <= n; ++i)
        if (v >> coord_bit(n, i) & 1) s ^= static_cast<std::uint32_t>(i);
    return s;
}

DominatingSet hamming_code(int i) {
    if (i < 2 || i > 4) throw error("hamming_code order must be in [2, 4]");
    int n = (1 << i) - 1;
    DominatingSet c{n, 0, {}};
    for (vertex_t v = 0; v < (vertex_t{1} << n); ++v)
        if (syndrome(v, n) == 0) c.members.push_back(v);
    return c;
}

DominatingSet translate(const DominatingSet& c, vertex_t t) {
    DominatingSet out = c;
    for (vertex_t& v : out.members) v ^= t;
    std::sort(out.members.begin(), out.members.end());
    return out;
}

// ----- scaled perfect dominating sets -----

DominatingSet weichsel_pds(int n, int s) {
    if (s < 1 || s > 4) throw error("weichsel_pds requires 1 <= s <= 4");
    if (n > 20) throw error("weichsel_pds requires n <= 20");
    int block = (1 << s) - 1;
    int r = n - block;
    if (r < 0) throw error("weichsel_pds requires n >= 2^s - 1");
    // validity condition: with n = 2^t - 1 + m, 0 <= m < 2^t, need s <= t
    int t = 1;
    while ((1 << (t + 1)) - 1 <= n) ++t;
    if (s > t) throw error("weichsel_pds: no decomposition with this s");

    DominatingSet c{n, r, {}};
    if (s == 1) {
        // Q_1 code block: single codeword 0
        for (vertex_t y = 0; y < (vertex_t{1} << r); ++y) c.members.push_back(y);
    } else {
        DominatingSet base = hamming_code(s);
        for (vertex_t w : base.members)
            for (vertex_t y = 0; y < (vertex_t{1} << r); ++y)
                c.members.push_back(w << r | y);
    }
    std::sort(c.members.begin(), c.members.end());
    return c;
}

// ----- verification -----

PdsReport verify_pds(const DominatingSet& c) {
    PdsReport rep;
    std::size_t size = std::size_t{1} << c.dim;
    std::vector<char> in(size, 0);
    for (vertex_t v : c.members) in[v] = 1;

    rep.perfect = true;
    for (vertex_t v = 0; v < size; ++v) {
        if (in[v]) continue;
        int dominators = 0;
        for (int d = 0; d < c.dim; ++d)
            if (in[v ^ (vertex_t{1} << d)]) ++dominators;
        if (dominators != 1) {
            rep.perfect = false;
            rep.bad_vertices.push_back(v);
        }
    }

    // the induced subgraph must split into disjoint subcubes of dimension r
    rep.components_ok = true;
    std::vector<char> seen(size, 0);
    for (vertex_t v : c.members) {
        if (seen[v]) continue;
        std::vector<vertex_t> comp{v};
        seen[v] = 1;
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (int d = 0; d < c.dim; ++d) {
                vertex_t u = comp[i] ^ (vertex_t{1} << d);
                if (in[u] && !seen[u]) {
                    seen[u] = 1;
                    comp.push_back(u);
                }
            }
        ++rep.component_count;
        vertex_t base = *std::min_element(comp.begin(), comp.end());
        vertex_t dirs = 0;
        for (vertex_t u : comp) dirs |= u ^ base;
        if (weight(dirs) != c.r || comp.size() != std::size_t{1} << c.r)
            rep.components_ok = false;
    }
    return rep;
}

}  // namespace qsat
