#include "qsat/hypercube.hpp"

#include <algorithm>
#include <sstream>

namespace qsat {

// ----- vertices -----

std::string vertex_string(vertex_t v, int dim) {
    std::string s(dim, '0');
    for (int i = 0; i < dim; ++i)
        if (v >> (dim - 1 - i) & 1) s[i] = '1';
    return s;
}

vertex_t parse_vertex(const std::string& s, int dim) {
    if (static_cast<int>(s.size()) != dim)
        throw error("vertex string '" + s + "' does not have " + std::to_string(dim) + " bits");
    vertex_t v = 0;
    for (char c : s) {
        if (c != '0' && c != '1') throw error("bad vertex string '" + s + "'");
        v = v << 1 | (c == '1');
    }
    return v;
}

std::vector<vertex_t> neighbors(vertex_t v, int dim) {
    std::vector<vertex_t> out;
    out.reserve(dim);
    for (int d = 0; d < dim; ++d) out.push_back(v ^ (vertex_t{1} << d));
    return out;
}

// ----- subgraphs -----

CubeSubgraph::CubeSubgraph(int dim) : dim_(dim) {
    if (dim < 0 || dim > kMaxDim) throw error("dimension must be in [0, 24]");
    adj_.assign(std::size_t{1} << dim, 0);
}

void CubeSubgraph::check_edge(vertex_t u, vertex_t v) const {
    if (u >= adj_.size() || v >= adj_.size() || weight(u ^ v) != 1)
        throw error("not a Q_n edge");
}

bool CubeSubgraph::has_edge(vertex_t u, vertex_t v) const {
    if (u >= adj_.size() || v >= adj_.size()) throw error("vertex out of range");
    if (weight(u ^ v) != 1) return false;
    return adj_[u] >> __builtin_ctz(u ^ v) & 1;
}

void CubeSubgraph::add_edge(vertex_t u, vertex_t v) {
    check_edge(u, v);
    std::uint32_t bit = u ^ v;
    adj_[u] |= bit;
    adj_[v] |= bit;
}

void CubeSubgraph::remove_edge(vertex_t u, vertex_t v) {
    check_edge(u, v);
    std::uint32_t bit = u ^ v;
    adj_[u] &= ~bit;
    adj_[v] &= ~bit;
}

std::uint64_t CubeSubgraph::edge_count() const {
    std::uint64_t twice = 0;
    for (std::uint32_t m : adj_) twice += __builtin_popcount(m);
    return twice / 2;
}

std::vector<std::pair<vertex_t, vertex_t>> CubeSubgraph::edges() const {
    std::vector<std::pair<vertex_t, vertex_t>> out;
    for (vertex_t v = 0; v < adj_.size(); ++v)
        for (std::uint32_t m = adj_[v]; m; m &= m - 1) {
            vertex_t u = v ^ (m & -m);
            if (v < u) out.emplace_back(v, u);
        }
    return out;  // already sorted: v ascending, direction ascending
}

std::vector<std::pair<vertex_t, vertex_t>> CubeSubgraph::non_edges() const {
    std::vector<std::pair<vertex_t, vertex_t>> out;
    for (vertex_t v = 0; v < adj_.size(); ++v)
        for (int d = 0; d < dim_; ++d) {
            vertex_t u = v ^ (vertex_t{1} << d);
            if (v < u && !(adj_[v] >> d & 1)) out.emplace_back(v, u);
        }
    return out;
}

CubeSubgraph full_cube(int dim) {
    CubeSubgraph h(dim);
    for (vertex_t v = 0; v < (vertex_t{1} << dim); ++v)
        for (int d = 0; d < dim; ++d) {
            vertex_t u = v ^ (vertex_t{1} << d);
            if (v < u) h.add_edge(v, u);
        }
    return h;
}

// ----- automorphisms -----

CubeAutomorphism CubeAutomorphism::identity(int dim) {
    CubeAutomorphism a;
    a.perm.resize(dim);
    for (int d = 0; d < dim; ++d) a.perm[d] = d;
    return a;
}

CubeAutomorphism CubeAutomorphism::translation(int dim, vertex_t t) {
    CubeAutomorphism a = identity(dim);
    a.shift = t;
    return a;
}

vertex_t CubeAutomorphism::apply(vertex_t v) const {
    vertex_t p = 0;
    for (std::size_t d = 0; d < perm.size(); ++d)
        if (v >> d & 1) p |= vertex_t{1} << perm[d];
    return p ^ shift;
}

CubeSubgraph apply_automorphism(const CubeSubgraph& h, const CubeAutomorphism& a) {
    if (a.dim() != h.dim()) throw error("automorphism dimension mismatch");
    CubeSubgraph out(h.dim());
    for (auto [u, v] : h.edges()) out.add_edge(a.apply(u), a.apply(v));
    return out;
}

CubeSubgraph translate(const CubeSubgraph& h, vertex_t t) {
    return apply_automorphism(h, CubeAutomorphism::translation(h.dim(), t));
}

// ----- product embedding -----

CubeSubgraph lift_to_qn(const CubeSubgraph& h0, const CubeSubgraph& h1, int n) {
    int k = h0.dim();
    if (h1.dim() != k) throw error("lift requires equal subcube dimensions");
    if (n < k || n > kMaxDim) throw error("lift target dimension out of range");
    CubeSubgraph out(n);
    int low = n - k;
    for (vertex_t x = 0; x < (vertex_t{1} << low); ++x) {
        const CubeSubgraph& h = weight(x) % 2 == 0 ? h0 : h1;
        for (auto [u, v] : h.edges())
            out.add_edge(u << low | x, v << low | x);
    }
    return out;
}

// ----- serialization -----

std::string to_edge_list(const CubeSubgraph& h) {
    std::ostringstream os;
    os << "dim=" << h.dim() << "\n";
    for (auto [u, v] : h.edges())
        os << vertex_string(u, h.dim()) << " " << vertex_string(v, h.dim()) << "\n";
    return os.str();
}

CubeSubgraph from_edge_list(const std::string& text) {
    std::istringstream is(text);
    std::string header;
    if (!std::getline(is, header) || header.rfind("dim=", 0) != 0)
        throw error("edge list must start with a dim=n header");
    int dim = std::stoi(header.substr(4));
    CubeSubgraph h(dim);
    std::string a, b;
    while (is >> a >> b) h.add_edge(parse_vertex(a, dim), parse_vertex(b, dim));
    return h;
}

std::string to_dot(const CubeSubgraph& h) {
    std::ostringstream os;
    os << "graph Q" << h.dim() << " {\n";
    for (vertex_t v = 0; v < h.vertex_count(); ++v)
        os << "  \"" << vertex_string(v, h.dim()) << "\";\n";
    for (auto [u, v] : h.edges())
        os << "  \"" << vertex_string(u, h.dim()) << "\" -- \""
           << vertex_string(v, h.dim()) << "\";\n";
    os << "}\n";
    return os.str();
}

}  // namespace qsat
