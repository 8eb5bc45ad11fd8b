// Core types for subgraphs of the n-dimensional hypercube Q_n.
//
// Vertices are bitmasks of up to 24 coordinates.  Coordinate 1 is the
// leftmost character of the printed string and lives at bit position n-1,
// so string order equals numeric order.  A subgraph always keeps all 2^n
// vertices; only the edge set varies.  Per-vertex adjacency is stored as a
// mask over the n edge directions, which keeps graphs compact and makes
// degree/popcount queries cheap.

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qsat {

using vertex_t = std::uint32_t;
using edge_list = std::vector<std::pair<vertex_t, vertex_t>>;

constexpr int kMaxDim = 24;

// ----- errors -----

// invalid arguments / unsupported sizes
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// a theorem hypothesis fails, so the construction refuses to run
struct hypothesis_error : error {
    using error::error;
};
// a degree-completion problem has no solution (surfaced, never hidden)
struct infeasible_error : error {
    using error::error;
};
// an exhaustive search exceeded its node budget
struct budget_error : error {
    using error::error;
};

// ----- vertices -----

inline int weight(vertex_t v) { return __builtin_popcount(v); }

// bit position of coordinate i (1-based, coordinate 1 printed first)
inline int coord_bit(int dim, int i) { return dim - i; }

std::string vertex_string(vertex_t v, int dim);
vertex_t parse_vertex(const std::string& s, int dim);

// all n neighbors of v in increasing vertex order is not what flips give;
// returns them in direction order d = 0..n-1 (callers sort when they care)
std::vector<vertex_t> neighbors(vertex_t v, int dim);

struct Vertex {
    vertex_t bits = 0;
    int dim = 0;

    std::string str() const { return vertex_string(bits, dim); }
};

// ----- subgraphs -----

class CubeSubgraph {
  public:
    CubeSubgraph() = default;
    explicit CubeSubgraph(int dim);

    int dim() const { return dim_; }
    std::size_t vertex_count() const { return adj_.size(); }

    // false for any non-adjacent pair; add/remove insist on real cube edges
    bool has_edge(vertex_t u, vertex_t v) const;
    void add_edge(vertex_t u, vertex_t v);
    void remove_edge(vertex_t u, vertex_t v);

    // adjacency mask over directions; bit d set <=> edge {v, v^(1<<d)}
    std::uint32_t adj_mask(vertex_t v) const { return adj_[v]; }
    int degree(vertex_t v) const { return __builtin_popcount(adj_[v]); }

    std::uint64_t edge_count() const;

    // edges as canonical (u, v) pairs with u < v, sorted
    std::vector<std::pair<vertex_t, vertex_t>> edges() const;
    // Q_n edges absent from the subgraph, canonical order
    std::vector<std::pair<vertex_t, vertex_t>> non_edges() const;

    bool operator==(const CubeSubgraph& o) const = default;

  private:
    void check_edge(vertex_t u, vertex_t v) const;

    int dim_ = 0;
    std::vector<std::uint32_t> adj_;
};

CubeSubgraph full_cube(int dim);

// ----- automorphisms -----

// v |-> pi(v) ^ shift where pi permutes coordinates.  perm[d] is the image
// bit position of bit position d (identity: perm[d] == d).
struct CubeAutomorphism {
    std::vector<int> perm;
    vertex_t shift = 0;

    static CubeAutomorphism identity(int dim);
    static CubeAutomorphism translation(int dim, vertex_t t);

    int dim() const { return static_cast<int>(perm.size()); }
    vertex_t apply(vertex_t v) const;
};

CubeSubgraph apply_automorphism(const CubeSubgraph& h, const CubeAutomorphism& a);

// translate every edge of h by xor with t
CubeSubgraph translate(const CubeSubgraph& h, vertex_t t);

// ----- product embedding -----

// Q_n = Q_k x Q_{n-k}: vertex (v, x) has the k subcube coordinates first
// (high bits) and the n-k index coordinates x last (low bits).  A copy of
// h0 is placed in every subcube (Q_k, x) with weight(x) even and a copy of
// h1 in every subcube with weight(x) odd; no edges join distinct copies.
CubeSubgraph lift_to_qn(const CubeSubgraph& h0, const CubeSubgraph& h1, int n);

// ----- serialization -----

std::string to_edge_list(const CubeSubgraph& h);
CubeSubgraph from_edge_list(const std::string& text);
std::string to_dot(const CubeSubgraph& h);

}  // namespace qsat
