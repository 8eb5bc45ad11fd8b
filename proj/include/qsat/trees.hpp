// Tree families whose saturation numbers the library bounds.
//
//   path(k)            P_k, the path with k edges
//   star(k)            S_k = K_{1,k}
//   genstar(k, m)      GS_{k,m}, k legs of length m from one center
//   caterpillar(ks)    S_{k_1 x ... x k_m}: central path of m vertices,
//                      vertex i has total degree k_i (>= 2), rest leaves
//   vgs(k, m, degs)    GS_{k,m} whose leg vertex (i, j) is the center of a
//                      star of total degree degs[i][j]
//
// Trees are small (<= a few dozen vertices); adjacency lists suffice.

#pragma once

#include <string>
#include <vector>

#include "qsat/hypercube.hpp"

namespace qsat {

struct Tree {
    std::vector<std::vector<int>> adj;

    int order() const { return static_cast<int>(adj.size()); }
    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    int edge_count() const { return order() - 1; }
    std::vector<std::pair<int, int>> edges() const;
    std::vector<int> leaves() const;
    int max_degree() const;
    // proper 2-coloring from vertex 0 (trees are bipartite)
    std::vector<int> bipartition() const;
    // vertex minimizing the largest component after removal; ties -> smallest
    int centroid() const;
};

Tree build_path(int k);
Tree build_star(int k);
Tree build_genstar(int k, int m);
Tree build_caterpillar(const std::vector<int>& ks);
Tree build_vgs(int k, int m, const std::vector<std::vector<int>>& degs);

// minimum over edges uv of max(deg u, deg v), with the achieving edge;
// ties broken by smallest endpoint labels
struct EminResult {
    int value;
    std::pair<int, int> edge;
};
EminResult emin(const Tree& t);

// least d with T embeddable in Q_d (single vertex: 0)
int cubical_dimension(const Tree& t);

// literals: "path:5"  "star:4"  "genstar:3x2"  "cat:3,4,3"
//           "vgs:k=3,m=2,deg=4,4;4,4;4,4"   (legs ; separated, positions ,)
Tree parse_tree(const std::string& literal);

}  // namespace qsat
