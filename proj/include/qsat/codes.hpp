// Perfect dominating sets of hypercubes built from Hamming codes.
//
// The Hamming code of order i lives in Q_{2^i-1} and is the nullspace of
// the i x n parity-check matrix whose column j (1-based) is the binary
// representation of j.  Scaling to other dimensions takes a product of the
// code with a full subcube: in Q_n with n = (2^s - 1) + r the set
// C x {0,1}^r (code block on the first 2^s - 1 coordinates) dominates
// perfectly and induces disjoint copies of Q_r.

#pragma once

#include <vector>

#include "qsat/hypercube.hpp"

namespace qsat {

struct DominatingSet {
    int dim = 0;          // ambient cube dimension
    int r = 0;            // dimension of the induced subcube components
    std::vector<vertex_t> members;  // sorted
};

// order-i Hamming code as a dominating set of Q_{2^i - 1} (components Q_0)
DominatingSet hamming_code(int i);

// xor-translate every member by t (component structure is preserved)
DominatingSet translate(const DominatingSet& c, vertex_t t);

// perfect dominating set of Q_n inducing disjoint Q_r's, r = n - (2^s - 1)
DominatingSet weichsel_pds(int n, int s);

struct PdsReport {
    bool perfect = false;        // every vertex in C or adjacent to exactly one member
    bool components_ok = false;  // induced subgraph = disjoint Q_r subcubes
    int component_count = 0;
    std::vector<vertex_t> bad_vertices;  // domination failures, sorted
};

PdsReport verify_pds(const DominatingSet& c);

}  // namespace qsat
