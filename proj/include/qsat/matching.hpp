// Bipartite matching utilities on hypercube subgraphs.
//
// Every subgraph of Q_n is bipartite with parts the even- and odd-weight
// vertices, so matchings and degree-constrained subgraphs reduce to unit-
// capacity flows.  extract_regular peels perfect matchings off a k-regular
// graph one at a time (Hall guarantees each exists); raise_to_degree goes
// the other way and completes a graph to an exact target degree from a
// candidate edge pool, with some edges forced.

#pragma once

#include <utility>
#include <vector>

#include "qsat/hypercube.hpp"

namespace qsat {

// perfect matching covering every non-isolated vertex of b; the result is
// canonical (sorted) and deterministic.  Throws infeasible_error if none.
edge_list perfect_matching(const CubeSubgraph& b);

// spanning r-regular subgraph of a k-regular graph, obtained by removing
// k - r perfect matchings.  The matching sequence depends only on b, so
// extract_regular(b, r-1) is a subgraph of extract_regular(b, r).
CubeSubgraph extract_regular(const CubeSubgraph& b, int r);

// Add edges from `candidates` to h so that every vertex incident to a
// candidate (or mandatory) edge ends with degree exactly `target`.  All
// mandatory edges are added first.  Throws infeasible_error when a forced
// degree already exceeds the target or no completion exists.
CubeSubgraph raise_to_degree(const CubeSubgraph& h, int target,
                             const edge_list& candidates,
                             const edge_list& mandatory = {});

}  // namespace qsat
