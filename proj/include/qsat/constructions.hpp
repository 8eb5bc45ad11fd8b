// Builders for the saturated subgraphs behind every upper bound.
//
// Each builder returns the graph (when it can be realized) together with a
// BoundReport: the closed-form bound it certifies at dimension n, the
// count its argument predicts, and notes about any hypothesis that failed
// or any discrepancy between the predicted and actual edge counts.  A
// builder never fakes success: constructions whose degree raising is
// infeasible come back with status "open", and ones whose hypotheses
// exclude the requested tree come back "refused", both without a graph.
//
// longest_path_after_deletion realizes the deleted-vertex path machinery:
// for 0 < j <= 2^{k-1} it removes a canonical set C of j even-weight
// vertices from Q_k so that the longest remaining path has exactly
// 2^k - 2j edges, and returns such a path explicitly; when j <= 2^{k-2}
// a path of that length can be started from any odd vertex.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qsat/hypercube.hpp"
#include "qsat/rational.hpp"
#include "qsat/saturation.hpp"
#include "qsat/trees.hpp"

namespace qsat {

// ----- reports -----

struct BoundReport {
    std::string tree;    // tree literal, e.g. "path:5"
    std::string method;  // builder name, e.g. "path"
    int n = 0;           // host dimension
    int base_dim = 0;    // dimension the graph is built in before lifting
    std::uint64_t edges = 0;              // actual edge count (0 if no graph)
    Rational formula;                     // certified bound at dimension n
    std::optional<Rational> proof_count;  // count the argument predicts, if any
    std::optional<bool> verified;         // exhaustive check outcome, if run
    std::string status = "ok";            // ok | open | refused
    std::vector<std::string> notes;
};

struct Construction {
    std::optional<CubeSubgraph> graph;
    BoundReport report;
};

// run is_saturated on the graph (if any), record the outcome, and return
// the underlying report (empty when there is no graph)
SaturationReport verify_construction(Construction& c, const Tree& t);

// ----- deleted-vertex paths -----

struct DeletedPath {
    std::vector<vertex_t> deleted;  // the set C, sorted
    std::vector<vertex_t> path;     // vertex sequence avoiding C
};

// longest path in Q_k minus j canonical even vertices (2^k - 2j edges);
// with start given (odd vertex, j <= 2^{k-2}) the path begins there
DeletedPath longest_path_after_deletion(int k, int j,
                                        std::optional<vertex_t> start = std::nullopt);

// ----- builders -----

// disjoint copies of Q_k, k = min over edges uv of max cd of the two parts
// of T - uv; requires k < cd(T)
Construction disjoint_subcube(const Tree& t, int n, const std::string& tree_literal = "");

// deleted-vertex construction for P_k, k > 4
Construction path_construction(int k, int n);

// dominating-set construction for S_k
Construction star_construction(int k, int n);

// two-block construction for GS_{k,m}, m >= 2
Construction genstar_construction(int k, int m, int n);

// Hamming-code construction for the double star S_{k x r}, k >= r >= 2
Construction doublestar_construction(int k, int r, int n);

// two- or three-code construction for S_{k_1 x ... x k_m}, m = 3 or 4
Construction multistar_construction(const std::vector<int>& degrees, int n);

// dominating-subcube construction for general caterpillars (m >= 4 spine)
Construction caterpillar_construction(const std::vector<int>& degrees, int n);

// dominating-subcube construction for very generalized stars
Construction vgs_construction(int k, int m, const std::vector<std::vector<int>>& leg_degrees,
                              int n);

// every builder whose family matches the tree literal, tried in theorem
// order (disjoint subcubes first); a builder that throws is recorded as a
// "refused" entry carrying the message, without a graph
std::vector<Construction> applicable_constructions(const std::string& tree_literal, int n);

}  // namespace qsat
