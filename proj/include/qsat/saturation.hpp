// The verification core: tree containment, freeness, saturation checking,
// endpoint sets, and greedy completion.
//
// contains_tree runs a backtracking search that assigns tree vertices in
// BFS order from the centroid, pruning candidates whose host degree is
// below the tree degree.  creates_copy pins a tree edge onto the added
// cube edge, so any copy it finds genuinely uses that edge.
//
// An endpoint of H with respect to T is a vertex v at which attaching any
// new incident edge creates a copy of T through v.  The default rule makes
// this literal: some leaf of T can be torn off and re-attached at v, i.e.
// T minus that leaf embeds in H with the leaf's neighbour landing on v.
// Two weaker rules quantify over the existing cube non-edges at v instead
// (all of them / at least one); they are kept as explicit variants because
// the definition's quantifier is genuinely ambiguous, but only the
// attachment rule makes the product-scaling certificate sound.

#pragma once

#include <optional>
#include <vector>

#include "qsat/hypercube.hpp"
#include "qsat/trees.hpp"

namespace qsat {

// map from tree vertex label to cube vertex
using embedding = std::vector<vertex_t>;

// ----- containment -----

std::optional<embedding> contains_tree(const CubeSubgraph& h, const Tree& t);

// containment with tree vertex `root` forced onto cube vertex `at`
std::optional<embedding> contains_tree_rooted(const CubeSubgraph& h, const Tree& t,
                                              int root, vertex_t at);

// true when h plus the cube edge {u, v} holds a copy of t using that edge
bool creates_copy(const CubeSubgraph& h, const Tree& t, vertex_t u, vertex_t v);

// ----- saturation -----

struct SaturationReport {
    bool free = false;       // no copy of the tree in h
    bool saturated = false;  // free and every missing cube edge creates a copy
    std::uint64_t edges = 0;
    edge_list failing_edges;              // missing edges that create no copy
    std::optional<embedding> witness;     // a copy of the tree when not free
};

// freeness first, then every non-edge of Q_dim
SaturationReport is_saturated(const CubeSubgraph& h, const Tree& t);

// ----- endpoints -----

enum class EndpointRule {
    attachment,     // a leaf of t re-attaches at v (default; see header note)
    every_nonedge,  // each existing non-edge at v creates a copy (vacuous: in)
    some_nonedge,   // some existing non-edge at v creates a copy
};

std::vector<vertex_t> endpoints(const CubeSubgraph& h, const Tree& t,
                                EndpointRule rule = EndpointRule::attachment);

// Automorphism a of Q_dim with a(V \ U) inside U, where U = endpoints(h, t);
// translations are searched before proper coordinate permutations, so the
// result is deterministic.  With such an a, the product of h and a(h)
// scales the construction to higher dimensions.  dim <= 7.
std::optional<CubeAutomorphism> endpoint_automorphism_exists(
    const CubeSubgraph& h, const Tree& t, EndpointRule rule = EndpointRule::attachment);

// ----- greedy completion -----

// Adds candidate edges (all missing cube edges by default) in increasing
// canonical order whenever the graph stays t-free.  Every candidate then
// creates a copy, so with the default pool the result is t-saturated.
// Pre: h0 is t-free (error otherwise).
CubeSubgraph greedy_saturate(const CubeSubgraph& h0, const Tree& t,
                             const std::optional<edge_list>& candidates = std::nullopt);

}  // namespace qsat
