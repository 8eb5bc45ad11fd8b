// Lower bounds, exact saturation numbers in small cubes, disjoint-path
// numbers, and the two conjecture checkers.
//
// The general lower bound scales the minimum degree forced on one side of
// a saturated graph: any T-saturated subgraph of Q_n has at least
// (d-1)/(2n-d+1) * n 2^{n-1} edges where d = emin(T).  exact_sat settles
// tiny cubes by exhaustive search (n <= 3) and a budgeted branch-and-bound
// (n = 4).  pj_qk computes P_j(Q_k), the largest m such that j disjoint
// paths of length m can leave one vertex, by exhaustive search.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qsat/hypercube.hpp"
#include "qsat/rational.hpp"
#include "qsat/trees.hpp"

namespace qsat {

// ----- lower bound -----

// (d-1)/(2n-d+1) * n 2^{n-1} with d = emin(t); requires d <= n
Rational lower_bound(const Tree& t, int n);

// ----- exact values -----

// minimum edge count of a t-saturated subgraph of Q_n; exhaustive for
// n <= 3, branch-and-bound with a node budget for n = 4 (budget_error
// when exceeded), error for n > 4 or when no saturated subgraph exists
std::uint64_t exact_sat(const Tree& t, int n, std::uint64_t budget = 20'000'000);

// ----- disjoint paths from a vertex -----

// largest m such that j vertex-disjoint paths of length m (sharing only
// the start vertex) fit in Q_k; exhaustive for k <= 4, budgeted for k = 5
int pj_qk(int j, int k, std::uint64_t budget = 50'000'000);

// the rotated direction-interval witness showing P_j(Q_k) >= k - 1 for
// j <= k: path a uses directions a, a+1, ..., a+k-2 (mod k)
std::vector<std::vector<vertex_t>> rotated_paths(int j, int k);

// ----- conjecture checkers -----

struct PjPrediction {
    int j = 0;
    int n = 0;
    std::uint64_t e_count = 0;   // E(n) = sum of C(n, k) over k = 2 .. floor(n/2)
    std::uint64_t o_count = 0;   // O(n) = 2^n - E(n) - 1
    std::uint64_t a = 0;         // floor(E / j)
    std::uint64_t b = 0;         // floor(O / j)
    std::int64_t predicted = 0;  // 2b if min(a, b) = b, else 2a + 1
    std::optional<int> actual;   // pj_qk when affordable
    std::optional<bool> agrees;
};

PjPrediction conjecture_pj(int j, int n);

struct SatBoundCheck {
    int delta = 0;       // emin(t)
    int c = 0;           // max distance to a longest central path
    Rational bound;      // (delta + c - 1) * 2^{n-1}
    std::uint64_t exact = 0;
    bool holds = false;  // exact <= bound
};

// conjectured upper bound (emin + eccentricity from a diameter path)
// against the exact saturation number; n <= 3
SatBoundCheck conjecture_sat_upper(const Tree& t, int n);

// ----- interval summary -----

struct SatInterval {
    std::string tree;
    int n = 0;
    Rational lower;
    std::optional<std::uint64_t> upper;
    std::string upper_method;            // builder that achieved the upper bound
    std::optional<std::uint64_t> exact;  // filled for n <= 3
};

// lower bound, best constructive upper bound, and (small n) exact value
SatInterval satnum(const std::string& tree_literal, int n);

}  // namespace qsat
