#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <set>

#include "doctest.h"
#include "qsat/matching.hpp"

using namespace qsat;

namespace {

bool regular_on_support(const CubeSubgraph& h, int r) {
    for (vertex_t v = 0; v < h.vertex_count(); ++v)
        if (h.degree(v) != 0 && h.degree(v) != r) return false;
    return true;
}

}  // namespace

TEST_CASE("perfect matching of the full cube") {
    for (int k = 1; k <= 5; ++k) {
        CAPTURE(k);
        auto m = perfect_matching(full_cube(k));
        CHECK(m.size() == std::size_t{1} << (k - 1));
        std::set<vertex_t> covered;
        for (auto [u, v] : m) {
            CHECK(weight(u ^ v) == 1);
            covered.insert(u);
            covered.insert(v);
        }
        CHECK(covered.size() == std::size_t{1} << k);
        CHECK(std::is_sorted(m.begin(), m.end()));
    }
}

TEST_CASE("perfect matching skips isolated vertices") {
    CubeSubgraph h(3);
    h.add_edge(0, 1);
    h.add_edge(6, 7);
    auto m = perfect_matching(h);
    CHECK(m == edge_list{{0, 1}, {6, 7}});
}

TEST_CASE("perfect matching infeasibility is reported") {
    CubeSubgraph h(2);
    h.add_edge(0, 1);
    h.add_edge(1, 3);  // path on three vertices has no perfect matching
    CHECK_THROWS_AS(perfect_matching(h), infeasible_error);
}

TEST_CASE("regular extraction from cubes") {
    for (int k = 1; k <= 5; ++k)
        for (int r = 0; r <= k; ++r) {
            CAPTURE(k);
            CAPTURE(r);
            auto sub = extract_regular(full_cube(k), r);
            for (vertex_t v = 0; v < sub.vertex_count(); ++v) CHECK(sub.degree(v) == r);
            CHECK(sub.edge_count() == (std::uint64_t{1} << (k - 1)) * r);
        }
}

TEST_CASE("regular extractions nest") {
    auto b = full_cube(4);
    auto prev = extract_regular(b, 0);
    for (int r = 1; r <= 4; ++r) {
        auto cur = extract_regular(b, r);
        for (auto [u, v] : prev.edges()) CHECK(cur.has_edge(u, v));
        prev = cur;
    }
}

TEST_CASE("extract_regular validates arguments") {
    CHECK_THROWS_AS(extract_regular(full_cube(3), 4), error);
    CHECK_THROWS_AS(extract_regular(full_cube(3), -1), error);
    CubeSubgraph uneven(2);
    uneven.add_edge(0, 1);
    uneven.add_edge(1, 3);
    CHECK_THROWS_AS(extract_regular(uneven, 1), error);  // not regular
}

TEST_CASE("raise_to_degree completes a matching") {
    CubeSubgraph h(2);
    auto full = full_cube(2);
    auto raised = raise_to_degree(h, 1, full.edges());
    CHECK(regular_on_support(raised, 1));
    CHECK(raised.edge_count() == 2);
}

TEST_CASE("raise_to_degree honors mandatory edges") {
    CubeSubgraph h(2);
    auto raised = raise_to_degree(h, 1, full_cube(2).edges(), {{1, 3}});
    CHECK(raised.has_edge(1, 3));
    CHECK(raised.has_edge(0, 2));
    CHECK(raised.edge_count() == 2);
}

TEST_CASE("raise_to_degree reports impossible demands") {
    CubeSubgraph h(2);
    // two mandatory edges at vertex 0 exceed a degree-1 target
    CHECK_THROWS_AS(raise_to_degree(h, 1, {}, {{0, 1}, {0, 2}}), infeasible_error);
    // a single candidate cannot give both endpoints degree 2
    CHECK_THROWS_AS(raise_to_degree(h, 2, {{0, 1}}), infeasible_error);
}

TEST_CASE("raise_to_degree builds regular graphs from larger pools") {
    CubeSubgraph h(3);
    auto raised = raise_to_degree(h, 2, full_cube(3).edges());
    CHECK(regular_on_support(raised, 2));
}
