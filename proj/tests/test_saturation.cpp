#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <set>

#include "doctest.h"
#include "qsat/saturation.hpp"

using namespace qsat;

namespace {

// ----- fixtures -----

// Q_3 with both vertices of {000, 011} isolated (all their edges removed)
CubeSubgraph q3_minus_two() {
    auto h = full_cube(3);
    for (vertex_t v : {vertex_t{0b000}, vertex_t{0b011}})
        for (vertex_t u : neighbors(v, 3))
            if (h.has_edge(v, u)) h.remove_edge(v, u);
    return h;
}

// two disjoint copies of Q_2 inside Q_3 (split on the top coordinate)
CubeSubgraph two_q2() {
    CubeSubgraph h(3);
    for (vertex_t base : {vertex_t{0}, vertex_t{4}}) {
        h.add_edge(base + 0, base + 1);
        h.add_edge(base + 0, base + 2);
        h.add_edge(base + 1, base + 3);
        h.add_edge(base + 2, base + 3);
    }
    return h;
}

// the 6-cycle left after isolating antipodal vertices of Q_3
CubeSubgraph six_cycle() {
    auto h = full_cube(3);
    for (vertex_t v : {vertex_t{0b000}, vertex_t{0b111}})
        for (vertex_t u : neighbors(v, 3)) h.remove_edge(v, u);
    return h;
}

bool valid_embedding(const CubeSubgraph& h, const Tree& t, const embedding& img) {
    if (static_cast<int>(img.size()) != t.order()) return false;
    std::set<vertex_t> distinct(img.begin(), img.end());
    if (distinct.size() != img.size()) return false;
    for (auto [u, v] : t.edges())
        if (!h.has_edge(img[u], img[v])) return false;
    return true;
}

// ----- independent oracle: label-order assignment with no pruning -----

bool naive_extend(const CubeSubgraph& h, const Tree& t, std::vector<vertex_t>& img,
                  std::vector<char>& used, int v) {
    if (v == t.order()) return true;
    for (vertex_t cand = 0; cand < h.vertex_count(); ++cand) {
        if (used[cand]) continue;
        bool ok = true;
        for (int u : t.adj[v])
            if (u < v && !h.has_edge(img[u], cand)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        img[v] = cand;
        used[cand] = 1;
        if (naive_extend(h, t, img, used, v + 1)) return true;
        used[cand] = 0;
    }
    return false;
}

// relies on tree labels 0..i-1 inducing connected... no: checks only edges
// to already-placed vertices, which covers all edges once v reaches order()
bool naive_contains(const CubeSubgraph& h, const Tree& t) {
    if (t.order() > static_cast<int>(h.vertex_count())) return false;
    std::vector<vertex_t> img(t.order());
    std::vector<char> used(h.vertex_count(), 0);
    return naive_extend(h, t, img, used, 0);
}

bool naive_saturated(const CubeSubgraph& h, const Tree& t) {
    if (naive_contains(h, t)) return false;
    for (auto [u, v] : h.non_edges()) {
        CubeSubgraph plus = h;
        plus.add_edge(u, v);
        if (!naive_contains(plus, t)) return false;
    }
    return true;
}

}  // namespace

// ----- containment -----

TEST_CASE("the full cube contains a hamiltonian path") {
    auto t = build_path(7);
    auto found = contains_tree(full_cube(3), t);
    REQUIRE(found);
    CHECK(valid_embedding(full_cube(3), t, *found));
}

TEST_CASE("an empty graph holds no edge") {
    CubeSubgraph empty(3);
    CHECK(!contains_tree(empty, build_path(1)));
}

TEST_CASE("degree bounds exclude stars from the 6-cycle") {
    CHECK(!contains_tree(six_cycle(), build_star(3)));
    CHECK(contains_tree(six_cycle(), build_path(5)));
    CHECK(!contains_tree(six_cycle(), build_path(6)));
}

TEST_CASE("rooted containment pins the image") {
    auto h = two_q2();
    auto s2 = build_star(2);
    REQUIRE(contains_tree_rooted(h, s2, 0, 0b000));
    auto found = contains_tree_rooted(h, s2, 0, 0b000);
    CHECK((*found)[0] == 0b000);
    // a leaf cannot be the center of S_2 image... every vertex has degree 2 here
    CHECK(contains_tree_rooted(h, s2, 1, 0b000));
    CHECK_THROWS_AS(contains_tree_rooted(h, s2, 5, 0), error);
    CHECK_THROWS_AS(contains_tree_rooted(h, s2, 0, 9), error);
}

TEST_CASE("containment matches the naive oracle on all Q_2 subgraphs") {
    auto all = full_cube(2).edges();
    std::vector<Tree> trees{build_path(1), build_path(2), build_path(3), build_star(3)};
    for (unsigned mask = 0; mask < 16; ++mask) {
        CubeSubgraph h(2);
        for (int i = 0; i < 4; ++i)
            if (mask >> i & 1) h.add_edge(all[i].first, all[i].second);
        for (const auto& t : trees) {
            CAPTURE(mask);
            bool fast = contains_tree(h, t).has_value();
            CHECK(fast == naive_contains(h, t));
            if (fast) CHECK(valid_embedding(h, t, *contains_tree(h, t)));
        }
    }
}

// ----- creates_copy -----

TEST_CASE("cross edges between the Q_2 copies create stars") {
    auto h = two_q2();
    for (vertex_t v = 0; v < 4; ++v) CHECK(creates_copy(h, build_star(3), v, v + 4));
}

TEST_CASE("one added edge alone is only P_1") {
    CubeSubgraph empty(2);
    CHECK(!creates_copy(empty, build_path(2), 0, 1));
    CHECK(creates_copy(empty, build_path(1), 0, 1));
}

TEST_CASE("creates_copy validates the edge") {
    auto h = two_q2();
    CHECK_THROWS_AS(creates_copy(h, build_star(3), 0, 1), error);  // present
    CHECK_THROWS_AS(creates_copy(h, build_star(3), 0, 3), error);  // not a cube edge
}

TEST_CASE("every non-edge of the odd path base creates a new P_5") {
    auto h = q3_minus_two();
    for (auto [u, v] : h.non_edges()) CHECK(creates_copy(h, build_path(5), u, v));
}

// ----- is_saturated -----

TEST_CASE("two disjoint Q_2's are S_3-saturated") {
    auto rep = is_saturated(two_q2(), build_star(3));
    CHECK(rep.free);
    CHECK(rep.saturated);
    CHECK(rep.edges == 8);
    CHECK(rep.failing_edges.empty());
    CHECK(!rep.witness);
}

TEST_CASE("the full cube is not P_7-free") {
    auto rep = is_saturated(full_cube(3), build_path(7));
    CHECK(!rep.free);
    CHECK(!rep.saturated);
    REQUIRE(rep.witness);
    CHECK(valid_embedding(full_cube(3), build_path(7), *rep.witness));
}

TEST_CASE("the empty Q_2 is P_1-saturated") {
    CubeSubgraph empty(2);
    auto rep = is_saturated(empty, build_path(1));
    CHECK(rep.free);
    CHECK(rep.saturated);
    CHECK(rep.edges == 0);
}

TEST_CASE("a free but unsaturated graph lists its failing edges") {
    CubeSubgraph h(2);  // empty, forbidden tree P_2: no edge creates a P_2
    auto rep = is_saturated(h, build_path(2));
    CHECK(rep.free);
    CHECK(!rep.saturated);
    CHECK(rep.failing_edges == full_cube(2).edges());
}

TEST_CASE("saturation agrees with the naive oracle on all Q_2 subgraphs") {
    auto all = full_cube(2).edges();
    std::vector<Tree> trees{build_path(1), build_path(2), build_path(3), build_star(3)};
    for (unsigned mask = 0; mask < 16; ++mask) {
        CubeSubgraph h(2);
        for (int i = 0; i < 4; ++i)
            if (mask >> i & 1) h.add_edge(all[i].first, all[i].second);
        for (const auto& t : trees) {
            CAPTURE(mask);
            CHECK(is_saturated(h, t).saturated == naive_saturated(h, t));
        }
    }
}

TEST_CASE("saturation agrees with the naive oracle on named Q_3 graphs") {
    std::vector<CubeSubgraph> graphs{q3_minus_two(), two_q2(), six_cycle(), full_cube(3),
                                     CubeSubgraph(3)};
    std::vector<Tree> trees{build_path(2), build_path(5), build_star(3)};
    for (const auto& h : graphs)
        for (const auto& t : trees)
            CHECK(is_saturated(h, t).saturated == naive_saturated(h, t));
}

// ----- endpoints -----

TEST_CASE("endpoints of the odd path base are the odd vertices") {
    auto u = endpoints(q3_minus_two(), build_path(5));
    CHECK(u == std::vector<vertex_t>{0b001, 0b010, 0b100, 0b111});
}

TEST_CASE("endpoints of the empty square under P_1") {
    CubeSubgraph empty(2);
    auto u = endpoints(empty, build_path(1));
    CHECK(u == std::vector<vertex_t>{0, 1, 2, 3});
}

TEST_CASE("every vertex of the disjoint squares hosts a new star") {
    auto u = endpoints(two_q2(), build_star(3));
    CHECK(u.size() == 8);
}

TEST_CASE("the non-edge endpoint rules differ on the path base") {
    auto h = q3_minus_two();
    auto t = build_path(5);
    // the base is saturated, so every vertex with a missing edge passes both
    // non-edge rules, and full-degree vertices pass the vacuous one only
    auto every = endpoints(h, t, EndpointRule::every_nonedge);
    CHECK(every.size() == 8);
    auto some = endpoints(h, t, EndpointRule::some_nonedge);
    CHECK(some == std::vector<vertex_t>{0b000, 0b001, 0b010, 0b011, 0b100, 0b111});
}

// ----- endpoint automorphisms -----

TEST_CASE("a weight-1 shift pairs the path base with itself") {
    auto a = endpoint_automorphism_exists(q3_minus_two(), build_path(5));
    REQUIRE(a);
    CHECK(a->shift == 1);
    CHECK(a->perm == std::vector<int>{0, 1, 2});
}

TEST_CASE("full endpoint sets admit the identity") {
    auto a = endpoint_automorphism_exists(two_q2(), build_star(3));
    REQUIRE(a);
    CHECK(a->shift == 0);
    CHECK(a->perm == std::vector<int>{0, 1, 2});
}

TEST_CASE("no automorphism exists into an empty endpoint set") {
    CubeSubgraph empty(2);
    CHECK(!endpoint_automorphism_exists(empty, build_star(3)));
}

TEST_CASE("automorphism search is limited to small cubes") {
    CubeSubgraph big(8);
    CHECK_THROWS_AS(endpoint_automorphism_exists(big, build_path(2)), error);
}

// ----- greedy completion -----

TEST_CASE("greedy saturation of the empty square under P_2") {
    CubeSubgraph empty(2);
    auto done = greedy_saturate(empty, build_path(2));
    CHECK(done.edges() == edge_list{{0, 1}, {2, 3}});
    CHECK(is_saturated(done, build_path(2)).saturated);
}

TEST_CASE("greedy is a fixed point on saturated graphs") {
    auto h = two_q2();
    CHECK(greedy_saturate(h, build_star(3)) == h);
}

TEST_CASE("greedy refuses a seed containing the tree") {
    CHECK_THROWS_AS(greedy_saturate(full_cube(2), build_path(2)), error);
}

TEST_CASE("greedy completion of the 6-cycle under P_6 is saturated") {
    auto done = greedy_saturate(six_cycle(), build_path(6));
    CHECK(is_saturated(done, build_path(6)).saturated);
    CHECK(done.edge_count() >= six_cycle().edge_count());
}

TEST_CASE("greedy respects a candidate filter") {
    CubeSubgraph empty(2);
    edge_list pool{{0, 1}, {0, 2}};
    auto done = greedy_saturate(empty, build_path(2), pool);
    // adds (0,1) then refuses (0,2), which would build a two-edge path
    CHECK(done.edges() == edge_list{{0, 1}});
}

TEST_CASE("greedy output is saturated for every tree family at n = 3") {
    for (const char* lit : {"path:3", "path:4", "star:2", "star:3", "genstar:2x2"}) {
        CAPTURE(lit);
        auto t = parse_tree(lit);
        CubeSubgraph empty(3);
        if (contains_tree(empty, t)) continue;
        auto done = greedy_saturate(empty, t);
        CHECK(is_saturated(done, t).saturated);
    }
}
