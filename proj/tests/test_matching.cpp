#include "gfactor/matching.hpp"

#include "doctest.h"
#include "gfactor/rng.hpp"

using namespace gfactor;
using ME = MatchingGraph::Edge;

namespace {

MatchingGraph random_graph(Rng& rng, int max_n = 10, i64 wlo = -20, i64 whi = 20) {
    int n = int(rng.uniform(0, max_n));
    int mmax = n * (n - 1) / 2;
    int m = mmax == 0 ? 0 : int(rng.uniform(0, mmax));
    std::vector<ME> es;
    for (int k = 0; k < m; ++k) {
        int u = int(rng.uniform(0, n - 1));
        int v = int(rng.uniform(0, n - 1));
        if (u == v) continue;  // sparser, not a loop
        es.push_back({u, v, rng.uniform(wlo, whi)});
    }
    return MatchingGraph(n, es);
}

}  // namespace

TEST_CASE("matching graph validates and collapses input edges") {
    CHECK_THROWS_AS(MatchingGraph(2, {{0, 0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(MatchingGraph(2, {{0, 2, 1}}), std::invalid_argument);
    MatchingGraph g(2, {{0, 1, 3}, {1, 0, 7}, {0, 1, 5}});
    REQUIRE(g.edges().size() == 1);
    CHECK(g.edges()[0].w == 7);
}

TEST_CASE("perfect matching on small fixed graphs") {
    SUBCASE("single edge") {
        auto r = max_weight_perfect_matching(MatchingGraph(2, {{0, 1, 5}}));
        REQUIRE(r.feasible);
        CHECK(r.weight == 5);
        CHECK(r.pairs == std::vector<std::pair<int, int>>{{0, 1}});
        CHECK(r.certified);
    }
    SUBCASE("four-cycle picks the heavy opposite pair") {
        MatchingGraph c4(4, {{0, 1, 1}, {1, 2, 2}, {2, 3, 1}, {3, 0, 2}});
        auto r = max_weight_perfect_matching(c4);
        REQUIRE(r.feasible);
        CHECK(r.weight == 4);
    }
    SUBCASE("odd vertex count is infeasible") {
        auto r = max_weight_perfect_matching(MatchingGraph(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}}));
        CHECK_FALSE(r.feasible);
    }
    SUBCASE("empty graph has the empty perfect matching") {
        auto r = max_weight_perfect_matching(MatchingGraph(0, {}));
        CHECK(r.feasible);
        CHECK(r.weight == 0);
    }
    SUBCASE("isolated vertex is infeasible") {
        auto r = max_weight_perfect_matching(MatchingGraph(2, {}));
        CHECK_FALSE(r.feasible);
    }
    SUBCASE("negative weights still force a perfect matching") {
        auto r = max_weight_perfect_matching(MatchingGraph(4, {{0, 1, -4}, {2, 3, -6}}));
        REQUIRE(r.feasible);
        CHECK(r.weight == -10);
    }
    SUBCASE("blossom case: triangle with a tail") {
        // Odd cycle 0-1-2 plus pendant 3; perfect matching must use the tail.
        MatchingGraph g(4, {{0, 1, 10}, {1, 2, 10}, {0, 2, 10}, {2, 3, 1}});
        auto r = max_weight_perfect_matching(g);
        REQUIRE(r.feasible);
        CHECK(r.weight == 11);
    }
}

TEST_CASE("matching is deterministic across repeated runs") {
    Rng rng(0x5eed);
    for (int t = 0; t < 50; ++t) {
        MatchingGraph g = random_graph(rng);
        auto a = max_weight_perfect_matching(g);
        auto b = max_weight_perfect_matching(g);
        CHECK(a.feasible == b.feasible);
        CHECK(a.weight == b.weight);
        CHECK(a.pairs == b.pairs);
    }
}

TEST_CASE("blossom engine agrees with exhaustive search") {
    Rng rng(0xf00d);
    for (int t = 0; t < 3000; ++t) {
        MatchingGraph g = random_graph(rng);
        auto fast = max_weight_perfect_matching(g);
        auto ref = brute_force_perfect_matching(g);
        REQUIRE(fast.feasible == ref.feasible);
        if (ref.feasible) REQUIRE(fast.weight == ref.weight);
    }
}

TEST_CASE("brute-force matcher rejects oversized graphs") {
    CHECK_THROWS_AS(brute_force_perfect_matching(MatchingGraph(13, {})), std::invalid_argument);
}
