#pragma once

#include <utility>
#include <vector>

#include "gfactor/ints.hpp"

namespace gfactor {

/*
 * Simple undirected weighted graph for the perfect-matching engine.
 * No self-loops; parallel edges are collapsed on construction keeping the
 * maximum weight, so edge ids below refer to the collapsed list.
 */
class MatchingGraph {
  public:
    struct Edge {
        int u, v;
        i64 w;
    };

    MatchingGraph(int n, const std::vector<Edge>& edges);

    int n() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }

  private:
    int n_;
    std::vector<Edge> edges_;
};

struct MatchingResult {
    bool feasible = false;  // a perfect matching exists
    i64 weight = 0;         // total weight of the returned matching
    std::vector<int> mate;  // partner vertex per vertex, -1 if unmatched
    std::vector<std::pair<int, int>> pairs;  // matched (u,v) with u < v, sorted
    bool certified = false;  // duals passed the complementary-slackness check
};

/*
 * Exact maximum-weight perfect matching via the primal-dual blossom method
 * (Galil-style O(n^3) dual updates, van Rantwijk's data layout).  Integer
 * weights only; duals stay integral because edge weights are doubled inside
 * the slack computation.  When no perfect matching exists the result reports
 * feasible == false and carries the maximum-cardinality matching found.
 *
 * Deterministic: identical inputs give identical matchings (ties resolved by
 * edge id order).
 */
MatchingResult max_weight_perfect_matching(const MatchingGraph& g);

/* Exhaustive reference matcher.  Pre: g.n() <= 12. */
MatchingResult brute_force_perfect_matching(const MatchingGraph& g);

}  // namespace gfactor
