#pragma once

#include <optional>
#include <vector>

#include "gfactor/graphfactor.hpp"
#include "gfactor/jumpcore.hpp"
#include "gfactor/parityset.hpp"

namespace gfactor {

/*
 * Caps for the exhaustive reference computations.  Exceeding a cap throws;
 * nothing is ever silently truncated.
 */
struct EnumerationBudget {
    u64 max_subsets = u64(1) << 20;
    u64 max_points = 1'000'000;
};

struct BruteFactorResult {
    bool feasible = false;
    Factor factor;
    i64 value = 0;
    IntVec degrees;
};

/*
 * Maximum-weight factor with every degree in its B set, by scanning all
 * 2^edges subsets in ascending bitmask order (first mask wins ties, so the
 * result is deterministic).  Weights are the graph's; callers wanting edge
 * counts pass g.with_unit_weights().
 */
BruteFactorResult brute_optimal_factor(const MultiGraph& g, const BProfile& b,
                                       const EnumerationBudget& budget = {});

/* Reference for oracle_parity_factor: same scan restricted to a product. */
OracleAnswer brute_oracle(const MultiGraph& g, const ParityProduct& box,
                          const EnumerationBudget& budget = {});

/*
 * All points of B within distance radius of x, in lexicographic order.
 * Pre: x inside B's bounding box; the box size must fit the points budget.
 */
std::vector<IntVec> brute_ball(const BProfile& b, const IntVec& x, i64 radius = 2,
                               const EnumerationBudget& budget = {});

/* max{ w(F) : d_F = x }, or nullopt when x is no subgraph's degree sequence. */
std::optional<i64> brute_point_value(const MultiGraph& g, const IntVec& x,
                                     const EnumerationBudget& budget = {});

bool brute_membership(const MultiGraph& g, const IntVec& x, const EnumerationBudget& budget = {});

}  // namespace gfactor
