#pragma once

#include <any>
#include <functional>
#include <vector>

#include "gfactor/parityset.hpp"

namespace gfactor {

/*
 * Answer of one oracle call on a parity-interval product.  When feasible,
 * point is a maximizer of the instantiation's objective inside the product
 * and value is the objective there; witness carries an instantiation-specific
 * payload (the graph oracle stores the edge set realizing the point).
 */
struct OracleAnswer {
    bool feasible = false;
    i64 value = 0;
    IntVec point;
    std::any witness;
};

/*
 * Exact maximization oracle over the feasible set restricted to a product of
 * parity intervals.  Implementations must be deterministic for a fixed
 * instance and safe for concurrent read-only queries.
 */
class JumpOracle {
  public:
    virtual ~JumpOracle() = default;
    virtual OracleAnswer maximize(const ParityProduct& box) const = 0;
};

/*
 * Bookkeeping for one local-search run.  value_sequence holds the objective
 * of the start point followed by the best neighborhood value of every pass,
 * so it is strictly increasing except for the final repeated entry that
 * triggers termination.  point_sequence holds the accepted points in order,
 * starting at x0.
 */
struct SearchTrace {
    i64 iterations = 0;    // neighborhood passes, including the final no-improvement one
    i64 oracle_calls = 0;  // total oracle invocations, bootstrap included
    std::vector<i64> value_sequence;
    std::vector<IntVec> point_sequence;
    IntVec final_point;
};

struct LocalSearchResult {
    IntVec point;
    i64 value = 0;
    SearchTrace trace;
    std::any witness;  // from the last improving oracle answer (bootstrap answer if none)
};

/* One oracle call on the singleton product at x: true iff x is feasible. */
bool membership(const JumpOracle& oracle, const IntVec& x);

/*
 * Best oracle answer over the distance-<=2 neighborhood of x, scanning the
 * products from neighborhood_products in their fixed order.  Ties on value
 * are broken toward the lexicographically smallest point.  Pre: x in B.
 * Throws std::logic_error when every product is infeasible (possible only
 * when x itself is not feasible).  When oracle_calls is non-null it is
 * incremented once per oracle invocation.
 */
OracleAnswer best_in_neighborhood(const JumpOracle& oracle, const BProfile& b, const IntVec& x,
                                  i64* oracle_calls = nullptr);

/*
 * Greedy ascent: repeatedly replace x by the best point within distance 2
 * until the value stops strictly increasing.  The oracle owns the objective;
 * the optional value_of is evaluated once at x0 and must agree with the
 * oracle (a cheap cross-check for instantiations that can price points
 * directly).  Pre: x0 in B and feasible; both are verified up front, the
 * latter by a bootstrap singleton call that also prices x0.
 */
LocalSearchResult local_search(const JumpOracle& oracle, const BProfile& b, const IntVec& x0,
                               const std::function<i64(const IntVec&)>& value_of = {});

/*
 * Reference oracle for the partition-system feasible set
 *   { x : sum_v x(v) = total, 0 <= x(v) <= capacity(v) }
 * with linear objective c.  Maximizes by dynamic programming over vertices
 * and running sum; among maximizers the lexicographically smallest point is
 * returned.  Pre: capacity(v) >= 0, total >= 0.
 */
OracleAnswer partition_system_oracle(const ParityProduct& box, const IntVec& capacity, i64 total,
                                     const IntVec& c);

class PartitionSystemOracle : public JumpOracle {
  public:
    PartitionSystemOracle(IntVec capacity, i64 total, IntVec c)
        : capacity_(std::move(capacity)), total_(total), c_(std::move(c)) {}

    OracleAnswer maximize(const ParityProduct& box) const override {
        return partition_system_oracle(box, capacity_, total_, c_);
    }

  private:
    IntVec capacity_;
    i64 total_;
    IntVec c_;
};

}  // namespace gfactor
