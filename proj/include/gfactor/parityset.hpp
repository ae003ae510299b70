#pragma once

#include <algorithm>
#include <vector>

#include "gfactor/ints.hpp"

namespace gfactor {

/*
 * Arithmetic progression {lo, lo+2, ..., hi} with step 2.  lo == hi is the
 * singleton.
 */
struct ParityInterval {
    i64 lo = 0;
    i64 hi = 0;

    bool contains(i64 a) const { return lo <= a && a <= hi && ((a - lo) & 1) == 0; }
    i64 count() const { return (hi - lo) / 2 + 1; }
    bool operator==(const ParityInterval&) const = default;
};

/*
 * Finite nonempty set of integers with no gap longer than 1 between
 * consecutive elements (successive sorted elements differ by 1 or 2).
 * These are exactly the one-dimensional degree constraint sets the solver
 * accepts per vertex.
 *
 * The set decomposes uniquely into runs of step-2 elements ("parity
 * intervals"): walking the sorted elements, a difference of 2 continues the
 * current run and a difference of 1 closes it.  Example: {0,1,3,5,6} gives
 * [{0}, {1,3,5}, {6}].  Runs are precomputed; their convex hulls tile
 * [min,max] exactly, which makes interval lookups a binary search.
 */
class GapFreeSet {
  public:
    explicit GapFreeSet(std::vector<i64> elems);

    const std::vector<i64>& elems() const { return elems_; }
    size_t size() const { return elems_.size(); }
    i64 min() const { return elems_.front(); }
    i64 max() const { return elems_.back(); }
    bool in_box(i64 a) const { return min() <= a && a <= max(); }
    bool contains(i64 a) const { return std::binary_search(elems_.begin(), elems_.end(), a); }

    const std::vector<ParityInterval>& intervals() const { return runs_; }

    /* Index of the run whose hull [lo_j, hi_j] contains a.  Pre: in_box(a). */
    int interval_index(i64 a) const;

    /*
     * Number of pairs of consecutive integers {i, i+1} with both endpoints in
     * the set and min(a,b) <= i < max(a,b).  Pre: in_box(a) and in_box(b).
     * Equals |interval_index(a) - interval_index(b)|.
     */
    i64 dist1(i64 a, i64 b) const;

    bool operator==(const GapFreeSet& o) const { return elems_ == o.elems_; }

  private:
    std::vector<i64> elems_;
    std::vector<ParityInterval> runs_;
};

/* Per-vertex degree constraints; vertex ids index the vector. */
using BProfile = std::vector<GapFreeSet>;

/* Product of one parity interval per vertex; the oracle query shape. */
using ParityProduct = std::vector<ParityInterval>;

std::vector<ParityInterval> maximal_parity_intervals(const GapFreeSet& s);

bool in_box(const BProfile& b, const IntVec& x);
bool profile_contains(const BProfile& b, const IntVec& x);
bool product_contains(const ParityProduct& p, const IntVec& x);

/* Sum over vertices of dist1.  Pre: x and y inside the bounding box. */
i64 dist(const BProfile& b, const IntVec& x, const IntVec& y);

/* Number of vertices v with x(v) outside B(v).  Total, no precondition. */
i64 q(const BProfile& b, const IntVec& x);

/* Sum of |B(v)|; the size measure in the iteration bound. */
i64 profile_size(const BProfile& b);

/*
 * The distance-<=2 ball around x in B, written as disjoint parity-interval
 * products.  One product per per-vertex run-index shift vector d with
 * sum |d(v)| <= 2; shifts that run off the end of a vertex's run list are
 * skipped, not clamped.  Pre: profile_contains(b, x).
 *
 * Enumeration order is fixed: the zero shift, then single-vertex shifts
 * (-2,-1,+1,+2 per vertex), then vertex pairs u<v with shifts in
 * (-1,-1),(-1,+1),(+1,-1),(+1,+1).  At most 1 + 4n + 2n(n-1) products.
 */
std::vector<ParityProduct> neighborhood_products(const BProfile& b, const IntVec& x);

}  // namespace gfactor
