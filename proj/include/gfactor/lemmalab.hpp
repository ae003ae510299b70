#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gfactor/bruteforce.hpp"
#include "gfactor/graphfactor.hpp"
#include "gfactor/parityset.hpp"
#include "gfactor/rng.hpp"

namespace gfactor {

/*
 * Randomized certification harness for the structural facts the solver's
 * correctness rests on: the parity identity linking dist to the one-norm, the
 * existence of profitable distance-2 steps, the nested-chain construction,
 * the local-implies-global property of the neighborhood, and the exchange
 * inequality of the weighted objective.  Nothing here proves anything; each
 * suite either corroborates a fact over many random instances or hands back a
 * concrete counterexample.
 */

/*
 * A two-step decomposition: x, y in B and pieces p_1..p_l with ||p_i||_1 = 2,
 * sum p_i = y - x, and ||y - x||_1 = 2 l.  The two norm conditions together
 * force every piece entry to point toward y in its coordinate (no
 * cancellation).  w holds one integer weight per piece.
 */
struct DecompositionInstance {
    BProfile b;
    IntVec x, y;
    std::vector<IntVec> p;
    IntVec w;
};

/* Throws std::invalid_argument describing the first violated condition. */
void validate_decomposition(const DecompositionInstance& inst);

/* Pluggable distance, used to corrupt dist on purpose in sanity tests. */
using DistFn = std::function<i64(const BProfile&, const IntVec&, const IntVec&)>;

/*
 * Parity identity: dist(x,y) + ||x-y||_1 + q(x) + q(y) is even for any x, y
 * inside B's bounding box.  Returns true iff the sum is even; dist_fn
 * replaces the distance when provided.
 */
bool check_parity_lemma(const BProfile& b, const IntVec& x, const IntVec& y,
                        const DistFn& dist_fn = {});

/* One profitable half-way point of a distance-4 decomposition instance. */
struct StepSolution {
    std::vector<int> indices;  // chosen piece indices, ascending
    IntVec z;                  // x + sum of chosen pieces
    i64 gain = 0;              // summed weight of the chosen pieces
};

/*
 * Searches all 2^l piece subsets of a dist(x,y) == 4 instance, in ascending
 * bitmask order, for I with z = x + sum_I p in B, dist(x,z) = 2 and
 * w(I) >= min{0, w([l])}.  The existence fact says this never returns
 * nullopt; a nullopt is a counterexample and fails the suite.
 * Throws std::invalid_argument when dist(x,y) != 4 or the instance is
 * malformed.
 */
std::optional<StepSolution> find_lemma2_solution(const DecompositionInstance& inst);

/*
 * Role symmetry of the step existence fact: the complement of a solution's
 * index set must certify the instance with x and y swapped (same z, now at
 * distance 2 from y, with the negated weight inequality).
 */
bool check_remark1_complement(const DecompositionInstance& inst, const StepSolution& sol);

/* The state tracked while growing a chain level: (dist(x,z), q(z)). */
struct PhiState {
    i64 dist = 0;
    i64 q = 0;

    bool operator==(const PhiState&) const = default;
};

/* phi of a candidate point relative to a level start.  Pre: z in the box. */
PhiState phi(const BProfile& b, const IntVec& x, const IntVec& z);

/*
 * Builds the nested index sets {} = I_0 < I_1 < ... < I_k = [l] of a
 * decomposition with dist(x,y) = 2k, such that every partial point
 * z_j = x + sum_{I_j} p lies in B with dist(z_{j-1}, z_j) = 2.  Levels are
 * grown greedily, keeping phi(z) relative to the level start inside
 * {(0,0),(0,2),(1,1)} until it hits (2,0): at (0,0) the smallest unused piece
 * is added; otherwise the smallest coordinate a with z(a) outside B(a) picks
 * the smallest unused piece with p_i(a) >= 1.  Once the residual distance to
 * y is exactly 2 the remaining pieces are committed as one final block.
 *
 * Input pieces may be oriented either way; axes are sign-normalized
 * internally.  Returns the full chain including I_0 = {} (k+1 sets).
 * Throws std::invalid_argument on malformed input (including dist(x,y) odd
 * after halving, or dist 0 with pieces left over) and std::logic_error if
 * the greedy growth ever leaves the allowed phi states, which the
 * construction rules out.
 */
std::vector<std::vector<int>> build_chain(const BProfile& b, const IntVec& x, const IntVec& y,
                                          const std::vector<IntVec>& p);

/*
 * Local optima of the degree-sequence objective are global: enumerates every
 * degree sequence of a subgraph that lies in B, prices each point (degree sum
 * in cardinality mode, best subgraph weight in weighted mode), and returns
 * false iff some point beats every point within distance 2 yet misses the
 * global maximum.
 */
bool check_corollary1(const MultiGraph& g, const BProfile& b, Objective mode,
                      const EnumerationBudget& budget = {});

/*
 * Exchange inequality of f(x) = max{ w(F) : d_F = x }: for random pairs
 * x, y of subgraph degree sequences and every unit step s from x toward y,
 * some second step t toward y satisfies
 *   f(x+s+t) + f(y-s-t) >= f(x) + f(y).
 * Returns false iff a sampled pair violates it.
 */
bool check_mjump(const MultiGraph& g, int samples, Rng& rng, const EnumerationBudget& budget = {});

struct DecompGenOptions {
    int min_vertices = 1;
    int max_vertices = 4;
    int max_set_size = 7;  // elements per coordinate set
    i64 lo_min = -6;
    i64 lo_max = 6;
    int max_pieces = 10;
    i64 wlo = -10;
    i64 whi = 10;
};

/*
 * Random decomposition instance with dist(x,y) == target_dist (even, >= 0).
 * Coordinates walk across run boundaries in a per-coordinate fixed direction
 * until the target distance is reached, occasionally wiggling inside a run to
 * vary l; the accumulated unit moves are then shuffled and paired into
 * pieces.  Resamples internally until the piece budget is met.
 */
DecompositionInstance random_decomposition_instance(Rng& rng, i64 target_dist,
                                                    const DecompGenOptions& opt = {});

/*
 * One verification sweep.  failures counts trials whose fact did not hold;
 * first_failure describes the earliest one (trial index plus a short
 * serialization of the offending instance), empty when all passed.
 */
struct SuiteReport {
    std::string suite;
    i64 trials = 0;
    i64 failures = 0;
    u64 seed = 0;
    std::string first_failure;
};

/*
 * The parity sweep, separated out so tests can corrupt the distance and
 * watch the suite fail.  Draws random profiles and in-box point pairs.
 */
SuiteReport run_parity_suite(u64 seed, i64 trials, const DistFn& dist_fn = {});

/*
 * All verification suites with their default trial counts (overridable all
 * at once).  Per-suite RNG streams are derived from the master seed, so one
 * seed reproduces every instance.  Suites: parity, local-improvement, chain,
 * local-global, update-ratio, sbo, sbo-m, mjump.
 */
std::vector<SuiteReport> run_verify_suites(u64 seed, std::optional<i64> trials_override = {});

}  // namespace gfactor
