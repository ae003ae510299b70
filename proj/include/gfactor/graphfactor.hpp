#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gfactor/jumpcore.hpp"
#include "gfactor/matching.hpp"
#include "gfactor/parityset.hpp"

namespace gfactor {

struct GraphEdge {
    int u = 0, v = 0;
    i64 w = 0;

    bool operator==(const GraphEdge&) const = default;
};

/*
 * Undirected multigraph with integer edge weights.  Parallel edges and
 * self-loops (u == v) are allowed; a self-loop contributes 2 to the degree of
 * its vertex.  Weights must fit in 32 bits so weighted sums stay well inside
 * 64 bits.
 */
class MultiGraph {
  public:
    MultiGraph(int n, std::vector<GraphEdge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return int(edges_.size()); }
    const GraphEdge& edge(int id) const { return edges_[size_t(id)]; }
    const std::vector<GraphEdge>& edges() const { return edges_; }
    bool is_loop(int id) const { return edges_[size_t(id)].u == edges_[size_t(id)].v; }

    /* Degree of v when every edge is taken: incidences, loops counting 2. */
    i64 max_degree(int v) const;

    /* Same vertices and edges with every weight replaced by 1. */
    MultiGraph with_unit_weights() const;

  private:
    int n_;
    std::vector<GraphEdge> edges_;
};

/* Edge subset, stored as strictly increasing edge ids. */
using Factor = std::vector<int>;

/* Throws when ids are out of range, unsorted, or repeated. */
void validate_factor(const MultiGraph& g, const Factor& f);

/* d_F: per-vertex incidence count of F, self-loops counting 2. */
IntVec degree_sequence(const MultiGraph& g, const Factor& f);

i64 factor_weight(const MultiGraph& g, const Factor& f);

/* Symmetric difference of two factors, again sorted ids. */
Factor factor_toggle(const Factor& a, const Factor& b);

enum class Objective { cardinality, weighted };

/*
 * One alternating trail of the symmetric difference of two factors M, N.
 * p is the degree change of swapping the trail into M (+1 per N-side trail
 * end, -1 per M-side end, interior visits cancel), so ||p||_1 = 2; gain is
 * w(N on the trail) - w(M on the trail); carrier lists the trail's edges in
 * walk order.
 */
struct DecompPiece {
    IntVec p;
    i64 gain = 0;
    std::vector<int> carrier;
};

/*
 * M xor N split into alternating trails (pieces) and alternating cycles.
 * The piece vectors p_i sum to d_N - d_M with no cancellation; toggling M
 * with any subset of the carriers yields a subgraph whose degrees are
 * d_M + sum of the chosen p_i, which is what makes the degree-sequence set
 * exchangeable.  Cycles change no degrees and are reported separately.
 */
struct TwoStepDecomposition {
    std::vector<DecompPiece> pieces;
    std::vector<std::vector<int>> cycles;
};

TwoStepDecomposition sbo_witness(const MultiGraph& g, const Factor& m, const Factor& n);

/*
 * Reduction step one: degrees constrained to a parity interval per vertex
 * become exact degree demands.  Appends (hi-lo)/2 zero-weight self-loops per
 * vertex (after the original edges, vertex order) and demands degree hi;
 * consuming k of the loops lowers the decoded original degree by 2k.
 */
struct ParityReduction {
    MultiGraph graph;
    IntVec demand;
    int original_edges = 0;
};

ParityReduction parity_to_bfactor(const MultiGraph& g, const ParityProduct& box);

/*
 * Reduction step two: exact degree demands become perfect matching.  Vertex v
 * becomes demand(v) copies (contiguous, vertex order); edge e becomes two
 * gadget nodes joined by a weight-0 inner edge, with weight-w(e) spokes from
 * one gadget node to every copy of u and from the other to every copy of v
 * (both to the copies of v for a self-loop).  A selected edge therefore adds
 * exactly 2 w(e) to the matching weight, and a perfect matching of weight W
 * decodes to a demand-exact subgraph of weight W/2.
 */
struct BFactorReduction {
    MatchingGraph graph{0, {}};
    bool parity_ok = false;  // false when the demand total is odd (no matching built)
    std::vector<int> copy_start;  // copies of v occupy [copy_start[v], copy_start[v+1])
    int gadget_start = 0;         // edge e owns nodes gadget_start + 2e and + 2e + 1
};

BFactorReduction bfactor_to_matching(const MultiGraph& g, const IntVec& demand);

/* Selected edge ids of a perfect matching on the gadget.  Pre: result feasible. */
Factor decode_bfactor_matching(const MultiGraph& g, const BFactorReduction& red,
                               const MatchingResult& mr);

/*
 * Maximum-weight subgraph with every degree inside its parity interval,
 * solved by the two reductions plus the blossom engine.  The answer's point
 * is the degree sequence, value is the subgraph weight, witness holds the
 * Factor.  Intervals are first clipped to the attainable degree range
 * [0, max_degree(v)] (same parity), which changes nothing about the feasible
 * set but keeps the gadget small and the demands nonnegative.
 */
OracleAnswer oracle_parity_factor(const MultiGraph& g, const ParityProduct& box);

/*
 * The degree-sequence oracle used by the local-search driver.  weighted mode
 * prices a point x at max{ w(F) : d_F = x }; cardinality mode prices it at
 * sum_v x(v), i.e. twice the edge count, by running the reduction with unit
 * weights.
 */
class GraphFactorOracle : public JumpOracle {
  public:
    GraphFactorOracle(const MultiGraph& g, Objective mode);

    OracleAnswer maximize(const ParityProduct& box) const override;

  private:
    MultiGraph work_;
    Objective mode_;
};

/*
 * Start factor for the search: a provided factor is validated (throws naming
 * the first violating vertex), otherwise edge subsets are scanned in
 * ascending bitmask order.  Returns nullopt when the full scan certifies that
 * no feasible factor exists; throws when 2^edges exceeds max_subsets.
 */
std::optional<Factor> initial_factor(const MultiGraph& g, const BProfile& b,
                                     const std::optional<Factor>& provided,
                                     u64 max_subsets = u64(1) << 24);

struct SolveResult {
    bool feasible = false;
    Factor factor;
    i64 value = 0;  // w(F) in weighted mode, |F| in cardinality mode
    IntVec degrees;
    SearchTrace trace;
};

/*
 * End-to-end solver: initial factor, then local search driven by
 * GraphFactorOracle.  The returned factor is the witness of the last
 * improving oracle call (re-solving the singleton product at the final point
 * as a fallback), so its weight always equals the reported value.
 */
SolveResult solve_general_factor(const MultiGraph& g, const BProfile& b, Objective mode,
                                 const std::optional<Factor>& provided_initial = std::nullopt,
                                 u64 initial_budget = u64(1) << 24);

}  // namespace gfactor
