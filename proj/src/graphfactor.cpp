#include "gfactor/graphfactor.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace gfactor {

MultiGraph::MultiGraph(int n, std::vector<GraphEdge> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ < 0) throw std::invalid_argument("MultiGraph: negative vertex count");
    for (const GraphEdge& e : edges_) {
        if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_)
            throw std::invalid_argument("MultiGraph: edge endpoint out of range");
        if (e.w > INT32_MAX || e.w < INT32_MIN)
            throw std::invalid_argument("MultiGraph: edge weight exceeds 32 bits");
    }
}

i64 MultiGraph::max_degree(int v) const {
    i64 d = 0;
    for (const GraphEdge& e : edges_) {
        if (e.u == v) ++d;
        if (e.v == v) ++d;
    }
    return d;
}

MultiGraph MultiGraph::with_unit_weights() const {
    std::vector<GraphEdge> es = edges_;
    for (GraphEdge& e : es) e.w = 1;
    return MultiGraph(n_, std::move(es));
}

void validate_factor(const MultiGraph& g, const Factor& f) {
    int prev = -1;
    for (int id : f) {
        if (id < 0 || id >= g.edge_count())
            throw std::invalid_argument("factor: edge id out of range");
        if (id <= prev) throw std::invalid_argument("factor: edge ids must be strictly increasing");
        prev = id;
    }
}

IntVec degree_sequence(const MultiGraph& g, const Factor& f) {
    validate_factor(g, f);
    IntVec d(size_t(g.vertex_count()), 0);
    for (int id : f) {
        const GraphEdge& e = g.edge(id);
        ++d[size_t(e.u)];
        ++d[size_t(e.v)];  // u == v for a self-loop, so loops count twice
    }
    return d;
}

i64 factor_weight(const MultiGraph& g, const Factor& f) {
    validate_factor(g, f);
    i128 acc = 0;
    for (int id : f) acc += g.edge(id).w;
    return checked_i64(acc, "factor_weight");
}

Factor factor_toggle(const Factor& a, const Factor& b) {
    Factor out;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

TwoStepDecomposition sbo_witness(const MultiGraph& g, const Factor& m, const Factor& n) {
    validate_factor(g, m);
    validate_factor(g, n);

    // Edges of M xor N, tagged by side: false = only in M, true = only in N.
    std::vector<int> diff;
    std::vector<bool> from_n;
    size_t i = 0, j = 0;
    while (i < m.size() || j < n.size()) {
        if (j == n.size() || (i < m.size() && m[i] < n[j])) {
            diff.push_back(m[i++]);
            from_n.push_back(false);
        } else if (i == m.size() || n[j] < m[i]) {
            diff.push_back(n[j++]);
            from_n.push_back(true);
        } else {
            ++i;
            ++j;
        }
    }

    // Two endpoint slots per difference edge: slot 2k sits at u, 2k+1 at v.
    // A self-loop places both of its slots at the same vertex.
    auto slot_vertex = [&](int s) {
        const GraphEdge& e = g.edge(diff[size_t(s) / 2]);
        return (s & 1) ? e.v : e.u;
    };

    int nslots = 2 * int(diff.size());
    std::vector<int> partner(size_t(nslots), -1);
    {
        std::vector<std::vector<int>> mside(size_t(g.vertex_count())), nside(size_t(g.vertex_count()));
        for (int s = 0; s < nslots; ++s)
            (from_n[size_t(s) / 2] ? nside : mside)[size_t(slot_vertex(s))].push_back(s);
        // Glue the k-th M-side slot to the k-th N-side slot at every vertex.
        // Leftover slots all carry the vertex's majority side, so the two free
        // ends of a trail never cancel inside one coordinate.
        for (int v = 0; v < g.vertex_count(); ++v) {
            size_t k = std::min(mside[size_t(v)].size(), nside[size_t(v)].size());
            for (size_t t = 0; t < k; ++t) {
                partner[size_t(mside[size_t(v)][t])] = nside[size_t(v)][t];
                partner[size_t(nside[size_t(v)][t])] = mside[size_t(v)][t];
            }
        }
    }

    TwoStepDecomposition out;
    std::vector<bool> seen(size_t(nslots), false);
    auto end_sign = [&](int s) { return from_n[size_t(s) / 2] ? i64(1) : i64(-1); };

    // Open trails start at unglued slots; walks alternate sides by construction.
    for (int s0 = 0; s0 < nslots; ++s0) {
        if (partner[size_t(s0)] != -1 || seen[size_t(s0)]) continue;
        DecompPiece piece;
        piece.p.assign(size_t(g.vertex_count()), 0);
        piece.p[size_t(slot_vertex(s0))] += end_sign(s0);
        int cur = s0;
        for (;;) {
            seen[size_t(cur)] = true;
            int far = cur ^ 1;
            seen[size_t(far)] = true;
            int id = diff[size_t(cur) / 2];
            piece.carrier.push_back(id);
            piece.gain += from_n[size_t(cur) / 2] ? g.edge(id).w : -g.edge(id).w;
            int nxt = partner[size_t(far)];
            if (nxt == -1) {
                piece.p[size_t(slot_vertex(far))] += end_sign(far);
                break;
            }
            cur = nxt;
        }
        out.pieces.push_back(std::move(piece));
    }

    // Everything still unseen is glued at both ends: alternating cycles.
    for (int s0 = 0; s0 < nslots; ++s0) {
        if (seen[size_t(s0)]) continue;
        std::vector<int> cyc;
        int cur = s0;
        do {
            seen[size_t(cur)] = true;
            seen[size_t(cur ^ 1)] = true;
            cyc.push_back(diff[size_t(cur) / 2]);
            cur = partner[size_t(cur ^ 1)];
        } while (cur != s0);
        out.cycles.push_back(std::move(cyc));
    }

    return out;
}

ParityReduction parity_to_bfactor(const MultiGraph& g, const ParityProduct& box) {
    int nv = g.vertex_count();
    if (int(box.size()) != nv) throw std::invalid_argument("parity_to_bfactor: dimension mismatch");

    std::vector<GraphEdge> es = g.edges();
    IntVec demand(size_t(nv), 0);
    for (int v = 0; v < nv; ++v) {
        const ParityInterval& it = box[size_t(v)];
        if (it.lo > it.hi || ((it.hi - it.lo) & 1) != 0)
            throw std::invalid_argument("parity_to_bfactor: malformed parity interval");
        demand[size_t(v)] = it.hi;
        for (i64 k = 0; k < (it.hi - it.lo) / 2; ++k) es.push_back(GraphEdge{v, v, 0});
    }
    return ParityReduction{MultiGraph(nv, std::move(es)), std::move(demand), g.edge_count()};
}

BFactorReduction bfactor_to_matching(const MultiGraph& g, const IntVec& demand) {
    int nv = g.vertex_count();
    if (int(demand.size()) != nv) throw std::invalid_argument("bfactor_to_matching: dimension mismatch");
    i64 total = 0;
    for (i64 b : demand) {
        if (b < 0) throw std::invalid_argument("bfactor_to_matching: negative demand");
        total += b;
    }
    if (total + 2 * i64(g.edge_count()) > 10'000'000)
        throw std::invalid_argument("bfactor_to_matching: gadget would exceed 10^7 nodes");

    BFactorReduction red;
    red.copy_start.assign(size_t(nv) + 1, 0);
    for (int v = 0; v < nv; ++v)
        red.copy_start[size_t(v) + 1] = red.copy_start[size_t(v)] + int(demand[size_t(v)]);
    red.gadget_start = red.copy_start[size_t(nv)];
    if (total % 2 != 0) return red;  // parity_ok stays false: odd demand total is hopeless
    red.parity_ok = true;

    std::vector<MatchingGraph::Edge> es;
    for (int id = 0; id < g.edge_count(); ++id) {
        const GraphEdge& e = g.edge(id);
        int a = red.gadget_start + 2 * id;
        es.push_back({a, a + 1, 0});
        for (int c = red.copy_start[size_t(e.u)]; c < red.copy_start[size_t(e.u) + 1]; ++c)
            es.push_back({c, a, e.w});
        for (int c = red.copy_start[size_t(e.v)]; c < red.copy_start[size_t(e.v) + 1]; ++c)
            es.push_back({c, a + 1, e.w});
    }
    red.graph = MatchingGraph(red.gadget_start + 2 * g.edge_count(), es);
    return red;
}

Factor decode_bfactor_matching(const MultiGraph& g, const BFactorReduction& red,
                               const MatchingResult& mr) {
    if (!red.parity_ok || !mr.feasible)
        throw std::invalid_argument("decode_bfactor_matching: no perfect matching to decode");
    Factor f;
    for (int id = 0; id < g.edge_count(); ++id) {
        int a = red.gadget_start + 2 * id;
        // The inner edge is matched exactly when the original edge is skipped.
        if (mr.mate[size_t(a)] != a + 1) f.push_back(id);
    }
    return f;
}

OracleAnswer oracle_parity_factor(const MultiGraph& g, const ParityProduct& box) {
    int nv = g.vertex_count();
    if (int(box.size()) != nv) throw std::invalid_argument("oracle_parity_factor: dimension mismatch");

    // Clip every interval to the attainable degree range [0, max_degree],
    // preserving parity.  This leaves the feasible set untouched.
    ParityProduct clipped(box);
    for (int v = 0; v < nv; ++v) {
        ParityInterval& it = clipped[size_t(v)];
        if (it.lo > it.hi || ((it.hi - it.lo) & 1) != 0)
            throw std::invalid_argument("oracle_parity_factor: malformed parity interval");
        i64 cap = g.max_degree(v);
        if (it.lo < 0) it.lo += 2 * ((-it.lo + 1) / 2);
        if (it.hi > cap) it.hi -= 2 * ((it.hi - cap + 1) / 2);
        if (it.lo > it.hi) return {};
    }

    ParityReduction pr = parity_to_bfactor(g, clipped);
    BFactorReduction br = bfactor_to_matching(pr.graph, pr.demand);
    if (!br.parity_ok) return {};
    MatchingResult mr = max_weight_perfect_matching(br.graph);
    if (!mr.feasible) return {};

    Factor f;
    for (int id : decode_bfactor_matching(pr.graph, br, mr))
        if (id < pr.original_edges) f.push_back(id);

    OracleAnswer ans;
    ans.feasible = true;
    ans.point = degree_sequence(g, f);
    ans.value = factor_weight(g, f);
    if (!product_contains(box, ans.point))
        throw std::logic_error("oracle_parity_factor: decoded degrees left the requested product");
    if (mr.weight != 2 * ans.value)
        throw std::logic_error("oracle_parity_factor: matching weight does not double the factor weight");
    ans.witness = std::move(f);
    return ans;
}

GraphFactorOracle::GraphFactorOracle(const MultiGraph& g, Objective mode)
    : work_(mode == Objective::cardinality ? g.with_unit_weights() : g), mode_(mode) {}

OracleAnswer GraphFactorOracle::maximize(const ParityProduct& box) const {
    OracleAnswer ans = oracle_parity_factor(work_, box);
    if (ans.feasible && mode_ == Objective::cardinality) {
        i64 s = 0;
        for (i64 d : ans.point) s += d;
        ans.value = s;  // all-ones objective: the degree total, twice the edge count
    }
    return ans;
}

std::optional<Factor> initial_factor(const MultiGraph& g, const BProfile& b,
                                     const std::optional<Factor>& provided, u64 max_subsets) {
    if (int(b.size()) != g.vertex_count())
        throw std::invalid_argument("initial_factor: dimension mismatch");
    if (provided) {
        IntVec d = degree_sequence(g, *provided);
        for (int v = 0; v < g.vertex_count(); ++v)
            if (!b[size_t(v)].contains(d[size_t(v)]))
                throw std::invalid_argument("initial_factor: provided factor gives vertex " +
                                            std::to_string(v) + " degree " +
                                            std::to_string(d[size_t(v)]) + ", not in its B set");
        return provided;
    }

    int m = g.edge_count();
    if (m >= 63 || (u64(1) << m) > max_subsets)
        throw std::invalid_argument("initial_factor: scanning 2^" + std::to_string(m) +
                                    " edge subsets exceeds the budget");
    for (u64 mask = 0; mask < (u64(1) << m); ++mask) {
        IntVec d(size_t(g.vertex_count()), 0);
        for (int id = 0; id < m; ++id)
            if (mask >> id & 1) {
                ++d[size_t(g.edge(id).u)];
                ++d[size_t(g.edge(id).v)];
            }
        bool ok = true;
        for (int v = 0; ok && v < g.vertex_count(); ++v) ok = b[size_t(v)].contains(d[size_t(v)]);
        if (ok) {
            Factor f;
            for (int id = 0; id < m; ++id)
                if (mask >> id & 1) f.push_back(id);
            return f;
        }
    }
    return std::nullopt;
}

SolveResult solve_general_factor(const MultiGraph& g, const BProfile& b, Objective mode,
                                 const std::optional<Factor>& provided_initial, u64 initial_budget) {
    SolveResult out;
    std::optional<Factor> f0 = initial_factor(g, b, provided_initial, initial_budget);
    if (!f0) return out;

    GraphFactorOracle oracle(g, mode);
    std::function<i64(const IntVec&)> value_of;
    if (mode == Objective::cardinality)
        value_of = [](const IntVec& x) {
            i64 s = 0;
            for (i64 d : x) s += d;
            return s;
        };
    LocalSearchResult res = local_search(oracle, b, degree_sequence(g, *f0), value_of);

    Factor fstar;
    if (const Factor* wf = std::any_cast<Factor>(&res.witness)) {
        fstar = *wf;
    } else {
        // Fallback: price the final point once more and take that witness.
        ParityProduct at;
        for (i64 a : res.point) at.push_back(ParityInterval{a, a});
        OracleAnswer again = oracle.maximize(at);
        if (!again.feasible) throw std::logic_error("solve_general_factor: final point lost feasibility");
        fstar = std::any_cast<Factor>(std::move(again.witness));
    }
    if (degree_sequence(g, fstar) != res.point)
        throw std::logic_error("solve_general_factor: witness degrees disagree with the final point");

    out.feasible = true;
    out.factor = std::move(fstar);
    out.degrees = res.point;
    out.value = mode == Objective::weighted ? factor_weight(g, out.factor) : i64(out.factor.size());
    if ((mode == Objective::weighted && out.value != res.value) ||
        (mode == Objective::cardinality && 2 * out.value != res.value))
        throw std::logic_error("solve_general_factor: witness value disagrees with the driver");
    out.trace = std::move(res.trace);
    return out;
}

}  // namespace gfactor
