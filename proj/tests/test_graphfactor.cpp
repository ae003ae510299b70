#include <algorithm>
#include <any>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "gfactor/bruteforce.hpp"
#include "gfactor/generate.hpp"
#include "gfactor/graphfactor.hpp"
#include "gfactor/rng.hpp"

using namespace gfactor;

namespace {

GapFreeSet gfs(std::initializer_list<i64> xs) { return GapFreeSet(std::vector<i64>(xs)); }

Factor random_factor(Rng& rng, const MultiGraph& g) {
    Factor f;
    for (int id = 0; id < g.edge_count(); ++id)
        if (rng.chance(1, 2)) f.push_back(id);
    return f;
}

Factor sorted_copy(std::vector<int> ids) {
    std::sort(ids.begin(), ids.end());
    return ids;
}

/* Signed carrier weight: + for edges from n, - for edges from m. */
i64 side_gain(const MultiGraph& g, const Factor& n, const std::vector<int>& edges) {
    i64 acc = 0;
    for (int id : edges)
        acc += std::binary_search(n.begin(), n.end(), id) ? g.edge(id).w : -g.edge(id).w;
    return acc;
}

}  // namespace

TEST_CASE("MultiGraph validation and degree bookkeeping") {
    CHECK_THROWS_AS(MultiGraph(2, {{0, 2, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(MultiGraph(2, {{-1, 0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(MultiGraph(2, {{0, 1, i64(1) << 40}}), std::invalid_argument);
    CHECK_THROWS_AS(MultiGraph(-1, {}), std::invalid_argument);

    MultiGraph g(3, {{0, 1, 5}, {1, 1, -2}, {1, 2, 7}});
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 3);
    CHECK(g.is_loop(1));
    CHECK_FALSE(g.is_loop(0));
    CHECK(g.max_degree(0) == 1);
    CHECK(g.max_degree(1) == 4);  // two incidences plus the loop counting 2
    CHECK(g.max_degree(2) == 1);

    MultiGraph unit = g.with_unit_weights();
    for (const GraphEdge& e : unit.edges()) CHECK(e.w == 1);
    CHECK(unit.edge(1).u == 1);
}

TEST_CASE("factor helpers") {
    MultiGraph g(3, {{0, 1, 5}, {1, 1, -2}, {1, 2, 7}});
    CHECK_THROWS_AS(validate_factor(g, {3}), std::invalid_argument);
    CHECK_THROWS_AS(validate_factor(g, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(validate_factor(g, {2, 0}), std::invalid_argument);

    CHECK(degree_sequence(g, {0, 1, 2}) == IntVec{1, 4, 1});
    CHECK(degree_sequence(g, {}) == IntVec{0, 0, 0});
    CHECK(factor_weight(g, {0, 1, 2}) == 10);
    CHECK(factor_weight(g, {1}) == -2);
    CHECK(factor_toggle({0, 1}, {1, 2}) == Factor{0, 2});
    CHECK(factor_toggle({}, {0, 2}) == Factor{0, 2});
}

TEST_CASE("sbo_witness worked examples") {
    MultiGraph one(2, {{0, 1, 7}});
    TwoStepDecomposition d = sbo_witness(one, {}, {0});
    REQUIRE(d.pieces.size() == 1);
    CHECK(d.pieces[0].p == IntVec{1, 1});
    CHECK(d.pieces[0].gain == 7);
    CHECK(d.pieces[0].carrier == std::vector<int>{0});
    CHECK(d.cycles.empty());

    // Two parallel edges swapped: one alternating cycle, no degree change.
    MultiGraph par(2, {{0, 1, 3}, {0, 1, 8}});
    TwoStepDecomposition dc = sbo_witness(par, {0}, {1});
    CHECK(dc.pieces.empty());
    REQUIRE(dc.cycles.size() == 1);
    CHECK(sorted_copy(dc.cycles[0]) == std::vector<int>{0, 1});

    // A self-loop is one trail with both ends at its vertex.
    MultiGraph loop(1, {{0, 0, 4}});
    TwoStepDecomposition dl = sbo_witness(loop, {0}, {});
    REQUIRE(dl.pieces.size() == 1);
    CHECK(dl.pieces[0].p == IntVec{-2});
    CHECK(dl.pieces[0].gain == -4);

    // Identical factors: nothing to decompose.
    TwoStepDecomposition de = sbo_witness(one, {0}, {0});
    CHECK(de.pieces.empty());
    CHECK(de.cycles.empty());
}

TEST_CASE("sbo_witness random structure") {
    Rng master(0x5b0717e55u);
    for (int trial = 0; trial < 400; ++trial) {
        Rng rng(Rng::derive(master.next_u64(), u64(trial)));
        int nv = int(rng.uniform(1, 5));
        MultiGraph g = random_multigraph(rng, nv, int(rng.uniform(0, 8)), -9, 9, true);
        Factor m = random_factor(rng, g);
        Factor n = random_factor(rng, g);
        IntVec dm = degree_sequence(g, m);
        IntVec dn = degree_sequence(g, n);
        TwoStepDecomposition dec = sbo_witness(g, m, n);

        // Carriers and cycles partition the symmetric difference.
        std::vector<int> all;
        IntVec psum(size_t(nv), 0);
        i64 gain_total = 0;
        for (const DecompPiece& piece : dec.pieces) {
            CHECK_FALSE(piece.carrier.empty());
            i64 l1 = 0;
            for (size_t v = 0; v < piece.p.size(); ++v) {
                l1 += piece.p[v] < 0 ? -piece.p[v] : piece.p[v];
                psum[v] += piece.p[v];
            }
            CHECK(l1 == 2);
            all.insert(all.end(), piece.carrier.begin(), piece.carrier.end());
            gain_total += piece.gain;
            CHECK(piece.gain == side_gain(g, n, piece.carrier));

            // Swapping one trail into M moves the degrees by exactly p.
            IntVec moved = degree_sequence(g, factor_toggle(m, sorted_copy(piece.carrier)));
            for (size_t v = 0; v < moved.size(); ++v) CHECK(moved[v] == dm[v] + piece.p[v]);
        }
        for (const std::vector<int>& cyc : dec.cycles) {
            CHECK_FALSE(cyc.empty());
            all.insert(all.end(), cyc.begin(), cyc.end());
            gain_total += side_gain(g, n, cyc);
            IntVec moved = degree_sequence(g, factor_toggle(m, sorted_copy(cyc)));
            CHECK(moved == dm);  // cycles are degree neutral
        }
        std::sort(all.begin(), all.end());
        CHECK(all == factor_toggle(m, n));
        for (size_t v = 0; v < psum.size(); ++v) CHECK(psum[v] == dn[v] - dm[v]);
        CHECK(gain_total == factor_weight(g, n) - factor_weight(g, m));

        // Any subset of trails applies its p sum to the degrees.
        for (int rep = 0; rep < 3; ++rep) {
            std::vector<int> chosen;
            IntVec want = dm;
            for (const DecompPiece& piece : dec.pieces)
                if (rng.chance(1, 2)) {
                    chosen.insert(chosen.end(), piece.carrier.begin(), piece.carrier.end());
                    for (size_t v = 0; v < want.size(); ++v) want[v] += piece.p[v];
                }
            CHECK(degree_sequence(g, factor_toggle(m, sorted_copy(chosen))) == want);
        }

        // Deterministic: a second call reproduces the decomposition.
        TwoStepDecomposition again = sbo_witness(g, m, n);
        REQUIRE(again.pieces.size() == dec.pieces.size());
        for (size_t k = 0; k < dec.pieces.size(); ++k) {
            CHECK(again.pieces[k].p == dec.pieces[k].p);
            CHECK(again.pieces[k].gain == dec.pieces[k].gain);
            CHECK(again.pieces[k].carrier == dec.pieces[k].carrier);
        }
        CHECK(again.cycles == dec.cycles);
    }
}

TEST_CASE("parity_to_bfactor appends padding loops") {
    MultiGraph one(2, {{0, 1, 5}});
    ParityReduction pr = parity_to_bfactor(one, {ParityInterval{0, 2}, ParityInterval{0, 2}});
    CHECK(pr.original_edges == 1);
    CHECK(pr.demand == IntVec{2, 2});
    REQUIRE(pr.graph.edge_count() == 3);
    CHECK(pr.graph.edge(1) == GraphEdge{0, 0, 0});
    CHECK(pr.graph.edge(2) == GraphEdge{1, 1, 0});

    ParityReduction tight = parity_to_bfactor(one, {ParityInterval{1, 1}, ParityInterval{1, 3}});
    CHECK(tight.demand == IntVec{1, 3});
    CHECK(tight.graph.edge_count() == 2);  // one loop for the second vertex only

    CHECK_THROWS_AS(parity_to_bfactor(one, {ParityInterval{2, 0}, ParityInterval{0, 0}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(parity_to_bfactor(one, {ParityInterval{0, 1}, ParityInterval{0, 0}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(parity_to_bfactor(one, {ParityInterval{0, 0}}), std::invalid_argument);
}

TEST_CASE("bfactor gadget worked example") {
    MultiGraph one(2, {{0, 1, 5}});
    BFactorReduction red = bfactor_to_matching(one, {1, 1});
    REQUIRE(red.parity_ok);
    CHECK(red.copy_start == std::vector<int>{0, 1, 2});
    CHECK(red.gadget_start == 2);
    CHECK(red.graph.n() == 4);

    MatchingResult mr = max_weight_perfect_matching(red.graph);
    REQUIRE(mr.feasible);
    CHECK(mr.weight == 10);  // both spokes carry the edge weight
    CHECK(decode_bfactor_matching(one, red, mr) == Factor{0});

    // Zero demand: only the inner edge is matched and the edge is skipped.
    BFactorReduction zero = bfactor_to_matching(one, {0, 0});
    REQUIRE(zero.parity_ok);
    MatchingResult mz = max_weight_perfect_matching(zero.graph);
    REQUIRE(mz.feasible);
    CHECK(mz.weight == 0);
    CHECK(decode_bfactor_matching(one, zero, mz).empty());

    BFactorReduction odd = bfactor_to_matching(one, {1, 0});
    CHECK_FALSE(odd.parity_ok);
    CHECK_THROWS_AS(decode_bfactor_matching(one, odd, mr), std::invalid_argument);

    CHECK_THROWS_AS(bfactor_to_matching(one, {-1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(bfactor_to_matching(one, {1}), std::invalid_argument);
}

TEST_CASE("bfactor gadget solves random exact-degree problems") {
    Rng master(0xbfac704u);
    int feasible_seen = 0;
    for (int trial = 0; trial < 400; ++trial) {
        Rng rng(Rng::derive(master.next_u64(), u64(trial)));
        int nv = int(rng.uniform(1, 4));
        MultiGraph g = random_multigraph(rng, nv, int(rng.uniform(0, 6)), -6, 6, true);
        IntVec demand;
        for (int v = 0; v < nv; ++v) demand.push_back(rng.uniform(0, g.max_degree(v)));

        // Reference: best subset whose degrees hit the demand exactly.
        ParityProduct exact;
        for (i64 d : demand) exact.push_back(ParityInterval{d, d});
        OracleAnswer ref = brute_oracle(g, exact);

        BFactorReduction red = bfactor_to_matching(g, demand);
        if (!red.parity_ok) {
            CHECK_FALSE(ref.feasible);
            continue;
        }
        MatchingResult mr = max_weight_perfect_matching(red.graph);
        CHECK(mr.feasible == ref.feasible);
        if (!mr.feasible) continue;
        ++feasible_seen;
        Factor f = decode_bfactor_matching(g, red, mr);
        CHECK(degree_sequence(g, f) == demand);
        CHECK(factor_weight(g, f) == ref.value);
        CHECK(mr.weight == 2 * ref.value);
    }
    CHECK(feasible_seen > 60);
}

TEST_CASE("oracle_parity_factor worked examples") {
    MultiGraph path(3, {{0, 1, 1}, {1, 2, 1}});
    OracleAnswer both = oracle_parity_factor(
        path, {ParityInterval{1, 1}, ParityInterval{2, 2}, ParityInterval{1, 1}});
    REQUIRE(both.feasible);
    CHECK(both.point == IntVec{1, 2, 1});
    CHECK(both.value == 2);
    CHECK(std::any_cast<Factor>(both.witness) == Factor{0, 1});

    MultiGraph k3(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}});
    CHECK_FALSE(oracle_parity_factor(
                    k3, {ParityInterval{1, 1}, ParityInterval{1, 1}, ParityInterval{1, 1}})
                    .feasible);  // odd degree total

    // Intervals sticking out of [0, max_degree] are clipped, not rejected.
    MultiGraph one(2, {{0, 1, 3}});
    OracleAnswer clip = oracle_parity_factor(one, {ParityInterval{-4, 0}, ParityInterval{0, 2}});
    REQUIRE(clip.feasible);
    CHECK(clip.point == IntVec{0, 0});
    CHECK(clip.value == 0);
    OracleAnswer forced = oracle_parity_factor(one, {ParityInterval{-3, 1}, ParityInterval{1, 5}});
    REQUIRE(forced.feasible);
    CHECK(forced.point == IntVec{1, 1});
    CHECK(forced.value == 3);
    CHECK_FALSE(oracle_parity_factor(one, {ParityInterval{2, 4}, ParityInterval{0, 0}}).feasible);

    CHECK_THROWS_AS(oracle_parity_factor(one, {ParityInterval{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(oracle_parity_factor(one, {ParityInterval{0, 1}, ParityInterval{0, 0}}),
                    std::invalid_argument);
}

TEST_CASE("oracle_parity_factor matches brute force") {
    Rng master(0x0c0ac1e5u);
    int feasible_seen = 0;
    for (int trial = 0; trial < 800; ++trial) {
        Rng rng(Rng::derive(master.next_u64(), u64(trial)));
        int nv = int(rng.uniform(1, 4));
        MultiGraph g = random_multigraph(rng, nv, int(rng.uniform(0, 7)), -6, 6, true);
        ParityProduct box;
        for (int v = 0; v < nv; ++v) {
            i64 lo = rng.uniform(-2, g.max_degree(v) + 2);
            box.push_back(ParityInterval{lo, lo + 2 * rng.uniform(0, 2)});
        }
        OracleAnswer fast = oracle_parity_factor(g, box);
        OracleAnswer slow = brute_oracle(g, box);
        REQUIRE(fast.feasible == slow.feasible);
        if (!fast.feasible) continue;
        ++feasible_seen;
        CHECK(fast.value == slow.value);
        CHECK(product_contains(box, fast.point));
        Factor f = std::any_cast<Factor>(fast.witness);
        CHECK(degree_sequence(g, f) == fast.point);
        CHECK(factor_weight(g, f) == fast.value);
    }
    CHECK(feasible_seen > 100);
}

TEST_CASE("GraphFactorOracle prices by objective") {
    MultiGraph par(2, {{0, 1, -5}, {0, 1, 3}});
    ParityProduct pick_one = {ParityInterval{1, 1}, ParityInterval{1, 1}};

    GraphFactorOracle weighted(par, Objective::weighted);
    OracleAnswer w = weighted.maximize(pick_one);
    REQUIRE(w.feasible);
    CHECK(w.value == 3);
    CHECK(std::any_cast<Factor>(w.witness) == Factor{1});

    GraphFactorOracle card(par, Objective::cardinality);
    OracleAnswer c = card.maximize(pick_one);
    REQUIRE(c.feasible);
    CHECK(c.value == 2);  // degree total, twice the edge count
    CHECK(c.point == IntVec{1, 1});
}

TEST_CASE("initial_factor scan and validation") {
    MultiGraph one(2, {{0, 1, 5}});
    BProfile loose = {gfs({0, 1}), gfs({0, 1})};
    CHECK(initial_factor(one, loose, std::nullopt) == Factor{});  // mask 0 is feasible

    MultiGraph c4(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {0, 3, 1}});
    BProfile ones = {gfs({1}), gfs({1}), gfs({1}), gfs({1})};
    CHECK(initial_factor(c4, ones, std::nullopt) == Factor{0, 2});  // first perfect matching

    CHECK(initial_factor(one, loose, Factor{0}) == Factor{0});  // valid provided passes through

    BProfile zero_one = {gfs({0}), gfs({0, 1})};
    try {
        initial_factor(one, zero_one, Factor{0});
        FAIL("expected invalid_argument");
    } catch (const std::invalid_argument& e) {
        std::string msg = e.what();
        CHECK(msg.find("vertex 0") != std::string::npos);
        CHECK(msg.find("degree 1") != std::string::npos);
    }

    BProfile clash = {gfs({1}), gfs({0})};
    CHECK_FALSE(initial_factor(one, clash, std::nullopt).has_value());

    MultiGraph c5(5, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {0, 4, 1}});
    BProfile any5(5, gfs({0, 1, 2}));
    CHECK_THROWS_AS(initial_factor(c5, any5, std::nullopt, 16), std::invalid_argument);
}

TEST_CASE("solve_general_factor worked examples") {
    MultiGraph k3(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}});
    BProfile even = {gfs({0, 2}), gfs({0, 2}), gfs({0, 2})};
    SolveResult card = solve_general_factor(k3, even, Objective::cardinality);
    REQUIRE(card.feasible);
    CHECK(card.value == 3);
    CHECK(card.factor == Factor{0, 1, 2});
    CHECK(card.degrees == IntVec{2, 2, 2});

    MultiGraph path(3, {{0, 1, 1}, {1, 2, 1}});
    BProfile ones = {gfs({1}), gfs({1}), gfs({1})};
    SolveResult none = solve_general_factor(path, ones, Objective::cardinality);
    CHECK_FALSE(none.feasible);

    // A negative edge is left out in weighted mode but picked up when only
    // cardinality counts.
    MultiGraph neg(2, {{0, 1, -5}});
    BProfile loose = {gfs({0, 1}), gfs({0, 1})};
    SolveResult w = solve_general_factor(neg, loose, Objective::weighted);
    REQUIRE(w.feasible);
    CHECK(w.value == 0);
    CHECK(w.factor.empty());
    SolveResult c = solve_general_factor(neg, loose, Objective::cardinality);
    REQUIRE(c.feasible);
    CHECK(c.value == 1);
    CHECK(c.factor == Factor{0});
}

TEST_CASE("solve_general_factor matches brute force") {
    Rng master(0x50f4c70u);
    int solved = 0;
    for (int trial = 0; trial < 250; ++trial) {
        Rng rng(Rng::derive(master.next_u64(), u64(trial)));
        int nv = int(rng.uniform(2, 5));
        MultiGraph g = random_multigraph(rng, nv, int(rng.uniform(1, 7)), -6, 6, true);
        BProfile b = random_degree_profile(rng, g, 4);
        bool weighted = rng.chance(1, 2);
        Objective mode = weighted ? Objective::weighted : Objective::cardinality;

        BruteFactorResult best = brute_optimal_factor(weighted ? g : g.with_unit_weights(), b);
        SolveResult got = solve_general_factor(g, b, mode);
        REQUIRE(got.feasible == best.feasible);
        if (!got.feasible) continue;
        ++solved;
        CHECK(got.value == best.value);
        CHECK(degree_sequence(g, got.factor) == got.degrees);
        CHECK(profile_contains(b, got.degrees));
        i64 fval = weighted ? factor_weight(g, got.factor) : i64(got.factor.size());
        CHECK(fval == got.value);

        // Handing the solver its own answer as the start changes nothing.
        SolveResult again = solve_general_factor(g, b, mode, got.factor);
        CHECK(again.feasible);
        CHECK(again.value == got.value);
    }
    CHECK(solved > 100);
}
