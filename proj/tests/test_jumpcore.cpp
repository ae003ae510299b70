#include <algorithm>
#include <stdexcept>

#include "doctest.h"
#include "gfactor/bruteforce.hpp"
#include "gfactor/generate.hpp"
#include "gfactor/graphfactor.hpp"
#include "gfactor/jumpcore.hpp"
#include "gfactor/rng.hpp"

using namespace gfactor;

namespace {

GapFreeSet gfs(std::initializer_list<i64> xs) { return GapFreeSet(std::vector<i64>(xs)); }

/* Exhaustive argmax over a box for a partition system, as an independent check. */
OracleAnswer brute_partition(const ParityProduct& box, const IntVec& cap, i64 total, const IntVec& c) {
    size_t n = cap.size();
    OracleAnswer best;
    IntVec x(n, 0);
    for (size_t v = 0; v < n; ++v) x[v] = box[v].lo;
    while (true) {
        bool ok = true;
        i64 sum = 0;
        for (size_t v = 0; v < n && ok; ++v) {
            if (x[v] < 0 || x[v] > cap[v]) ok = false;
            sum += x[v];
        }
        if (ok && sum == total) {
            i64 val = checked_i64(dot(c, x), "partition value");
            if (!best.feasible || val > best.value ||
                (val == best.value && std::lexicographical_compare(x.begin(), x.end(),
                                                                   best.point.begin(), best.point.end()))) {
                best.feasible = true;
                best.value = val;
                best.point = x;
            }
        }
        size_t v = n;
        while (v > 0 && (x[v - 1] += 2) > box[v - 1].hi) {
            --v;
            x[v] = box[v].lo;
        }
        if (v == 0) break;
    }
    return best;
}

}  // namespace

TEST_CASE("partition_system_oracle worked examples") {
    IntVec cap = {2, 2};
    IntVec c = {3, 1};
    ParityProduct box = {ParityInterval{0, 2}, ParityInterval{0, 2}};
    OracleAnswer a = partition_system_oracle(box, cap, 2, c);
    CHECK(a.feasible);
    CHECK(a.point == IntVec{2, 0});
    CHECK(a.value == 6);

    OracleAnswer zero = partition_system_oracle(box, cap, 0, c);
    CHECK(zero.feasible);
    CHECK(zero.point == IntVec{0, 0});
    CHECK(zero.value == 0);

    CHECK_FALSE(partition_system_oracle(box, cap, 5, c).feasible);  // exceeds capacity
    CHECK_FALSE(partition_system_oracle({ParityInterval{1, 1}, ParityInterval{1, 1}}, cap, 3, c).feasible);

    CHECK_THROWS_AS(partition_system_oracle(box, {2}, 2, c), std::invalid_argument);
    CHECK_THROWS_AS(partition_system_oracle(box, cap, -1, c), std::invalid_argument);
}

TEST_CASE("partition_system_oracle matches exhaustive scan") {
    Rng master(0x0a11ce5u);
    for (int trial = 0; trial < 500; ++trial) {
        Rng rng(Rng::derive(master.next_u64(), u64(trial)));
        int n = int(rng.uniform(1, 4));
        IntVec cap, c;
        ParityProduct box;
        for (int v = 0; v < n; ++v) {
            cap.push_back(rng.uniform(0, 5));
            c.push_back(rng.uniform(-4, 4));
            i64 lo = rng.uniform(0, 5);
            box.push_back(ParityInterval{lo, lo + 2 * rng.uniform(0, 2)});
        }
        i64 total = rng.uniform(0, 8);
        OracleAnswer fast = partition_system_oracle(box, cap, total, c);
        OracleAnswer slow = brute_partition(box, cap, total, c);
        CHECK(fast.feasible == slow.feasible);
        if (fast.feasible) {
            CHECK(fast.value == slow.value);
            CHECK(fast.point == slow.point);
        }
    }
}

TEST_CASE("membership through an oracle") {
    MultiGraph one(2, {{0, 1, 5}});
    GraphFactorOracle oracle(one, Objective::weighted);
    CHECK(membership(oracle, {1, 1}));
    CHECK(membership(oracle, {0, 0}));
    CHECK_FALSE(membership(oracle, {2, 0}));
    CHECK_FALSE(membership(oracle, {1, 0}));
}

TEST_CASE("best_in_neighborhood equals a scan of the distance-2 ball") {
    Rng master(0xbe57ba11u);
    int checked = 0;
    for (int trial = 0; trial < 300; ++trial) {
        Rng rng(Rng::derive(master.next_u64(), u64(trial)));
        int n = int(rng.uniform(2, 4));
        MultiGraph g = random_multigraph(rng, n, int(rng.uniform(0, 6)), -5, 5, true);
        BProfile b = random_degree_profile(rng, g, 4);
        GraphFactorOracle oracle(g, Objective::weighted);

        // Pick a feasible start if the instance has one.
        BruteFactorResult seed = brute_optimal_factor(g, b);
        if (!seed.feasible) continue;
        ++checked;
        i64 calls = 0;
        OracleAnswer got = best_in_neighborhood(oracle, b, seed.degrees, &calls);
        CHECK(got.feasible);
        CHECK(calls >= 1);

        i64 best = got.value;
        bool point_seen = false;
        for (const IntVec& y : brute_ball(b, seed.degrees, 2)) {
            std::optional<i64> val = brute_point_value(g, y);
            if (!val) continue;
            CHECK(*val <= best);  // nothing within distance 2 beats the answer
            if (y == got.point) {
                point_seen = true;
                CHECK(*val == best);
            }
        }
        CHECK(point_seen);
    }
    CHECK(checked > 100);
}

TEST_CASE("best_in_neighborhood with nothing feasible throws") {
    MultiGraph k3(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}});
    BProfile odd = {gfs({1}), gfs({1}), gfs({1})};
    GraphFactorOracle oracle(k3, Objective::weighted);
    CHECK_THROWS_AS(best_in_neighborhood(oracle, odd, {1, 1, 1}), std::logic_error);
}

TEST_CASE("local_search input validation") {
    MultiGraph one(2, {{0, 1, 5}});
    BProfile b = {gfs({0, 1}), gfs({0, 1})};
    GraphFactorOracle oracle(one, Objective::weighted);
    CHECK_THROWS_AS(local_search(oracle, b, {3, 3}), std::invalid_argument);  // outside B
    CHECK_THROWS_AS(local_search(oracle, b, {1, 0}), std::invalid_argument);  // in B, not in J
}

TEST_CASE("local_search on partition systems reaches the optimum") {
    Rng master(0x70a57e2u);
    for (int trial = 0; trial < 300; ++trial) {
        Rng rng(Rng::derive(master.next_u64(), u64(trial)));
        int n = int(rng.uniform(1, 4));
        IntVec cap, c;
        BProfile b;
        for (int v = 0; v < n; ++v) {
            cap.push_back(rng.uniform(0, 5));
            c.push_back(rng.uniform(-5, 5));
            b.push_back(random_gapfree_set(rng, 0, 4, 4));
        }
        i64 total = rng.uniform(0, 6);
        PartitionSystemOracle oracle(cap, total, c);

        // Scan the box for feasible points; remember the best and one start.
        std::optional<IntVec> start;
        std::optional<i64> opt;
        IntVec probe(size_t(n), 0);
        std::vector<size_t> idx(size_t(n), 0);
        while (true) {
            for (int v = 0; v < n; ++v) probe[size_t(v)] = b[size_t(v)].elems()[idx[size_t(v)]];
            i64 sum = 0;
            bool ok = true;
            for (int v = 0; v < n; ++v) {
                if (probe[size_t(v)] > cap[size_t(v)]) ok = false;
                sum += probe[size_t(v)];
            }
            if (ok && sum == total) {
                i64 val = checked_i64(dot(c, probe), "probe value");
                if (!start) start = probe;
                if (!opt || val > *opt) opt = val;
            }
            size_t v = size_t(n);
            while (v > 0 && ++idx[v - 1] == b[v - 1].size()) idx[--v] = 0;
            if (v == 0) break;
        }
        if (!start) continue;

        LocalSearchResult res = local_search(oracle, b, *start);
        CHECK(res.value == *opt);
        CHECK(res.trace.final_point == res.point);
        CHECK(res.trace.value_sequence.size() == size_t(res.trace.iterations) + 1);
        for (size_t i = 1; i < res.trace.value_sequence.size(); ++i)
            CHECK(res.trace.value_sequence[i - 1] <= res.trace.value_sequence[i]);
    }
}

TEST_CASE("local_search stops immediately at an optimum") {
    MultiGraph one(2, {{0, 1, 5}});
    BProfile b = {gfs({0, 1}), gfs({0, 1})};
    GraphFactorOracle oracle(one, Objective::weighted);
    LocalSearchResult res = local_search(oracle, b, {1, 1});
    CHECK(res.value == 5);
    CHECK(res.point == IntVec{1, 1});
    CHECK(res.trace.iterations == 1);  // one confirming pass, no movement
    CHECK(res.trace.point_sequence == std::vector<IntVec>{{1, 1}});
}

TEST_CASE("local_search on a triangle maximizes degree sum") {
    MultiGraph k3(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}});
    BProfile b = {gfs({0, 2}), gfs({0, 2}), gfs({0, 2})};
    GraphFactorOracle card(k3, Objective::cardinality);
    LocalSearchResult res = local_search(card, b, {0, 0, 0});
    CHECK(res.value == 6);  // all three edges, degree sum 6
    CHECK(res.point == IntVec{2, 2, 2});
}

TEST_CASE("local_search agrees with brute force on random graphs") {
    Rng master(0x10ca15e4u);
    int solved = 0;
    for (int trial = 0; trial < 250; ++trial) {
        Rng rng(Rng::derive(master.next_u64(), u64(trial)));
        int n = int(rng.uniform(2, 5));
        MultiGraph g = random_multigraph(rng, n, int(rng.uniform(1, 7)), -6, 6, true);
        BProfile b = random_degree_profile(rng, g, 4);
        bool weighted = rng.chance(1, 2);
        MultiGraph driver = weighted ? g : g.with_unit_weights();
        BruteFactorResult best = brute_optimal_factor(driver, b);
        if (!best.feasible) continue;

        // Start from the lexicographically first feasible factor.
        std::optional<Factor> init = initial_factor(g, b, std::nullopt);
        REQUIRE(init.has_value());
        ++solved;
        GraphFactorOracle oracle(g, weighted ? Objective::weighted : Objective::cardinality);
        LocalSearchResult res = local_search(oracle, b, degree_sequence(g, *init));
        i64 target = weighted ? best.value : 2 * best.value;
        CHECK(res.value == target);
    }
    CHECK(solved > 100);
}
