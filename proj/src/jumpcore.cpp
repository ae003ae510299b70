#include "gfactor/jumpcore.hpp"

#include <limits>
#include <stdexcept>

namespace gfactor {

namespace {

ParityProduct singleton_product(const IntVec& x) {
    ParityProduct box;
    box.reserve(x.size());
    for (i64 a : x) box.push_back(ParityInterval{a, a});
    return box;
}

}  // namespace

bool membership(const JumpOracle& oracle, const IntVec& x) {
    return oracle.maximize(singleton_product(x)).feasible;
}

OracleAnswer best_in_neighborhood(const JumpOracle& oracle, const BProfile& b, const IntVec& x,
                                  i64* oracle_calls) {
    OracleAnswer best;
    for (const ParityProduct& box : neighborhood_products(b, x)) {
        OracleAnswer ans = oracle.maximize(box);
        if (oracle_calls) ++*oracle_calls;
        if (!ans.feasible) continue;
        if (!product_contains(box, ans.point))
            throw std::logic_error("best_in_neighborhood: oracle point outside the queried product");
        if (!best.feasible || ans.value > best.value ||
            (ans.value == best.value && ans.point < best.point))
            best = std::move(ans);
    }
    if (!best.feasible)
        throw std::logic_error("best_in_neighborhood: every product infeasible, x is not feasible");
    return best;
}

LocalSearchResult local_search(const JumpOracle& oracle, const BProfile& b, const IntVec& x0,
                               const std::function<i64(const IntVec&)>& value_of) {
    if (b.size() != x0.size()) throw std::invalid_argument("local_search: dimension mismatch");
    if (!profile_contains(b, x0)) throw std::invalid_argument("local_search: x0 is outside B");

    SearchTrace trace;
    OracleAnswer cur = oracle.maximize(singleton_product(x0));
    ++trace.oracle_calls;
    if (!cur.feasible) throw std::invalid_argument("local_search: x0 is not feasible");
    if (cur.point != x0) throw std::logic_error("local_search: singleton oracle moved the point");
    if (value_of && value_of(x0) != cur.value)
        throw std::logic_error("local_search: objective disagrees with the oracle at x0");

    IntVec x = x0;
    trace.value_sequence.push_back(cur.value);
    trace.point_sequence.push_back(x);

    for (;;) {
        ++trace.iterations;
        OracleAnswer best = best_in_neighborhood(oracle, b, x, &trace.oracle_calls);
        if (best.value < cur.value)
            throw std::logic_error("local_search: neighborhood best dropped below the current value");
        trace.value_sequence.push_back(best.value);
        if (best.value == cur.value) break;
        x = best.point;
        cur = std::move(best);
        trace.point_sequence.push_back(x);
        if (trace.iterations > 10'000'000)
            throw std::logic_error("local_search: iteration guard tripped, oracle is inconsistent");
    }

    trace.final_point = x;
    LocalSearchResult res;
    res.point = std::move(x);
    res.value = cur.value;
    res.trace = std::move(trace);
    res.witness = std::move(cur.witness);
    return res;
}

OracleAnswer partition_system_oracle(const ParityProduct& box, const IntVec& capacity, i64 total,
                                     const IntVec& c) {
    size_t n = box.size();
    if (capacity.size() != n || c.size() != n)
        throw std::invalid_argument("partition_system_oracle: dimension mismatch");
    if (total < 0) throw std::invalid_argument("partition_system_oracle: negative total");
    if (total > 1'000'000) throw std::invalid_argument("partition_system_oracle: total too large for the DP table");
    for (size_t v = 0; v < n; ++v) {
        if (capacity[v] < 0) throw std::invalid_argument("partition_system_oracle: negative capacity");
        if (box[v].lo > box[v].hi || ((box[v].hi - box[v].lo) & 1) != 0)
            throw std::invalid_argument("partition_system_oracle: malformed parity interval");
    }

    // Per-vertex admissible values: the interval members clipped to [0, capacity].
    std::vector<std::vector<i64>> allowed(n);
    for (size_t v = 0; v < n; ++v) {
        for (i64 a = box[v].lo; a <= box[v].hi; a += 2)
            if (a >= 0 && a <= capacity[v]) allowed[v].push_back(a);
        if (allowed[v].empty()) return {};
    }

    const i64 ninf = std::numeric_limits<i64>::min();
    // best[v][s]: max value over vertices v.. given that s units are already
    // spent on vertices before v, or ninf when total - s is not reachable.
    std::vector<std::vector<i64>> best(n + 1, std::vector<i64>(size_t(total) + 1, ninf));
    best[n][size_t(total)] = 0;
    for (size_t v = n; v-- > 0;) {
        for (size_t s = 0; s <= size_t(total); ++s) {
            i64 acc = ninf;
            for (i64 a : allowed[v]) {
                if (i64(s) + a > total) break;
                i64 tail = best[v + 1][s + size_t(a)];
                if (tail == ninf) continue;
                i64 cand = checked_i64(i128(c[v]) * a + tail, "partition_system_oracle");
                if (cand > acc) acc = cand;
            }
            best[v][s] = acc;
        }
    }
    if (best[0][0] == ninf) return {};

    OracleAnswer ans;
    ans.feasible = true;
    ans.value = best[0][0];
    ans.point.assign(n, 0);
    size_t spent = 0;
    for (size_t v = 0; v < n; ++v) {
        for (i64 a : allowed[v]) {  // ascending, so the first optimal choice is lex-smallest
            if (i64(spent) + a > total) break;
            i64 tail = best[v + 1][spent + size_t(a)];
            if (tail == ninf) continue;
            if (checked_i64(i128(c[v]) * a + tail, "partition_system_oracle") == best[v][spent]) {
                ans.point[v] = a;
                spent += size_t(a);
                break;
            }
        }
    }
    return ans;
}

}  // namespace gfactor
