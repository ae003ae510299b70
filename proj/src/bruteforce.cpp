#include "gfactor/bruteforce.hpp"

#include <stdexcept>
#include <string>

namespace gfactor {

namespace {

u64 subset_count_or_throw(const MultiGraph& g, const EnumerationBudget& budget, const char* what) {
    int m = g.edge_count();
    if (m >= 63 || (u64(1) << m) > budget.max_subsets)
        throw std::invalid_argument(std::string(what) + ": 2^" + std::to_string(m) +
                                    " edge subsets exceed the enumeration budget");
    return u64(1) << m;
}

IntVec mask_degrees(const MultiGraph& g, u64 mask) {
    IntVec d(size_t(g.vertex_count()), 0);
    for (int id = 0; id < g.edge_count(); ++id)
        if (mask >> id & 1) {
            ++d[size_t(g.edge(id).u)];
            ++d[size_t(g.edge(id).v)];
        }
    return d;
}

i64 mask_weight(const MultiGraph& g, u64 mask) {
    i128 acc = 0;
    for (int id = 0; id < g.edge_count(); ++id)
        if (mask >> id & 1) acc += g.edge(id).w;
    return checked_i64(acc, "mask_weight");
}

Factor mask_factor(const MultiGraph& g, u64 mask) {
    Factor f;
    for (int id = 0; id < g.edge_count(); ++id)
        if (mask >> id & 1) f.push_back(id);
    return f;
}

}  // namespace

BruteFactorResult brute_optimal_factor(const MultiGraph& g, const BProfile& b,
                                       const EnumerationBudget& budget) {
    if (int(b.size()) != g.vertex_count())
        throw std::invalid_argument("brute_optimal_factor: dimension mismatch");
    u64 count = subset_count_or_throw(g, budget, "brute_optimal_factor");

    BruteFactorResult best;
    for (u64 mask = 0; mask < count; ++mask) {
        IntVec d = mask_degrees(g, mask);
        bool ok = true;
        for (size_t v = 0; ok && v < b.size(); ++v) ok = b[v].contains(d[v]);
        if (!ok) continue;
        i64 w = mask_weight(g, mask);
        if (!best.feasible || w > best.value) {
            best.feasible = true;
            best.value = w;
            best.factor = mask_factor(g, mask);
            best.degrees = std::move(d);
        }
    }
    return best;
}

OracleAnswer brute_oracle(const MultiGraph& g, const ParityProduct& box,
                          const EnumerationBudget& budget) {
    if (int(box.size()) != g.vertex_count())
        throw std::invalid_argument("brute_oracle: dimension mismatch");
    u64 count = subset_count_or_throw(g, budget, "brute_oracle");

    OracleAnswer best;
    for (u64 mask = 0; mask < count; ++mask) {
        IntVec d = mask_degrees(g, mask);
        if (!product_contains(box, d)) continue;
        i64 w = mask_weight(g, mask);
        if (!best.feasible || w > best.value) {
            best.feasible = true;
            best.value = w;
            best.point = std::move(d);
            best.witness = mask_factor(g, mask);
        }
    }
    return best;
}

std::vector<IntVec> brute_ball(const BProfile& b, const IntVec& x, i64 radius,
                               const EnumerationBudget& budget) {
    if (b.size() != x.size()) throw std::invalid_argument("brute_ball: dimension mismatch");
    if (!in_box(b, x)) throw std::invalid_argument("brute_ball: x outside the bounding box");
    i128 points = 1;
    for (const GapFreeSet& s : b) {
        points *= i128(s.size());
        if (points > i128(budget.max_points))
            throw std::invalid_argument("brute_ball: box exceeds the points budget");
    }

    std::vector<IntVec> out;
    std::vector<size_t> idx(b.size(), 0);
    IntVec y(x.size());
    for (;;) {
        for (size_t v = 0; v < b.size(); ++v) y[v] = b[v].elems()[idx[v]];
        if (dist(b, x, y) <= radius) out.push_back(y);
        size_t v = b.size();
        while (v > 0 && ++idx[v - 1] == b[v - 1].size()) idx[--v] = 0;
        if (v == 0) break;
    }
    return out;
}

std::optional<i64> brute_point_value(const MultiGraph& g, const IntVec& x,
                                     const EnumerationBudget& budget) {
    ParityProduct at;
    at.reserve(x.size());
    for (i64 a : x) at.push_back(ParityInterval{a, a});
    OracleAnswer ans = brute_oracle(g, at, budget);
    if (!ans.feasible) return std::nullopt;
    return ans.value;
}

bool brute_membership(const MultiGraph& g, const IntVec& x, const EnumerationBudget& budget) {
    return brute_point_value(g, x, budget).has_value();
}

}  // namespace gfactor
