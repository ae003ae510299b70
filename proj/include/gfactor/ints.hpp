#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gfactor {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;

/* Integer point indexed by vertex id. */
using IntVec = std::vector<i64>;

inline i64 checked_i64(i128 v, const char* what) {
    if (v > i128(INT64_MAX) || v < i128(INT64_MIN))
        throw std::overflow_error(std::string(what) + ": value exceeds 64-bit range");
    return i64(v);
}

/* c^T x with a 128-bit accumulator. */
inline i64 dot(const IntVec& c, const IntVec& x) {
    if (c.size() != x.size()) throw std::invalid_argument("dot: dimension mismatch");
    i128 acc = 0;
    for (size_t i = 0; i < c.size(); ++i) acc += i128(c[i]) * i128(x[i]);
    return checked_i64(acc, "dot");
}

inline i64 l1_distance(const IntVec& x, const IntVec& y) {
    if (x.size() != y.size()) throw std::invalid_argument("l1_distance: dimension mismatch");
    i128 acc = 0;
    for (size_t i = 0; i < x.size(); ++i) acc += x[i] >= y[i] ? i128(x[i]) - y[i] : i128(y[i]) - x[i];
    return checked_i64(acc, "l1_distance");
}

}  // namespace gfactor
