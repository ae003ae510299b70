#pragma once

#include <cstdint>
#include <vector>

#include "gfactor/ints.hpp"

namespace gfactor {

/*
 * Deterministic RNG used everywhere randomness is needed.  splitmix64 core so
 * that streams are reproducible byte-for-byte across platforms and standard
 * libraries; std::uniform_int_distribution is deliberately avoided.
 *
 * One 64-bit master seed per run; per-trial streams are derived with
 * derive(master, trial_index) so trials are independent of evaluation order.
 */
class Rng {
  public:
    explicit Rng(u64 seed) : state_(seed) {}

    u64 next_u64() {
        // splitmix64 (Steele, Lea, Flood 2014 public-domain reference)
        u64 z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /* Uniform in [lo, hi], inclusive.  Rejection sampling keeps it unbiased. */
    i64 uniform(i64 lo, i64 hi) {
        if (lo > hi) throw std::invalid_argument("Rng::uniform: empty range");
        u64 span = u64(hi) - u64(lo) + 1;
        if (span == 0) return i64(next_u64());  // full 64-bit range
        u64 limit = UINT64_MAX - UINT64_MAX % span;
        u64 r;
        do {
            r = next_u64();
        } while (r >= limit);
        return lo + i64(r % span);
    }

    bool chance(u64 numer, u64 denom) { return u64(uniform(0, i64(denom) - 1)) < numer; }

    template <class T>
    const T& pick(const std::vector<T>& xs) {
        return xs[size_t(uniform(0, i64(xs.size()) - 1))];
    }

    template <class T>
    void shuffle(std::vector<T>& xs) {
        for (size_t i = xs.size(); i > 1; --i) std::swap(xs[i - 1], xs[size_t(uniform(0, i64(i) - 1))]);
    }

    static u64 derive(u64 master, u64 index) {
        Rng r(master ^ (0xd1342543de82ef95ULL * (index + 1)));
        return r.next_u64();
    }

  private:
    u64 state_;
};

}  // namespace gfactor
