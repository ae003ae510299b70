#include "gfactor/parityset.hpp"

#include <cstdlib>
#include <stdexcept>

namespace gfactor {

GapFreeSet::GapFreeSet(std::vector<i64> elems) : elems_(std::move(elems)) {
    if (elems_.empty()) throw std::invalid_argument("GapFreeSet: empty set");
    for (size_t i = 1; i < elems_.size(); ++i) {
        i64 step = elems_[i] - elems_[i - 1];
        if (step < 1) throw std::invalid_argument("GapFreeSet: elements must be strictly increasing");
        if (step > 2) throw std::invalid_argument("GapFreeSet: gap longer than 1 between elements");
    }
    ParityInterval run{elems_[0], elems_[0]};
    for (size_t i = 1; i < elems_.size(); ++i) {
        if (elems_[i] == run.hi + 2) {
            run.hi = elems_[i];
        } else {  // step of 1 closes the run
            runs_.push_back(run);
            run = {elems_[i], elems_[i]};
        }
    }
    runs_.push_back(run);
}

int GapFreeSet::interval_index(i64 a) const {
    if (!in_box(a)) throw std::invalid_argument("interval_index: point outside [min,max]");
    // Hulls tile [min,max]: the run after any run starts at its hi + 1.
    size_t lo = 0, hi = runs_.size() - 1;
    while (lo < hi) {
        size_t mid = (lo + hi + 1) / 2;
        if (runs_[mid].lo <= a)
            lo = mid;
        else
            hi = mid - 1;
    }
    return int(lo);
}

i64 GapFreeSet::dist1(i64 a, i64 b) const {
    return std::abs(interval_index(a) - interval_index(b));
}

std::vector<ParityInterval> maximal_parity_intervals(const GapFreeSet& s) { return s.intervals(); }

bool in_box(const BProfile& b, const IntVec& x) {
    if (x.size() != b.size()) throw std::invalid_argument("in_box: dimension mismatch");
    for (size_t v = 0; v < b.size(); ++v)
        if (!b[v].in_box(x[v])) return false;
    return true;
}

bool profile_contains(const BProfile& b, const IntVec& x) {
    if (x.size() != b.size()) throw std::invalid_argument("profile_contains: dimension mismatch");
    for (size_t v = 0; v < b.size(); ++v)
        if (!b[v].contains(x[v])) return false;
    return true;
}

bool product_contains(const ParityProduct& p, const IntVec& x) {
    if (x.size() != p.size()) throw std::invalid_argument("product_contains: dimension mismatch");
    for (size_t v = 0; v < p.size(); ++v)
        if (!p[v].contains(x[v])) return false;
    return true;
}

i64 dist(const BProfile& b, const IntVec& x, const IntVec& y) {
    if (x.size() != b.size() || y.size() != b.size())
        throw std::invalid_argument("dist: dimension mismatch");
    i64 total = 0;
    for (size_t v = 0; v < b.size(); ++v) total += b[v].dist1(x[v], y[v]);
    return total;
}

i64 q(const BProfile& b, const IntVec& x) {
    if (x.size() != b.size()) throw std::invalid_argument("q: dimension mismatch");
    i64 bad = 0;
    for (size_t v = 0; v < b.size(); ++v)
        if (!b[v].contains(x[v])) ++bad;
    return bad;
}

i64 profile_size(const BProfile& b) {
    i64 total = 0;
    for (const auto& s : b) total += i64(s.size());
    return total;
}

std::vector<ParityProduct> neighborhood_products(const BProfile& b, const IntVec& x) {
    if (!profile_contains(b, x))
        throw std::invalid_argument("neighborhood_products: x is not a member of the profile");
    size_t n = b.size();
    std::vector<int> idx(n);
    std::vector<int> len(n);
    for (size_t v = 0; v < n; ++v) {
        idx[v] = b[v].interval_index(x[v]);
        len[v] = int(b[v].intervals().size());
    }

    ParityProduct centre(n);
    for (size_t v = 0; v < n; ++v) centre[v] = b[v].intervals()[size_t(idx[v])];

    std::vector<ParityProduct> out;
    out.push_back(centre);

    auto shifted = [&](size_t v, int d, ParityProduct& p) {
        int j = idx[v] + d;
        if (j < 0 || j >= len[v]) return false;
        p[v] = b[v].intervals()[size_t(j)];
        return true;
    };

    static const int single[4] = {-2, -1, 1, 2};
    for (size_t v = 0; v < n; ++v) {
        for (int d : single) {
            ParityProduct p = centre;
            if (shifted(v, d, p)) out.push_back(std::move(p));
        }
    }
    static const int pair[4][2] = {{-1, -1}, {-1, 1}, {1, -1}, {1, 1}};
    for (size_t u = 0; u < n; ++u) {
        for (size_t v = u + 1; v < n; ++v) {
            for (auto& d : pair) {
                ParityProduct p = centre;
                if (shifted(u, d[0], p) && shifted(v, d[1], p)) out.push_back(std::move(p));
            }
        }
    }
    return out;
}

}  // namespace gfactor
