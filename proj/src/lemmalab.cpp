#include "gfactor/lemmalab.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include "gfactor/generate.hpp"
#include "gfactor/jumpcore.hpp"

namespace gfactor {

namespace {

std::string vec_str(const IntVec& v) {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ')';
    return os.str();
}

std::string instance_str(const DecompositionInstance& inst) {
    std::ostringstream os;
    os << "B=[";
    for (size_t v = 0; v < inst.b.size(); ++v) {
        os << (v ? " " : "") << '{';
        const std::vector<i64>& es = inst.b[v].elems();
        for (size_t i = 0; i < es.size(); ++i) os << (i ? "," : "") << es[i];
        os << '}';
    }
    os << "] x=" << vec_str(inst.x) << " y=" << vec_str(inst.y) << " p=[";
    for (size_t i = 0; i < inst.p.size(); ++i) os << (i ? " " : "") << vec_str(inst.p[i]);
    os << "] w=" << vec_str(inst.w);
    return os.str();
}

IntVec add_subset(const IntVec& x, const std::vector<IntVec>& p, u64 mask) {
    IntVec z = x;
    for (size_t i = 0; i < p.size(); ++i)
        if (mask >> i & 1)
            for (size_t v = 0; v < z.size(); ++v) z[v] += p[i][v];
    return z;
}

i64 subset_weight(const IntVec& w, u64 mask) {
    i64 s = 0;
    for (size_t i = 0; i < w.size(); ++i)
        if (mask >> i & 1) s += w[i];
    return s;
}

std::vector<int> mask_indices(u64 mask, size_t l) {
    std::vector<int> out;
    for (size_t i = 0; i < l; ++i)
        if (mask >> i & 1) out.push_back(int(i));
    return out;
}

/* Map every subgraph degree sequence to its best weight (the point prices). */
std::map<IntVec, i64> point_values(const MultiGraph& g, const EnumerationBudget& budget) {
    int m = g.edge_count();
    if (m >= 63 || (u64(1) << m) > budget.max_subsets)
        throw std::invalid_argument("point_values: 2^" + std::to_string(m) +
                                    " edge subsets exceed the enumeration budget");
    std::map<IntVec, i64> best;
    for (u64 mask = 0; mask < (u64(1) << m); ++mask) {
        IntVec d(size_t(g.vertex_count()), 0);
        i64 w = 0;
        for (int id = 0; id < m; ++id)
            if (mask >> id & 1) {
                ++d[size_t(g.edge(id).u)];
                ++d[size_t(g.edge(id).v)];
                w += g.edge(id).w;
            }
        auto [it, fresh] = best.emplace(d, w);
        if (!fresh && w > it->second) it->second = w;
    }
    return best;
}

}  // namespace

void validate_decomposition(const DecompositionInstance& inst) {
    size_t n = inst.b.size();
    if (inst.x.size() != n || inst.y.size() != n)
        throw std::invalid_argument("decomposition: x/y dimension mismatch");
    if (inst.w.size() != inst.p.size())
        throw std::invalid_argument("decomposition: one weight per piece required");
    if (!profile_contains(inst.b, inst.x)) throw std::invalid_argument("decomposition: x is not in B");
    if (!profile_contains(inst.b, inst.y)) throw std::invalid_argument("decomposition: y is not in B");

    IntVec sum(n, 0);
    i64 norms = 0;
    for (const IntVec& pi : inst.p) {
        if (pi.size() != n) throw std::invalid_argument("decomposition: piece dimension mismatch");
        i64 l1 = 0;
        for (size_t v = 0; v < n; ++v) {
            l1 += pi[v] < 0 ? -pi[v] : pi[v];
            sum[v] += pi[v];
        }
        if (l1 != 2) throw std::invalid_argument("decomposition: every piece needs one-norm 2");
        norms += 2;
    }
    for (size_t v = 0; v < n; ++v)
        if (sum[v] != inst.y[v] - inst.x[v])
            throw std::invalid_argument("decomposition: pieces do not sum to y - x");
    if (norms != l1_distance(inst.x, inst.y))
        throw std::invalid_argument("decomposition: piece count must be ||y-x||_1 / 2");
}

bool check_parity_lemma(const BProfile& b, const IntVec& x, const IntVec& y,
                        const DistFn& dist_fn) {
    i64 d = dist_fn ? dist_fn(b, x, y) : dist(b, x, y);
    return ((d + l1_distance(x, y) + q(b, x) + q(b, y)) & 1) == 0;
}

std::optional<StepSolution> find_lemma2_solution(const DecompositionInstance& inst) {
    validate_decomposition(inst);
    if (dist(inst.b, inst.x, inst.y) != 4)
        throw std::invalid_argument("find_lemma2_solution: instance distance must be exactly 4");
    size_t l = inst.p.size();
    if (l >= 30) throw std::invalid_argument("find_lemma2_solution: too many pieces to enumerate");

    i64 floor_gain = std::min<i64>(0, subset_weight(inst.w, (u64(1) << l) - 1));
    for (u64 mask = 0; mask < (u64(1) << l); ++mask) {
        if (subset_weight(inst.w, mask) < floor_gain) continue;
        IntVec z = add_subset(inst.x, inst.p, mask);
        if (!profile_contains(inst.b, z)) continue;
        if (dist(inst.b, inst.x, z) != 2) continue;
        return StepSolution{mask_indices(mask, l), std::move(z), subset_weight(inst.w, mask)};
    }
    return std::nullopt;
}

bool check_remark1_complement(const DecompositionInstance& inst, const StepSolution& sol) {
    /* Swapping x and y negates the pieces and weights; the complement of the
       solution's index set must then solve the swapped instance, reusing the
       very same half-way point z. */
    u64 mask = 0;
    for (int i : sol.indices) mask |= u64(1) << i;
    u64 comp = ((u64(1) << inst.p.size()) - 1) & ~mask;

    if (add_subset(inst.x, inst.p, mask) != sol.z) return false;
    if (!profile_contains(inst.b, sol.z)) return false;
    if (dist(inst.b, inst.y, sol.z) != 2) return false;
    i64 total = subset_weight(inst.w, (u64(1) << inst.p.size()) - 1);
    return -subset_weight(inst.w, comp) >= std::min<i64>(0, -total);
}

PhiState phi(const BProfile& b, const IntVec& x, const IntVec& z) {
    return PhiState{dist(b, x, z), q(b, z)};
}

std::vector<std::vector<int>> build_chain(const BProfile& b, const IntVec& x, const IntVec& y,
                                          const std::vector<IntVec>& p) {
    DecompositionInstance inst{b, x, y, p, IntVec(p.size(), 0)};
    validate_decomposition(inst);
    i64 total = dist(b, x, y);
    if ((total & 1) != 0) throw std::logic_error("build_chain: odd distance between box members");
    if (total == 0 && !p.empty())
        throw std::invalid_argument("build_chain: distance 0 admits no nonempty chain");

    /* Normalize axes so every piece entry is nonnegative (x <= y
       coordinatewise).  The flip is an involution on points, so index sets
       computed in flipped space are valid verbatim in the original. */
    size_t n = b.size();
    std::vector<bool> flip(n);
    BProfile nb;
    nb.reserve(n);
    IntVec nx(n), ny(n);
    for (size_t v = 0; v < n; ++v) {
        flip[v] = y[v] < x[v];
        if (flip[v]) {
            std::vector<i64> es = b[v].elems();
            for (i64& e : es) e = -e;
            std::reverse(es.begin(), es.end());
            nb.emplace_back(std::move(es));
            nx[v] = -x[v];
            ny[v] = -y[v];
        } else {
            nb.push_back(b[v]);
            nx[v] = x[v];
            ny[v] = y[v];
        }
    }
    std::vector<IntVec> np = p;
    for (IntVec& pi : np)
        for (size_t v = 0; v < n; ++v)
            if (flip[v]) pi[v] = -pi[v];

    std::vector<std::vector<int>> chain;
    chain.push_back({});
    if (total == 0) return chain;

    std::vector<bool> used(np.size(), false);
    std::vector<int> committed;
    IntVec cur = nx;

    auto add_piece = [&](IntVec& z, size_t i) {
        for (size_t v = 0; v < n; ++v) z[v] += np[i][v];
        used[i] = true;
        committed.push_back(int(i));
    };

    while (dist(nb, cur, ny) > 2) {
        /* Grow one level from cur until its phi hits (2,0). */
        IntVec z = cur;
        for (;;) {
            PhiState st = phi(nb, cur, z);
            if (st == PhiState{2, 0}) break;
            size_t next = np.size();
            if (st == PhiState{0, 0}) {
                for (size_t i = 0; i < np.size() && next == np.size(); ++i)
                    if (!used[i]) next = i;
            } else if (st == PhiState{0, 2} || st == PhiState{1, 1}) {
                size_t a = n;
                for (size_t v = 0; v < n && a == n; ++v)
                    if (!nb[v].contains(z[v])) a = v;
                for (size_t i = 0; i < np.size() && next == np.size(); ++i)
                    if (!used[i] && np[i][a] >= 1) next = i;
            } else {
                throw std::logic_error("build_chain: phi left the invariant set at " +
                                       vec_str(z));
            }
            if (next == np.size())
                throw std::logic_error("build_chain: no admissible piece at " + vec_str(z));
            add_piece(z, next);
        }
        cur = z;
        std::vector<int> level = committed;
        std::sort(level.begin(), level.end());
        chain.push_back(std::move(level));
    }

    /* Residual distance 2: everything still unused forms the last step. */
    for (size_t i = 0; i < np.size(); ++i)
        if (!used[i]) committed.push_back(int(i));
    std::sort(committed.begin(), committed.end());
    chain.push_back(std::move(committed));
    return chain;
}

bool check_corollary1(const MultiGraph& g, const BProfile& b, Objective mode,
                      const EnumerationBudget& budget) {
    if (int(b.size()) != g.vertex_count())
        throw std::invalid_argument("check_corollary1: dimension mismatch");
    std::map<IntVec, i64> prices = point_values(mode == Objective::cardinality
                                                    ? g.with_unit_weights()
                                                    : g,
                                                budget);
    /* Keep only points in B; price cardinality points by their degree sum. */
    std::vector<std::pair<IntVec, i64>> pts;
    for (const auto& [d, w] : prices) {
        if (!profile_contains(b, d)) continue;
        i64 val = w;
        if (mode == Objective::cardinality) {
            val = 0;
            for (i64 a : d) val += a;
        }
        pts.push_back({d, val});
    }
    if (pts.empty()) return true;

    i64 global = pts.front().second;
    for (const auto& [d, v] : pts) global = std::max(global, v);

    for (const auto& [d, v] : pts) {
        if (v == global) continue;
        bool local_opt = true;
        for (const auto& [d2, v2] : pts)
            if (v2 > v && dist(b, d, d2) <= 2) {
                local_opt = false;
                break;
            }
        if (local_opt) return false;  // locally best yet globally beaten
    }
    return true;
}

bool check_mjump(const MultiGraph& g, int samples, Rng& rng, const EnumerationBudget& budget) {
    std::map<IntVec, i64> f = point_values(g, budget);
    std::vector<const IntVec*> pts;
    for (const auto& [d, w] : f) pts.push_back(&d);

    for (int s = 0; s < samples; ++s) {
        const IntVec& x = *pts[size_t(rng.uniform(0, i64(pts.size()) - 1))];
        const IntVec& y = *pts[size_t(rng.uniform(0, i64(pts.size()) - 1))];
        i64 base = f.at(x) + f.at(y);

        for (size_t v = 0; v < x.size(); ++v) {
            if (x[v] == y[v]) continue;
            i64 sv = y[v] > x[v] ? 1 : -1;
            IntVec xs = x;
            xs[v] += sv;  // one unit step from x toward y

            bool found = false;
            for (size_t u = 0; u < x.size() && !found; ++u) {
                if (xs[u] == y[u]) continue;
                i64 tu = y[u] > xs[u] ? 1 : -1;
                IntVec xst = xs;
                xst[u] += tu;
                IntVec yst = y;
                yst[v] -= sv;
                yst[u] -= tu;
                auto fa = f.find(xst);
                auto fb = f.find(yst);
                if (fa != f.end() && fb != f.end() && fa->second + fb->second >= base)
                    found = true;
            }
            if (!found) return false;
        }
    }
    return true;
}

DecompositionInstance random_decomposition_instance(Rng& rng, i64 target_dist,
                                                    const DecompGenOptions& opt) {
    if (target_dist < 0 || (target_dist & 1) != 0)
        throw std::invalid_argument("random_decomposition_instance: target distance must be even");

    for (int attempt = 0; attempt < 10'000; ++attempt) {
        int n = int(rng.uniform(opt.min_vertices, opt.max_vertices));
        BProfile b = random_profile(rng, n, opt.lo_min, opt.lo_max, opt.max_set_size);
        i64 capacity = 0;
        for (const GapFreeSet& s : b) capacity += i64(s.intervals().size()) - 1;
        if (capacity < target_dist) continue;

        IntVec x(size_t(n), 0);
        for (int v = 0; v < n; ++v)
            x[size_t(v)] = b[size_t(v)].elems()[size_t(rng.uniform(0, i64(b[size_t(v)].size()) - 1))];

        /* Walk y across run boundaries, one boundary at a time, in a fixed
           per-coordinate direction, until the target distance is reached. */
        IntVec y = x;
        std::vector<int> dir(size_t(n), 0);
        i64 reached = 0;
        bool stuck = false;
        while (reached < target_dist && !stuck) {
            std::vector<int> cands;
            for (int v = 0; v < n; ++v) {
                const GapFreeSet& s = b[size_t(v)];
                int idx = s.interval_index(y[size_t(v)]);
                int d = dir[size_t(v)];
                if ((d >= 0 && idx + 1 < int(s.intervals().size())) || (d <= 0 && idx > 0))
                    cands.push_back(v);
            }
            if (cands.empty()) {
                stuck = true;
                break;
            }
            int v = cands[size_t(rng.uniform(0, i64(cands.size()) - 1))];
            const GapFreeSet& s = b[size_t(v)];
            int idx = s.interval_index(y[size_t(v)]);
            int d = dir[size_t(v)];
            if (d == 0) {
                bool up_ok = idx + 1 < int(s.intervals().size());
                bool dn_ok = idx > 0;
                d = up_ok && (!dn_ok || rng.chance(1, 2)) ? 1 : -1;
                dir[size_t(v)] = d;
            }
            /* Hop to the nearest element of the adjacent run. */
            y[size_t(v)] = d > 0 ? s.intervals()[size_t(idx) + 1].lo : s.intervals()[size_t(idx) - 1].hi;
            ++reached;
        }
        if (stuck) continue;

        /* Occasional within-run wiggles vary l without changing the distance. */
        for (int extra = int(rng.uniform(0, 2)); extra > 0; --extra) {
            int v = int(rng.uniform(0, n - 1));
            int d = dir[size_t(v)] != 0 ? dir[size_t(v)] : (rng.chance(1, 2) ? 1 : -1);
            i64 cand = y[size_t(v)] + 2 * d;
            const GapFreeSet& s = b[size_t(v)];
            if (s.contains(cand) && s.interval_index(cand) == s.interval_index(y[size_t(v)])) {
                y[size_t(v)] = cand;
                dir[size_t(v)] = d;
            }
        }

        i64 l1 = l1_distance(x, y);
        if (l1 / 2 > opt.max_pieces) continue;
        if (dist(b, x, y) != target_dist) continue;  // wiggle may not cross runs; recheck anyway

        /* Pair up the unit moves uniformly at random. */
        std::vector<int> moves;
        for (int v = 0; v < n; ++v)
            for (i64 k = 0; k < (y[size_t(v)] > x[size_t(v)] ? y[size_t(v)] - x[size_t(v)]
                                                             : x[size_t(v)] - y[size_t(v)]);
                 ++k)
                moves.push_back(v);
        rng.shuffle(moves);

        DecompositionInstance inst;
        inst.b = std::move(b);
        inst.x = std::move(x);
        inst.y = std::move(y);
        for (size_t i = 0; i + 1 < moves.size(); i += 2) {
            IntVec piece(size_t(n), 0);
            piece[size_t(moves[i])] += inst.y[size_t(moves[i])] > inst.x[size_t(moves[i])] ? 1 : -1;
            piece[size_t(moves[i + 1])] +=
                inst.y[size_t(moves[i + 1])] > inst.x[size_t(moves[i + 1])] ? 1 : -1;
            inst.p.push_back(std::move(piece));
            inst.w.push_back(rng.uniform(opt.wlo, opt.whi));
        }
        validate_decomposition(inst);
        return inst;
    }
    throw std::logic_error("random_decomposition_instance: generator failed to converge");
}

SuiteReport run_parity_suite(u64 seed, i64 trials, const DistFn& dist_fn) {
    SuiteReport rep{"parity", trials, 0, seed, ""};
    for (i64 t = 0; t < trials; ++t) {
        Rng rng(Rng::derive(seed, u64(t)));
        int n = int(rng.uniform(1, 4));
        BProfile b = random_profile(rng, n, -6, 6, 7);
        IntVec x(size_t(n), 0), y(size_t(n), 0);
        for (int v = 0; v < n; ++v) {
            x[size_t(v)] = rng.uniform(b[size_t(v)].min(), b[size_t(v)].max());
            y[size_t(v)] = rng.uniform(b[size_t(v)].min(), b[size_t(v)].max());
        }
        if (check_parity_lemma(b, x, y, dist_fn)) continue;
        ++rep.failures;
        if (rep.first_failure.empty()) {
            DecompositionInstance shell{b, x, y, {}, {}};
            rep.first_failure = "trial " + std::to_string(t) + ": odd parity sum, " +
                                instance_str(shell);
        }
    }
    return rep;
}

namespace {

SuiteReport run_local_improvement_suite(u64 seed, i64 trials) {
    SuiteReport rep{"local-improvement", trials, 0, seed, ""};
    for (i64 t = 0; t < trials; ++t) {
        Rng rng(Rng::derive(seed, u64(t)));
        DecompositionInstance inst = random_decomposition_instance(rng, 4);
        std::string why;
        std::optional<StepSolution> sol = find_lemma2_solution(inst);
        if (!sol) {
            why = "no halfway subset";
        } else {
            IntVec z = inst.x;
            for (int i : sol->indices)
                for (size_t v = 0; v < z.size(); ++v) z[v] += inst.p[size_t(i)][v];
            i64 total = 0;
            for (i64 wi : inst.w) total += wi;
            if (z != sol->z)
                why = "reported z mismatch";
            else if (!profile_contains(inst.b, z))
                why = "z outside B";
            else if (dist(inst.b, inst.x, z) != 2)
                why = "z not at distance 2";
            else if (sol->gain < std::min<i64>(0, total))
                why = "gain below floor";
            else if (!check_remark1_complement(inst, *sol))
                why = "complement fails the swapped instance";
        }
        if (why.empty()) continue;
        ++rep.failures;
        if (rep.first_failure.empty())
            rep.first_failure = "trial " + std::to_string(t) + ": " + why + ", " +
                                instance_str(inst);
    }
    return rep;
}

SuiteReport run_chain_suite(u64 seed, i64 trials) {
    SuiteReport rep{"chain", trials, 0, seed, ""};
    for (i64 t = 0; t < trials; ++t) {
        Rng rng(Rng::derive(seed, u64(t)));
        i64 k = 1 + t % 4;
        DecompositionInstance inst = random_decomposition_instance(rng, 2 * k);
        std::string why;
        try {
            std::vector<std::vector<int>> chain = build_chain(inst.b, inst.x, inst.y, inst.p);
            if (i64(chain.size()) != k + 1) why = "chain length is not dist/2";
            IntVec prev = inst.x;
            for (size_t j = 1; j < chain.size() && why.empty(); ++j) {
                if (chain[j].size() <= chain[j - 1].size() ||
                    !std::includes(chain[j].begin(), chain[j].end(), chain[j - 1].begin(),
                                   chain[j - 1].end()))
                    why = "sets are not strictly nested";
                IntVec z = inst.x;
                for (int i : chain[j])
                    for (size_t v = 0; v < z.size(); ++v) z[v] += inst.p[size_t(i)][v];
                if (why.empty() && !profile_contains(inst.b, z)) why = "partial point outside B";
                if (why.empty() && dist(inst.b, prev, z) != 2) why = "step distance is not 2";
                prev = z;
            }
            if (why.empty() && (chain.empty() || !chain.front().empty()))
                why = "chain must start empty";
            if (why.empty() && chain.back().size() != inst.p.size())
                why = "chain must end with all pieces";
            if (why.empty() && prev != inst.y) why = "chain does not reach y";
        } catch (const std::exception& e) {
            why = std::string("exception: ") + e.what();
        }
        if (why.empty()) continue;
        ++rep.failures;
        if (rep.first_failure.empty())
            rep.first_failure = "trial " + std::to_string(t) + ": " + why + ", " +
                                instance_str(inst);
    }
    return rep;
}

SuiteReport run_local_global_suite(u64 seed, i64 trials) {
    SuiteReport rep{"local-global", trials, 0, seed, ""};
    for (i64 t = 0; t < trials; ++t) {
        Rng rng(Rng::derive(seed, u64(t)));
        int n = int(rng.uniform(1, 5));
        MultiGraph g = random_multigraph(rng, n, int(rng.uniform(0, 7)), -9, 9, true);
        BProfile b = random_degree_profile(rng, g, 4);
        Objective mode = rng.chance(1, 2) ? Objective::weighted : Objective::cardinality;
        if (check_corollary1(g, b, mode)) continue;
        ++rep.failures;
        if (rep.first_failure.empty())
            rep.first_failure = "trial " + std::to_string(t) +
                                ": a distance-2 local optimum misses the global optimum";
    }
    return rep;
}

SuiteReport run_update_ratio_suite(u64 seed, i64 trials) {
    SuiteReport rep{"update-ratio", trials, 0, seed, ""};
    for (i64 t = 0; t < trials; ++t) {
        Rng rng(Rng::derive(seed, u64(t)));
        int n = int(rng.uniform(2, 4));
        MultiGraph g = random_multigraph(rng, n, int(rng.uniform(1, 6)), -9, 9, true);
        BProfile b = random_degree_profile(rng, g, 4);
        bool weighted = rng.chance(1, 2);
        Objective mode = weighted ? Objective::weighted : Objective::cardinality;

        BruteFactorResult best = brute_optimal_factor(weighted ? g : g.with_unit_weights(), b);
        SolveResult res = solve_general_factor(g, b, mode);
        std::string why;
        if (res.feasible != best.feasible) {
            why = "solver and reference disagree on feasibility";
        } else if (res.feasible) {
            /* Everything below lives on the driver scale: degree sums for
               cardinality, subgraph weight for weighted. */
            i64 opt = weighted ? best.value : 2 * best.value;
            const std::vector<i64>& vals = res.trace.value_sequence;
            const std::vector<IntVec>& pts = res.trace.point_sequence;
            for (size_t j = 0; j + 1 < pts.size() && why.empty(); ++j) {
                i64 gap = opt - vals[j];
                i64 rise = vals[j + 1] - vals[j];
                if (rise * l1_distance(best.degrees, pts[j]) < 2 * gap)
                    why = "improvement ratio fell below the gap bound";
            }
            if (why.empty()) {
                i64 gap0 = opt - vals.front();
                i64 bound =
                    i64(std::ceil(double(profile_size(b)) * std::log(double(gap0) + 1.0))) + 2;
                if (res.trace.iterations > bound) why = "iteration count exceeds the bound";
            }
        }
        if (why.empty()) continue;
        ++rep.failures;
        if (rep.first_failure.empty())
            rep.first_failure = "trial " + std::to_string(t) + ": " + why;
    }
    return rep;
}

Factor random_subset_factor(Rng& rng, const MultiGraph& g) {
    Factor f;
    for (int id = 0; id < g.edge_count(); ++id)
        if (rng.chance(1, 2)) f.push_back(id);
    return f;
}

SuiteReport run_sbo_suite(u64 seed, i64 trials) {
    SuiteReport rep{"sbo", trials, 0, seed, ""};
    for (i64 t = 0; t < trials; ++t) {
        Rng rng(Rng::derive(seed, u64(t)));
        int n = int(rng.uniform(1, 5));
        MultiGraph g = random_multigraph(rng, n, int(rng.uniform(0, 8)), -9, 9, true);
        Factor m = random_subset_factor(rng, g);
        Factor nn = random_subset_factor(rng, g);
        IntVec dm = degree_sequence(g, m);
        IntVec dn = degree_sequence(g, nn);
        TwoStepDecomposition dec = sbo_witness(g, m, nn);

        std::string why;
        IntVec sum(size_t(n), 0);
        for (const DecompPiece& piece : dec.pieces) {
            i64 l1 = 0;
            for (size_t v = 0; v < piece.p.size(); ++v) {
                l1 += piece.p[v] < 0 ? -piece.p[v] : piece.p[v];
                sum[v] += piece.p[v];
            }
            if (l1 != 2) why = "piece one-norm is not 2";
        }
        for (size_t v = 0; v < sum.size() && why.empty(); ++v)
            if (sum[v] != dn[v] - dm[v]) why = "pieces do not sum to the degree difference";

        /* Every subset of trails lands on a real subgraph degree point. */
        size_t l = dec.pieces.size();
        if (why.empty() && l <= 8) {
            for (u64 mask = 0; mask < (u64(1) << l) && why.empty(); ++mask) {
                std::vector<int> ids;
                IntVec want = dm;
                for (size_t i = 0; i < l; ++i)
                    if (mask >> i & 1) {
                        ids.insert(ids.end(), dec.pieces[i].carrier.begin(),
                                   dec.pieces[i].carrier.end());
                        for (size_t v = 0; v < want.size(); ++v) want[v] += dec.pieces[i].p[v];
                    }
                std::sort(ids.begin(), ids.end());
                if (degree_sequence(g, factor_toggle(m, ids)) != want)
                    why = "a trail subset misses its promised degrees";
            }
        }
        if (why.empty()) continue;
        ++rep.failures;
        if (rep.first_failure.empty())
            rep.first_failure = "trial " + std::to_string(t) + ": " + why;
    }
    return rep;
}

SuiteReport run_sbo_m_suite(u64 seed, i64 trials) {
    SuiteReport rep{"sbo-m", trials, 0, seed, ""};
    for (i64 t = 0; t < trials; ++t) {
        Rng rng(Rng::derive(seed, u64(t)));
        int n = int(rng.uniform(1, 4));
        MultiGraph g = random_multigraph(rng, n, int(rng.uniform(0, 7)), -9, 9, true);
        std::map<IntVec, i64> f = point_values(g, {});

        /* Replace two random subgraphs by the best subgraphs on their degree
           points, so both ends price exactly f. */
        IntVec dm = degree_sequence(g, random_subset_factor(rng, g));
        IntVec dn = degree_sequence(g, random_subset_factor(rng, g));
        ParityProduct at_m, at_n;
        for (i64 a : dm) at_m.push_back(ParityInterval{a, a});
        for (i64 a : dn) at_n.push_back(ParityInterval{a, a});
        OracleAnswer om = brute_oracle(g, at_m);
        OracleAnswer on = brute_oracle(g, at_n);
        Factor m = std::any_cast<Factor>(om.witness);
        Factor nn = std::any_cast<Factor>(on.witness);
        TwoStepDecomposition dec = sbo_witness(g, m, nn);

        std::string why;
        i64 gain_sum = 0;
        for (const DecompPiece& piece : dec.pieces) gain_sum += piece.gain;
        i64 cycle_sum = 0;
        for (const std::vector<int>& cyc : dec.cycles) {
            i64 cg = 0;
            for (int id : cyc)
                cg += std::binary_search(nn.begin(), nn.end(), id) ? g.edge(id).w
                                                                   : -g.edge(id).w;
            if (cg != 0) why = "alternating cycle between best subgraphs is not weight neutral";
            cycle_sum += cg;
        }
        if (why.empty() && gain_sum + cycle_sum != f.at(dn) - f.at(dm))
            why = "gains do not telescope to f(y) - f(x)";

        /* Valuated exchange: every subset of trails is worth at least the
           starting value plus its gains. */
        size_t l = dec.pieces.size();
        if (why.empty() && l <= 8) {
            for (u64 mask = 0; mask < (u64(1) << l) && why.empty(); ++mask) {
                IntVec want = dm;
                i64 gains = 0;
                for (size_t i = 0; i < l; ++i)
                    if (mask >> i & 1) {
                        for (size_t v = 0; v < want.size(); ++v) want[v] += dec.pieces[i].p[v];
                        gains += dec.pieces[i].gain;
                    }
                auto it = f.find(want);
                if (it == f.end())
                    why = "a trail subset leaves the degree point set";
                else if (it->second < f.at(dm) + gains)
                    why = "a trail subset is worth less than its gains promise";
            }
        }
        if (why.empty()) continue;
        ++rep.failures;
        if (rep.first_failure.empty())
            rep.first_failure = "trial " + std::to_string(t) + ": " + why;
    }
    return rep;
}

SuiteReport run_mjump_suite(u64 seed, i64 trials) {
    SuiteReport rep{"mjump", trials, 0, seed, ""};
    for (i64 t = 0; t < trials; ++t) {
        Rng rng(Rng::derive(seed, u64(t)));
        int n = int(rng.uniform(1, 4));
        MultiGraph g = random_multigraph(rng, n, int(rng.uniform(0, 6)), -9, 9, true);
        if (check_mjump(g, 5, rng)) continue;
        ++rep.failures;
        if (rep.first_failure.empty())
            rep.first_failure = "trial " + std::to_string(t) +
                                ": exchange inequality violated on a sampled pair";
    }
    return rep;
}

}  // namespace

std::vector<SuiteReport> run_verify_suites(u64 seed, std::optional<i64> trials_override) {
    auto trials = [&](i64 def) { return trials_override ? *trials_override : def; };
    std::vector<SuiteReport> out;
    out.push_back(run_parity_suite(Rng::derive(seed, 1), trials(10'000)));
    out.push_back(run_local_improvement_suite(Rng::derive(seed, 2), trials(1'000)));
    out.push_back(run_chain_suite(Rng::derive(seed, 3), trials(1'000)));
    out.push_back(run_local_global_suite(Rng::derive(seed, 4), trials(200)));
    out.push_back(run_update_ratio_suite(Rng::derive(seed, 5), trials(200)));
    out.push_back(run_sbo_suite(Rng::derive(seed, 6), trials(200)));
    out.push_back(run_sbo_m_suite(Rng::derive(seed, 7), trials(200)));
    out.push_back(run_mjump_suite(Rng::derive(seed, 8), trials(100)));
    return out;
}

}  // namespace gfactor
