#include "gfactor/generate.hpp"

#include <stdexcept>

namespace gfactor {

GapFreeSet random_gapfree_set(Rng& rng, i64 lo_min, i64 lo_max, int max_size) {
    if (max_size < 1) throw std::invalid_argument("random_gapfree_set: max_size must be positive");
    int size = int(rng.uniform(1, max_size));
    std::vector<i64> elems;
    elems.reserve(size_t(size));
    i64 cur = rng.uniform(lo_min, lo_max);
    elems.push_back(cur);
    for (int i = 1; i < size; ++i) {
        cur += rng.uniform(1, 2);
        elems.push_back(cur);
    }
    return GapFreeSet(std::move(elems));
}

BProfile random_profile(Rng& rng, int n, i64 lo_min, i64 lo_max, int max_size) {
    BProfile b;
    b.reserve(size_t(n));
    for (int v = 0; v < n; ++v) b.push_back(random_gapfree_set(rng, lo_min, lo_max, max_size));
    return b;
}

MultiGraph random_multigraph(Rng& rng, int n, int m, i64 wlo, i64 whi, bool loops) {
    if (n < 1 && m > 0) throw std::invalid_argument("random_multigraph: edges need vertices");
    if (!loops && n < 2 && m > 0)
        throw std::invalid_argument("random_multigraph: no loop-free edges on a single vertex");
    std::vector<GraphEdge> es;
    es.reserve(size_t(m));
    for (int i = 0; i < m; ++i) {
        int u = int(rng.uniform(0, n - 1));
        int v = int(rng.uniform(0, n - 1));
        while (!loops && u == v) v = int(rng.uniform(0, n - 1));
        if (u > v) std::swap(u, v);
        es.push_back(GraphEdge{u, v, rng.uniform(wlo, whi)});
    }
    return MultiGraph(n, std::move(es));
}

BProfile random_degree_profile(Rng& rng, const MultiGraph& g, int max_size) {
    BProfile b;
    b.reserve(size_t(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) {
        i64 cap = g.max_degree(v);
        i64 start = rng.uniform(0, cap > 0 ? cap - 1 : 0);
        int size = int(rng.uniform(1, max_size));
        std::vector<i64> elems{start};
        for (int i = 1; i < size; ++i) elems.push_back(elems.back() + rng.uniform(1, 2));
        b.push_back(GapFreeSet(std::move(elems)));
    }
    return b;
}

}  // namespace gfactor
