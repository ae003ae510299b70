#pragma once

#include "gfactor/graphfactor.hpp"
#include "gfactor/parityset.hpp"
#include "gfactor/rng.hpp"

namespace gfactor {

/*
 * Random-instance builders shared by the verification suites, the CLI
 * generator, and the tests.  Everything is a pure function of the Rng stream,
 * so a fixed seed reproduces instances byte for byte.
 */

/* Up to max_size elements, first one uniform in [lo_min, lo_max], steps of 1 or 2. */
GapFreeSet random_gapfree_set(Rng& rng, i64 lo_min, i64 lo_max, int max_size);

BProfile random_profile(Rng& rng, int n, i64 lo_min, i64 lo_max, int max_size);

/* Exactly m edges with both endpoints uniform; loops rerolled when disallowed. */
MultiGraph random_multigraph(Rng& rng, int n, int m, i64 wlo, i64 whi, bool loops);

/*
 * Degree constraint sets anchored inside [0, max_degree(v)], so every set
 * contains at least one attainable degree (joint feasibility across vertices
 * is still not guaranteed, which the solvers must handle anyway).
 */
BProfile random_degree_profile(Rng& rng, const MultiGraph& g, int max_size);

}  // namespace gfactor
