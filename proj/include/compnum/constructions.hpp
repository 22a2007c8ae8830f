#pragma once

#include "compnum/competition.hpp"
#include "compnum/graph.hpp"
#include "compnum/limits.hpp"

namespace compnum {

// Realization of H(2,q) with two isolated preys: the row lines S_1(i) feed
// (1,i-1), the column lines S_2(i) feed (i-1,q), S_1(1) and S_2(1) feed z1, z2.
// Ordering: z1, z2, then [q]^2 lexicographically.
Realization build_h2q(int q);

// Realization of H(3,2) with six isolated preys whose in-neighbourhoods are the
// twelve edges, found by matching over the lexicographic order. The last two
// ordered vertices, (2,2,1) and (2,2,2), are never preys.
Realization build_h32_base();

// Realization of K_{q1} box K_{q2} box K_{q3} with six isolated preys whose
// in-neighbourhoods are exactly the axis lines. Built by peeling the last
// layer off the first axis longer than two and gluing it onto the realization
// of the smaller box; the base is build_h32_base().
Realization build_box(const Dims& dims, const Limits& limits = {});

}  // namespace compnum
