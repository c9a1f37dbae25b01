#ifndef EQCOLOR_FEASIBILITY_HPP
#define EQCOLOR_FEASIBILITY_HPP

#include "eqcolor/core.hpp"

namespace eqcolor {

// Whether an equitable r-coloring of the instance exists.
//
// With s = floor(N/r) >= 1, every class has size s or s+1 and lies inside one
// partite set, so set i is cut into t_i classes with
// ceil(n_i/(s+1)) <= t_i <= floor(n_i/s). Feasibility reduces to these
// intervals being nonempty and r lying in their sum. For r >= N classes of
// size 1 and 0 always work.
bool feasible(const Instance& instance, Int r);

// Smallest feasible r (the equitable chromatic number).
Int min_equitable(const Instance& instance);

// Feasibility for every r in [1, r_max].
FeasibilityReport spectrum(const Instance& instance, Int r_max);

}  // namespace eqcolor

#endif
