#ifndef EQCOLOR_THRESHOLD_HPP
#define EQCOLOR_THRESHOLD_HPP

#include "eqcolor/core.hpp"

namespace eqcolor {

// The minimum d >= ceil(N/q) such that either
//   (i)  at least two of the n_i are not divisible by d, or
//   (ii) some n_j satisfies n_j / floor(n_j/d) > d+1,
// where floor(n_j/d) = 0 makes the ratio infinite and (ii) hold.
// Requires that an equitable q-coloring exists; throws infeasible_error
// otherwise.
Int find_d(const Instance& instance, Int q);

// p(q: n_1,...,n_k) = sum of ceil(n_i / d) for d = find_d(instance, q).
// This is the minimum p such that equitable r-colorings exist for every
// r in [p, q]; no equitable (p-1)-coloring exists.
ThresholdResult p_of_q(const Instance& instance, Int q);

// The minimum p such that equitable r-colorings exist for every r >= p.
// Equals p_of_q at q = N, which is always feasible.
ThresholdResult equitable_chromatic_threshold(const Instance& instance);

}  // namespace eqcolor

#endif
