#include "eqcolor/feasibility.hpp"

namespace eqcolor {

bool feasible(const Instance& instance, Int r) {
    if (r < 1) throw validation_error("feasible: r must be positive");
    const Int total = instance.total();
    if (r >= total) return true;  // singletons plus empty classes

    const Int small = total / r;  // >= 1 since r < N
    Int lo_sum = 0;
    Int hi_sum = 0;
    for (Int n : instance.sizes()) {
        const Int lo = ceil_div(n, small + 1);
        const Int hi = n / small;
        if (lo > hi) return false;
        lo_sum += lo;
        hi_sum += hi;
    }
    return lo_sum <= r && r <= hi_sum;
}

Int min_equitable(const Instance& instance) {
    for (Int r = 1;; ++r) {
        if (feasible(instance, r)) return r;  // r = N always succeeds
    }
}

FeasibilityReport spectrum(const Instance& instance, Int r_max) {
    if (r_max < 1) throw validation_error("spectrum: r_max must be positive");
    FeasibilityReport report{instance, {}};
    for (Int r = 1; r <= r_max; ++r) report.entries[r] = feasible(instance, r);
    return report;
}

}  // namespace eqcolor
