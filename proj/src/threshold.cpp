#include "eqcolor/threshold.hpp"

#include "eqcolor/feasibility.hpp"

#include <string>

namespace eqcolor {

namespace {

bool condition_i(const std::vector<Int>& sizes, Int d) {
    int not_divisible = 0;
    for (Int n : sizes) {
        if (n % d != 0 && ++not_divisible == 2) return true;
    }
    return false;
}

bool condition_ii(const std::vector<Int>& sizes, Int d) {
    for (Int n : sizes) {
        const Int fl = n / d;
        // fl = 0 means the ratio is infinite; otherwise compare exactly.
        if (fl == 0 || n > (d + 1) * fl) return true;
    }
    return false;
}

}  // namespace

Int find_d(const Instance& instance, Int q) {
    if (q < 1) throw validation_error("find_d: q must be positive");
    if (!feasible(instance, q))
        throw infeasible_error("no equitable " + std::to_string(q) + "-coloring of " +
                               instance.name());

    // A single partite set has no edges, so every r >= 1 works and p must be
    // 1; d = n_1 is the least witness with ceil(n_1/d) = 1. The two-condition
    // scan below can stop early here (e.g. n_1 = 5 stops at d = 3) and report
    // a threshold above 1, so the scan applies only to k >= 2.
    if (instance.part_count() == 1) return instance.max_size();

    const auto& sizes = instance.sizes();
    for (Int d = ceil_div(instance.total(), q);; ++d) {
        if (condition_i(sizes, d) || condition_ii(sizes, d)) return d;
        // d = max(n_i)+1 makes every floor(n_i/d) zero, so the scan stops there.
        if (d > instance.max_size()) throw internal_error("find_d: scan passed its bound");
    }
}

ThresholdResult p_of_q(const Instance& instance, Int q) {
    const Int d = find_d(instance, q);
    Int p = 0;
    for (Int n : instance.sizes()) p += ceil_div(n, d);
    return ThresholdResult{d, p, q};
}

ThresholdResult equitable_chromatic_threshold(const Instance& instance) {
    return p_of_q(instance, instance.total());
}

}  // namespace eqcolor
