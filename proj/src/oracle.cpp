#include "eqcolor/oracle.hpp"

#include <algorithm>

namespace eqcolor {

namespace {

// Whether some choice of class counts (t_i, ..., t_k) with the partial
// constraints already fixed admits pooled class sizes spanning at most two
// consecutive values. The most balanced split of n into t parts has sizes
// floor(n/t) and ceil(n/t); if any split of n into t parts fits a two-value
// window, the balanced one does.
bool search(const std::vector<Int>& sizes, std::size_t i, Int remaining, Int lo_seen,
            Int hi_seen) {
    if (i == sizes.size()) return remaining == 0 && hi_seen - lo_seen <= 1;
    const Int parts_left = static_cast<Int>(sizes.size() - i - 1);
    for (Int t = 1; t <= std::min(sizes[i], remaining - parts_left); ++t) {
        const Int lo = sizes[i] / t;
        const Int hi = lo + (sizes[i] % t != 0 ? 1 : 0);
        const Int new_lo = std::min(lo_seen, lo);
        const Int new_hi = std::max(hi_seen, hi);
        if (new_hi - new_lo > 1) continue;
        if (search(sizes, i + 1, remaining - t, new_lo, new_hi)) return true;
    }
    return false;
}

}  // namespace

bool oracle_feasible(const Instance& instance, Int r, Int budget) {
    if (r < 1) throw validation_error("oracle_feasible: r must be positive");
    Int combinations = 1;
    for (Int n : instance.sizes()) {
        if (__builtin_mul_overflow(combinations, n, &combinations) || combinations > budget)
            throw oracle_budget_error("instance too large for oracle (budget " +
                                      std::to_string(budget) + ")");
    }
    // Above the vertex count the spare colors become empty classes; sizes 0
    // and 1 differ by at most one, so singletons always work.
    if (r >= instance.total()) return true;
    if (r < instance.part_count()) return false;  // each set needs its own class

    constexpr Int kInf = Int{1} << 62;
    return search(instance.sizes(), 0, r, kInf, 0);
}

Int oracle_threshold(const Instance& instance, Int budget) {
    Int threshold = 1;
    for (Int r = 1; r <= instance.total(); ++r) {
        if (!oracle_feasible(instance, r, budget)) threshold = r + 1;
    }
    return threshold;
}

}  // namespace eqcolor
