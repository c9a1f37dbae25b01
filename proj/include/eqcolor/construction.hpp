#ifndef EQCOLOR_CONSTRUCTION_HPP
#define EQCOLOR_CONSTRUCTION_HPP

#include "eqcolor/core.hpp"

#include <string>
#include <utility>
#include <vector>

namespace eqcolor {

// Which branch of the reduction a downshift step took.
enum class DownshiftBranch {
    CASE1,             // some set had more classes than ceil(n_j/b)
    SUBCASE2_1,        // the one set not cut into size-b classes absorbs the merge
    SUBCASE2_2_SHIFT,  // all sets cut evenly; a set with n_j/(r_j-1) <= b+1 is repacked
};

struct DownshiftTrace {
    DownshiftBranch case_taken = DownshiftBranch::CASE1;
    Int j = 0;    // partite-set index acted on (canonical order)
    Int g_j = 0;  // deficit in n_j = ceil(n_j/b)*b - g_j; meaningful for CASE1 only
};

const char* to_string(DownshiftBranch branch);

// Deterministic equitable r-coloring. Throws infeasible_error when no
// equitable r-coloring exists.
EquitableColoring construct_coloring(const Instance& instance, Int r);

// Reasons the coloring is not a valid equitable coloring of the instance;
// empty when it is.
std::vector<std::string> verify_issues(const Instance& instance,
                                       const EquitableColoring& coloring);

bool verify_coloring(const Instance& instance, const EquitableColoring& coloring);

// Profile/coloring conversions. Profiles describe colorings with classes of
// sizes b and b-1 only and require r <= N.
ClassProfile profile_from_coloring(const Instance& instance, const EquitableColoring& coloring);
EquitableColoring profile_to_coloring(const Instance& instance, const ClassProfile& profile);

// Profile of the deterministic construction for a feasible r <= N.
ClassProfile canonical_profile(const Instance& instance, Int r);

// Throws validation_error unless the profile is internally consistent for the
// instance: sum of counts equals r, b = ceil(N/r), n_i = r_i*b - s_i, and
// 0 <= s_i <= r_i.
void validate_profile(const Instance& instance, const ClassProfile& profile);

// One step of the reduction from an equitable r-coloring to an equitable
// (r-1)-coloring, following the case analysis on the class profile. Requires
// an equitable (r-1)-coloring to exist; throws infeasible_error at the
// threshold (no applicable case below p).
std::pair<ClassProfile, DownshiftTrace> downshift(const Instance& instance,
                                                  const ClassProfile& profile);

}  // namespace eqcolor

#endif
