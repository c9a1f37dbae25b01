#include "eqcolor/construction.hpp"

#include "eqcolor/feasibility.hpp"

#include <algorithm>
#include <sstream>

namespace eqcolor {

const char* to_string(DownshiftBranch branch) {
    switch (branch) {
        case DownshiftBranch::CASE1: return "CASE1";
        case DownshiftBranch::SUBCASE2_1: return "SUBCASE2_1";
        case DownshiftBranch::SUBCASE2_2_SHIFT: return "SUBCASE2_2_SHIFT";
    }
    return "?";
}

EquitableColoring construct_coloring(const Instance& instance, Int r) {
    if (r < 1) throw validation_error("construct_coloring: r must be positive");
    if (!feasible(instance, r))
        throw infeasible_error("no equitable " + std::to_string(r) + "-coloring of " +
                               instance.name());

    const Int total = instance.total();
    const Int k = instance.part_count();
    EquitableColoring coloring;
    coloring.classes.resize(static_cast<std::size_t>(k));

    if (r > total) {
        for (Int i = 0; i < k; ++i)
            coloring.classes[static_cast<std::size_t>(i)]
                .assign(static_cast<std::size_t>(instance.sizes()[static_cast<std::size_t>(i)]), 1);
        coloring.empty_classes = r - total;
        return coloring;
    }

    const Int small = total / r;  // classes have size small or small+1
    std::vector<Int> cuts(static_cast<std::size_t>(k));
    Int slack = r;
    for (Int i = 0; i < k; ++i) {
        cuts[static_cast<std::size_t>(i)] =
            ceil_div(instance.sizes()[static_cast<std::size_t>(i)], small + 1);
        slack -= cuts[static_cast<std::size_t>(i)];
    }
    // Raise cut counts toward floor(n_i/small) in canonical order; feasibility
    // guarantees the slack is absorbed exactly.
    for (Int i = 0; i < k && slack > 0; ++i) {
        const Int n = instance.sizes()[static_cast<std::size_t>(i)];
        const Int raise = std::min(slack, n / small - cuts[static_cast<std::size_t>(i)]);
        cuts[static_cast<std::size_t>(i)] += raise;
        slack -= raise;
    }
    if (slack != 0) throw internal_error("construct_coloring: slack not absorbed");

    for (Int i = 0; i < k; ++i) {
        const Int n = instance.sizes()[static_cast<std::size_t>(i)];
        const Int t = cuts[static_cast<std::size_t>(i)];
        const Int big = n - small * t;  // classes of size small+1
        auto& part = coloring.classes[static_cast<std::size_t>(i)];
        part.assign(static_cast<std::size_t>(big), small + 1);
        part.insert(part.end(), static_cast<std::size_t>(t - big), small);
    }
    return coloring;
}

std::vector<std::string> verify_issues(const Instance& instance,
                                       const EquitableColoring& coloring) {
    std::vector<std::string> issues;
    const Int k = instance.part_count();
    if (static_cast<Int>(coloring.classes.size()) != k) {
        issues.push_back("part count mismatch");
        return issues;
    }
    if (coloring.empty_classes < 0) issues.push_back("negative empty-class count");

    Int max_size = 0;
    Int min_size = -1;
    for (Int i = 0; i < k; ++i) {
        const auto& part = coloring.classes[static_cast<std::size_t>(i)];
        Int sum = 0;
        for (Int size : part) {
            if (size <= 0) {
                issues.push_back("nonpositive class size in part " + std::to_string(i + 1));
                continue;
            }
            sum += size;
            max_size = std::max(max_size, size);
            min_size = min_size < 0 ? size : std::min(min_size, size);
        }
        if (sum != instance.sizes()[static_cast<std::size_t>(i)])
            issues.push_back("part " + std::to_string(i + 1) + " sizes sum to " +
                             std::to_string(sum) + ", expected " +
                             std::to_string(instance.sizes()[static_cast<std::size_t>(i)]));
    }
    // Empty classes count toward the size gap when present.
    if (coloring.empty_classes > 0) min_size = 0;
    if (min_size >= 0 && max_size - min_size > 1)
        issues.push_back("class sizes " + std::to_string(min_size) + " and " +
                         std::to_string(max_size) + " differ by more than one");
    return issues;
}

bool verify_coloring(const Instance& instance, const EquitableColoring& coloring) {
    return verify_issues(instance, coloring).empty();
}

void validate_profile(const Instance& instance, const ClassProfile& profile) {
    const Int k = instance.part_count();
    if (profile.r < 1) throw validation_error("profile: r must be positive");
    if (profile.r > instance.total())
        throw validation_error("profile: r must not exceed the vertex count");
    if (profile.b != ceil_div(instance.total(), profile.r))
        throw validation_error("profile: b must equal ceil(N/r)");
    if (static_cast<Int>(profile.per_part.size()) != k)
        throw validation_error("profile: part count mismatch");
    Int count_sum = 0;
    for (Int i = 0; i < k; ++i) {
        const auto& pc = profile.per_part[static_cast<std::size_t>(i)];
        if (pc.small < 0 || pc.small > pc.count)
            throw validation_error("profile: small-class count out of range in part " +
                                   std::to_string(i + 1));
        if (instance.sizes()[static_cast<std::size_t>(i)] != pc.count * profile.b - pc.small)
            throw validation_error("profile: class counts do not match size of part " +
                                   std::to_string(i + 1));
        count_sum += pc.count;
    }
    if (count_sum != profile.r) throw validation_error("profile: class counts do not sum to r");
}

ClassProfile profile_from_coloring(const Instance& instance, const EquitableColoring& coloring) {
    auto issues = verify_issues(instance, coloring);
    if (!issues.empty()) throw validation_error("profile from coloring: " + issues.front());
    if (coloring.empty_classes > 0)
        throw validation_error("profiles cannot carry empty classes");

    ClassProfile profile;
    profile.r = coloring.class_count();
    profile.b = ceil_div(instance.total(), profile.r);
    for (const auto& part : coloring.classes) {
        PartClasses pc;
        pc.count = static_cast<Int>(part.size());
        for (Int size : part) {
            if (size == profile.b - 1)
                ++pc.small;
            else if (size != profile.b)
                throw validation_error("class size " + std::to_string(size) +
                                       " is neither b nor b-1");
        }
        profile.per_part.push_back(pc);
    }
    validate_profile(instance, profile);
    return profile;
}

EquitableColoring profile_to_coloring(const Instance& instance, const ClassProfile& profile) {
    validate_profile(instance, profile);
    EquitableColoring coloring;
    for (const auto& pc : profile.per_part) {
        std::vector<Int> part(static_cast<std::size_t>(pc.count - pc.small), profile.b);
        part.insert(part.end(), static_cast<std::size_t>(pc.small), profile.b - 1);
        coloring.classes.push_back(std::move(part));
    }
    return coloring;
}

ClassProfile canonical_profile(const Instance& instance, Int r) {
    if (r > instance.total())
        throw validation_error("profiles require r <= N");
    return profile_from_coloring(instance, construct_coloring(instance, r));
}

std::pair<ClassProfile, DownshiftTrace> downshift(const Instance& instance,
                                                  const ClassProfile& profile) {
    validate_profile(instance, profile);
    const Int r = profile.r;
    const Int b = profile.b;
    const Int k = instance.part_count();
    if (r <= 1 || !feasible(instance, r - 1))
        throw infeasible_error("no equitable " + std::to_string(r - 1) + "-coloring of " +
                               instance.name() + "; cannot downshift");

    // Start from the classes the profile describes; one part gets repacked.
    EquitableColoring next = profile_to_coloring(instance, profile);
    DownshiftTrace trace;

    if (k == 1) {
        // Edgeless graph: repack the lone set into r-1 near-equal classes.
        // The case split below presumes at least two partite sets.
        const Int n = instance.sizes()[0];
        const Int t = r - 1;
        auto& part = next.classes[0];
        part.assign(static_cast<std::size_t>(n % t), ceil_div(n, t));
        part.insert(part.end(), static_cast<std::size_t>(t - n % t), n / t);
        auto single_issues = verify_issues(instance, next);
        if (!single_issues.empty() || next.class_count() != r - 1)
            throw internal_error("downshift produced an invalid coloring: " +
                                 (single_issues.empty() ? std::string("wrong class count")
                                                        : single_issues.front()));
        return {profile_from_coloring(instance, next),
                DownshiftTrace{DownshiftBranch::SUBCASE2_1, 0, 0}};
    }

    Int case1_j = -1;
    for (Int i = 0; i < k; ++i) {
        const Int n = instance.sizes()[static_cast<std::size_t>(i)];
        if (profile.per_part[static_cast<std::size_t>(i)].count != ceil_div(n, b)) {
            case1_j = i;
            break;
        }
    }

    if (case1_j >= 0) {
        // n_j = ceil(n_j/b)*b - g_j with 0 <= g_j <= b-1; the surplus class
        // count forces s_j - g_j to be a positive multiple of b, so the set
        // repacks into r_j-1 classes of size b and b-1.
        const Int j = case1_j;
        const Int n = instance.sizes()[static_cast<std::size_t>(j)];
        const auto& pc = profile.per_part[static_cast<std::size_t>(j)];
        const Int g = ceil_div(n, b) * b - n;
        if (pc.small < b || (pc.small - g) % b != 0 || pc.small - g <= 0)
            throw internal_error("downshift: surplus part lacks b small classes");
        auto& part = next.classes[static_cast<std::size_t>(j)];
        part.assign(static_cast<std::size_t>(pc.count - pc.small + b - 1), b);
        part.insert(part.end(), static_cast<std::size_t>(pc.small - b), b - 1);
        trace = DownshiftTrace{DownshiftBranch::CASE1, j, g};
    } else {
        // Every part uses ceil(n_i/b) classes. At most one n_j can fail to be
        // a multiple of b, since two would force the reduction to stop below
        // this r. That part, or failing it any part with n_j/(r_j-1) <= b+1,
        // repacks into r_j-1 classes of size b and b+1.
        Int uneven_j = -1;
        for (Int i = 0; i < k; ++i) {
            if (instance.sizes()[static_cast<std::size_t>(i)] % b != 0) {
                if (uneven_j >= 0)
                    throw internal_error("downshift: two parts not divisible by b");
                uneven_j = i;
            }
        }
        Int j = uneven_j;
        if (j < 0) {
            for (Int i = 0; i < k; ++i) {
                const Int n = instance.sizes()[static_cast<std::size_t>(i)];
                const Int count = profile.per_part[static_cast<std::size_t>(i)].count;
                if (count >= 2 && n <= (count - 1) * (b + 1)) {
                    j = i;
                    break;
                }
            }
            if (j < 0)
                throw internal_error("downshift: no repackable part; unreachable below p");
            trace = DownshiftTrace{DownshiftBranch::SUBCASE2_2_SHIFT, j, 0};
        } else {
            trace = DownshiftTrace{DownshiftBranch::SUBCASE2_1, j, 0};
        }
        const Int n = instance.sizes()[static_cast<std::size_t>(j)];
        const Int count = profile.per_part[static_cast<std::size_t>(j)].count;
        if (count < 2 || n > (count - 1) * (b + 1))
            throw internal_error("downshift: selected part cannot shed a class");
        const Int big = n - (count - 1) * b;  // classes of size b+1
        auto& part = next.classes[static_cast<std::size_t>(j)];
        part.assign(static_cast<std::size_t>(big), b + 1);
        part.insert(part.end(), static_cast<std::size_t>(count - 1 - big), b);
    }

    auto issues = verify_issues(instance, next);
    if (!issues.empty() || next.class_count() != r - 1)
        throw internal_error("downshift produced an invalid coloring: " +
                             (issues.empty() ? std::string("wrong class count") : issues.front()));
    return {profile_from_coloring(instance, next), trace};
}

}  // namespace eqcolor
