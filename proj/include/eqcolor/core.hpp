#ifndef EQCOLOR_CORE_HPP
#define EQCOLOR_CORE_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace eqcolor {

using Int = std::int64_t;

// Malformed input: bad sizes, inconsistent profiles/colorings, bad arguments.
class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

// A query whose answer is undefined, e.g. p(q) for an infeasible q.
class infeasible_error : public std::runtime_error {
public:
    explicit infeasible_error(const std::string& what) : std::runtime_error(what) {}
};

// Brute-force enumeration would exceed its combination budget.
class oracle_budget_error : public std::runtime_error {
public:
    explicit oracle_budget_error(const std::string& what) : std::runtime_error(what) {}
};

// A branch the underlying theory proves unreachable was reached.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

// Exact ceiling division for nonnegative a, positive b.
Int ceil_div(Int a, Int b);

// Partite-set sizes of a complete multipartite graph, canonically sorted.
class Instance {
public:
    const std::vector<Int>& sizes() const { return sizes_; }
    Int total() const { return total_; }
    Int part_count() const { return static_cast<Int>(sizes_.size()); }
    Int max_size() const { return sizes_.back(); }

    // Short display form, e.g. "K_{3,5}".
    std::string name() const;

    friend Instance make_instance(std::vector<Int> sizes);

private:
    Instance() = default;
    std::vector<Int> sizes_;
    Int total_ = 0;
};

// Validates and canonicalizes; throws validation_error on empty input,
// nonpositive sizes, or overflow of the total.
Instance make_instance(std::vector<Int> sizes);

// Per-partite-set class counts for an equitable coloring with r classes of
// sizes b and b-1: `count` classes in the set, `small` of them of size b-1.
struct PartClasses {
    Int count = 0;  // r_i
    Int small = 0;  // s_i
};

struct ClassProfile {
    Int r = 0;  // total number of color classes
    Int b = 0;  // large class size, ceil(N/r)
    std::vector<PartClasses> per_part;
};

// Explicit equitable coloring: class sizes per partite set. Classes of size
// zero appear only through empty_classes (used when r exceeds the vertex
// count) and belong to no partite set.
struct EquitableColoring {
    std::vector<std::vector<Int>> classes;
    Int empty_classes = 0;

    Int class_count() const;
};

struct ThresholdResult {
    Int d = 0;  // witness divisor
    Int p = 0;  // sum of ceil(n_i / d)
    Int q = 0;  // the query this was computed for
};

struct FeasibilityReport {
    Instance instance;
    std::map<Int, bool> entries;  // r -> equitable r-coloring exists
};

}  // namespace eqcolor

#endif
