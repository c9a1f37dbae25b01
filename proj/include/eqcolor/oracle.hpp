#ifndef EQCOLOR_ORACLE_HPP
#define EQCOLOR_ORACLE_HPP

#include "eqcolor/core.hpp"

namespace eqcolor {

inline constexpr Int kDefaultOracleBudget = 1'000'000;

// Ground-truth feasibility by enumerating every way to spread r classes over
// the partite sets, checking the pooled class sizes from first principles.
// Shares nothing with the interval-based decision beyond integer division.
// Throws oracle_budget_error when the enumeration space exceeds the budget.
bool oracle_feasible(const Instance& instance, Int r, Int budget = kDefaultOracleBudget);

// Ground-truth equitable chromatic threshold: one past the largest infeasible
// r in [1, N], or 1 if every r is feasible.
Int oracle_threshold(const Instance& instance, Int budget = kDefaultOracleBudget);

}  // namespace eqcolor

#endif
