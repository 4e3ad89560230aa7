#pragma once

#include <optional>

#include "lp/lp_model.hpp"

namespace cistkit::testsupport {

// Exhaustive 0/1 evaluation of a small LpModel (all variables binary).
// Returns the optimal objective value, or nullopt if infeasible.
// Intended for models with at most ~20 variables.
std::optional<int> lp_optimum(const LpModel& model);

}  // namespace cistkit::testsupport
