#pragma once

#include "pcg/rational.hpp"

#include <optional>
#include <vector>

namespace pcg {

/// coeffs . x <= bound
struct LinearConstraint {
  std::vector<Rational> coeffs;
  Rational bound;
};

/// Finds some x >= 0 satisfying every constraint, or nullopt when the system
/// is infeasible. Exact two-phase simplex (phase one only) with Bland's rule,
/// so it always terminates and the returned point is deterministic.
std::optional<std::vector<Rational>> find_feasible_point(std::size_t num_vars,
                                                         const std::vector<LinearConstraint>& rows);

}  // namespace pcg
