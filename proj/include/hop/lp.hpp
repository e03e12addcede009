#pragma once

#include "hop/rational.hpp"

#include <optional>
#include <vector>

namespace hop::lp {

/// Exact phase-one simplex: is there t >= 0 with sum(t) = 1 and sum_j t_j * vertices[j] = x?
/// Bland's rule, so it cannot cycle. Returns the weights when feasible.
std::optional<RatVec> convex_combination(const std::vector<RatVec>& vertices, const RatVec& x);

}  // namespace hop::lp
