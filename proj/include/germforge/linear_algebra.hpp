#pragma once

#include <optional>
#include <vector>

#include "germforge/polynomial.hpp"

namespace germforge {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Rank over Q by Gaussian elimination. Rows may have different lengths only
/// if they are all empty.
std::size_t matrix_rank(RationalMatrix m);

/// Some x >= 0 with A x = b, or nullopt when none exists. Exact phase-one
/// simplex with Bland's rule, so it always terminates.
std::optional<std::vector<Rational>> nonnegative_solution(const RationalMatrix& a, const std::vector<Rational>& b);

}  // namespace germforge
