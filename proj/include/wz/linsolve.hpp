#pragma once

#include <optional>
#include <vector>

#include "wz/big_rational.hpp"

namespace wz {

using RationalMatrix = std::vector<std::vector<BigRational>>;

// Solves matrix * v = rhs exactly for any rectangular shape. Returns one
// solution with every free variable set to zero, or nullopt when the system
// is inconsistent. Throws std::invalid_argument for ragged input or a
// mismatched rhs length.
std::optional<std::vector<BigRational>> linsolve(const RationalMatrix& matrix, const std::vector<BigRational>& rhs);

} // namespace wz
