#pragma once

#include <vector>

#include "bilip/rational.hpp"

namespace bilip {

using RationalMatrix = std::vector<std::vector<Rational>>;

// Exact rank by fraction-free (Bareiss) elimination on the cleared-denominator
// integer matrix.
int matrix_rank(const RationalMatrix& m);

}  // namespace bilip
