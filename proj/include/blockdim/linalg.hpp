#pragma once

#include "blockdim/rational.hpp"

#include <vector>

namespace blockdim {

// Solves A x = b exactly over the rationals. Denominators are cleared per
// row, then Bareiss fraction-free elimination runs on the integer system so
// intermediate entries stay single divisions of integer products. Throws
// std::domain_error when the system is singular.
std::vector<Rational> solve_linear(std::vector<std::vector<Rational>> a,
                                   std::vector<Rational> b);

}  // namespace blockdim
