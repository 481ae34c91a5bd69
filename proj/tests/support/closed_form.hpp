#pragma once

#include <array>

#include "da/matrix.hpp"

namespace da::test {

// Characteristic-polynomial eigenvalues for symmetric matrices, used as an
// oracle against the iterative solver. Results descend.
std::array<double, 2> eigenvalues_2x2(const da::Matrix& a);
std::array<double, 3> eigenvalues_3x3(const da::Matrix& a);

} // namespace da::test
