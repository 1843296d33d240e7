#ifndef TRESSE_LINALG_HPP
#define TRESSE_LINALG_HPP

#include "tresse/rational_function.hpp"

#include <vector>

namespace tresse {

using RFMatrix = std::vector<std::vector<RationalFunction>>;

// Jacobian matrix d f_i / d x_j of a list of functions (square when
// |fs| == nvars, but any rectangle is allowed).
RFMatrix jacobian(const std::vector<RationalFunction>& fs);

// Exact determinant by Gaussian elimination over the function field.
RationalFunction det(const RFMatrix& m);

RationalFunction jacobian_det(const std::vector<RationalFunction>& fs);

// Solve M x = b exactly. Throws singular_matrix_error when det(M) is
// identically zero (as opposed to vanishing only at points).
std::vector<RationalFunction> solve_linear(const RFMatrix& m, const std::vector<RationalFunction>& b);

// Numeric counterparts over exact rationals.
std::vector<Rat> solve_linear_rat(std::vector<std::vector<Rat>> m, std::vector<Rat> b);
std::vector<std::vector<Rat>> invert_rat_matrix(std::vector<std::vector<Rat>> m);

} // namespace tresse

#endif
