#ifndef TRESSE_TRANSVECTANT_HPP
#define TRESSE_TRANSVECTANT_HPP

#include "tresse/form.hpp"

namespace tresse {

// {f_1,...,f_n}_l as mu o nabla^l on the disjoint-group representation.
// When every factor has degree >= l the result is homogeneous of degree
// sum(r_i) - n*l; when some factor has degree < l the result is zero.
NAryForm transvectant(const std::vector<NAryForm>& fs, unsigned l);

// Two-dimensional closed form,
//   {f,g}_l = sum_k (-1)^k C(l,k) d^l f/dx^(l-k) dy^k * d^l g/dx^k dy^(l-k),
// which agrees with the general path exactly.
NAryForm binary_transvectant(const NAryForm& f, const NAryForm& g, unsigned l);

// J(f) = {f,...,f}_{deg f}; zero whenever deg f is odd.
Rat self_transvectant_J(const NAryForm& f);

} // namespace tresse

#endif
