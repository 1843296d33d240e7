#ifndef TRESSE_TESTS_ORACLE_HPP
#define TRESSE_TESTS_ORACLE_HPP

#include "tresse/form.hpp"

#include <vector>

namespace tresse::testing {

// Brute-force transvectant: expand nabla^l over all l-tuples of permutations
// and multiply the iterated partials factor by factor. No tensor-product
// machinery involved; this is the independent reference the pipeline is
// checked against.
NAryForm oracle_transvectant(const std::vector<NAryForm>& fs, unsigned l);

Rat oracle_self_J(const NAryForm& f);

} // namespace tresse::testing

#endif
