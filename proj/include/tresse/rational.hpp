#ifndef TRESSE_RATIONAL_HPP
#define TRESSE_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace tresse {

// Exact big-integer / big-rational scalars. All symbolic coefficients in the
// library are Rat; doubles appear only at the sampling/reporting boundary.
using Int = mpz_class;
using Rat = mpq_class;

Int factorial(unsigned long n);
Int binomial(unsigned long n, unsigned long k);

// Accepts "3", "-3", "3/4", "-3/4". Throws tresse::error on anything else.
Rat rat_from_string(std::string_view s);

// Canonical form: "n" or "n/d" with d > 0.
std::string rat_to_string(const Rat& q);

// Exact dyadic rational equal to the double (must be finite).
Rat rat_from_double(double x);

// Within 1 ulp of the exact value (GMP truncates the binary expansion).
double rat_to_double(const Rat& q);

} // namespace tresse

#endif
