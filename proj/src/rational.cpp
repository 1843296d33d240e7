#include "tresse/rational.hpp"

#include "tresse/errors.hpp"

#include <cctype>
#include <cmath>

namespace tresse {

Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Int binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Rat rat_from_string(std::string_view s) {
    if (s.empty()) throw error("empty rational literal");
    std::string t(s);
    for (std::size_t i = 0; i < t.size(); ++i) {
        char c = t[i];
        bool ok = std::isdigit(static_cast<unsigned char>(c)) || c == '/' || (c == '-' && i == 0);
        if (!ok) throw error("invalid rational literal: " + t);
    }
    Rat q;
    if (q.set_str(t, 10) != 0) throw error("invalid rational literal: " + t);
    if (q.get_den() == 0) throw error("zero denominator in rational literal: " + t);
    q.canonicalize();
    return q;
}

std::string rat_to_string(const Rat& q) {
    return q.get_str();
}

Rat rat_from_double(double x) {
    if (!std::isfinite(x)) throw error("cannot convert non-finite double to rational");
    return Rat(x);
}

double rat_to_double(const Rat& q) {
    return q.get_d();
}

} // namespace tresse
