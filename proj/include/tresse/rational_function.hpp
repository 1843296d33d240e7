#ifndef TRESSE_RATIONAL_FUNCTION_HPP
#define TRESSE_RATIONAL_FUNCTION_HPP

#include "tresse/polynomial.hpp"

#include <map>
#include <span>
#include <string>
#include <vector>

namespace tresse {

// Quotient of two polynomials over the same variables. Not reduced by a
// multivariate gcd: normalization clears integer content, cancels the common
// monomial factor, and fixes the sign of the denominator's leading
// coefficient. Equality is decided by cross-multiplication.
class RationalFunction {
public:
    RationalFunction() = default; // zero over no variables
    explicit RationalFunction(Polynomial num);
    RationalFunction(Polynomial num, Polynomial den);

    static RationalFunction constant(std::vector<std::string> vars, const Rat& c);
    static RationalFunction variable(std::vector<std::string> vars, int i);

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    const std::vector<std::string>& vars() const { return num_.vars(); }
    int nvars() const { return num_.nvars(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    Polynomial as_polynomial() const; // throws dimension_error when den is non-constant
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rat constant_value() const;

    RationalFunction operator+(const RationalFunction&) const;
    RationalFunction operator-(const RationalFunction&) const;
    RationalFunction operator-() const;
    RationalFunction operator*(const RationalFunction&) const;
    RationalFunction operator/(const RationalFunction&) const; // throws zero_denominator_error
    RationalFunction operator*(const Rat&) const;
    RationalFunction pow(long e) const;

    RationalFunction derive(int var) const;
    Rat eval(std::span<const Rat> point) const; // throws pole_error

    bool operator==(const RationalFunction&) const;
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

    std::string str() const;

private:
    void normalize();
    Polynomial num_, den_; // den never identically zero; den = 1 when num = 0
};

RationalFunction operator*(const Rat& c, const RationalFunction& f);

using SubstMap = std::map<std::string, RationalFunction>;

// Exact composition. Every variable of f must be bound by m; the values must
// all live over target_vars. Throws zero_denominator_error when the
// substituted denominator vanishes identically.
RationalFunction substitute(const Polynomial& f, const std::vector<std::string>& target_vars,
                            const SubstMap& m);
RationalFunction substitute(const RationalFunction& f, const std::vector<std::string>& target_vars,
                            const SubstMap& m);

} // namespace tresse

#endif
