#ifndef TRESSE_POLYNOMIAL_HPP
#define TRESSE_POLYNOMIAL_HPP

#include "tresse/multiindex.hpp"
#include "tresse/rational.hpp"

#include <map>
#include <span>
#include <string>
#include <vector>

namespace tresse {

// Exact multivariate polynomial over the rationals. Terms are kept in a
// sorted map keyed by the exponent vector; no zero coefficient is ever
// stored, so structural equality is value equality. Values are immutable in
// use: every operation returns a fresh polynomial.
class Polynomial {
public:
    using Terms = std::map<MultiIndex, Rat>;

    Polynomial() = default; // zero polynomial in zero variables
    explicit Polynomial(std::vector<std::string> vars);

    static Polynomial constant(std::vector<std::string> vars, const Rat& c);
    static Polynomial variable(std::vector<std::string> vars, int i);
    static Polynomial monomial(std::vector<std::string> vars, const MultiIndex& a, const Rat& c);

    const std::vector<std::string>& vars() const { return vars_; }
    int nvars() const { return static_cast<int>(vars_.size()); }
    int var_index(const std::string& name) const; // -1 if absent

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rat constant_value() const; // 0 for the zero polynomial; requires is_constant
    Rat coeff(const MultiIndex& a) const;
    int total_degree() const; // -1 for the zero polynomial
    int degree_in(int var) const;

    Polynomial operator+(const Polynomial&) const;
    Polynomial operator-(const Polynomial&) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial&) const;
    Polynomial operator*(const Rat&) const;
    Polynomial pow(unsigned e) const;

    Polynomial derive(int var) const;
    Rat eval(std::span<const Rat> point) const;

    // Evaluate a subset of variables, keeping the rest symbolic. The result
    // lives over `keep_vars` (which must cover every variable not bound).
    Polynomial eval_partial(const std::map<std::string, Rat>& bind,
                            std::vector<std::string> keep_vars) const;

    // Re-express over a variable superset (matched by name).
    Polynomial extended(const std::vector<std::string>& new_vars) const;

    bool operator==(const Polynomial&) const = default;

    // Canonical printing in term order; re-parses to an equal value.
    std::string str() const;

    // Used by normalization: coefficient of the largest term in map order.
    const Rat& leading_coeff() const;

    void add_term(const MultiIndex& a, const Rat& c); // building block, collects + drops zeros

private:
    std::vector<std::string> vars_;
    Terms terms_;
};

Polynomial operator*(const Rat& c, const Polynomial& p);

} // namespace tresse

#endif
