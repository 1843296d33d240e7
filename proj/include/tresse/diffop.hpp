#ifndef TRESSE_DIFFOP_HPP
#define TRESSE_DIFFOP_HPP

#include "tresse/form.hpp"
#include "tresse/linalg.hpp"
#include "tresse/point.hpp"
#include "tresse/rational_function.hpp"

#include <map>
#include <string>
#include <vector>

namespace tresse {

// Linear scalar differential operator  A = sum_{|alpha| <= k} A_alpha d^alpha.
// The first `dim` variables are the geometric coordinates being
// differentiated; any further variables (a spectral parameter u, a shift
// parameter, ...) ride along inside the coefficients.
class LinearDiffOp {
public:
    LinearDiffOp(std::vector<std::string> vars, int dim, int order,
                 std::map<MultiIndex, RationalFunction> coeffs);

    static LinearDiffOp zero(std::vector<std::string> vars, int dim, int order);
    static LinearDiffOp identity(std::vector<std::string> vars, int dim);

    const std::vector<std::string>& vars() const { return vars_; }
    int dim() const { return dim_; }
    int order() const { return order_; } // declared bound
    int effective_order() const;         // max |alpha| with nonzero coefficient, -1 if zero
    const std::map<MultiIndex, RationalFunction>& coeffs() const { return coeffs_; }
    RationalFunction coeff(const MultiIndex& alpha) const;

    LinearDiffOp operator+(const LinearDiffOp&) const;
    LinearDiffOp operator-(const LinearDiffOp&) const;
    LinearDiffOp scaled(const RationalFunction& g) const;
    LinearDiffOp with_order(int k) const; // reinterpret at level k >= effective order

    bool operator==(const LinearDiffOp&) const;

private:
    std::vector<std::string> vars_;
    int dim_;
    int order_;
    std::map<MultiIndex, RationalFunction> coeffs_;
};

RationalFunction apply_op(const LinearDiffOp& A, const RationalFunction& f);

// A after B: apply_op(compose(A,B), f) == apply_op(A, apply_op(B, f)).
LinearDiffOp compose(const LinearDiffOp& A, const LinearDiffOp& B);

// Top-order coefficients; a k-symmetric contravariant tensor field.
class SymbolField {
public:
    SymbolField(std::vector<std::string> vars, int dim, int k,
                std::map<MultiIndex, RationalFunction> coeffs);
    const std::vector<std::string>& vars() const { return vars_; }
    int dim() const { return dim_; }
    int k() const { return k_; }
    const std::map<MultiIndex, RationalFunction>& coeffs() const { return coeffs_; }
    RationalFunction coeff(const MultiIndex& alpha) const;
    bool is_zero() const { return coeffs_.empty(); }

private:
    std::vector<std::string> vars_;
    int dim_, k_;
    std::map<MultiIndex, RationalFunction> coeffs_;
};

SymbolField symbol(const LinearDiffOp& A);            // at the declared order
SymbolField symbol_at(const LinearDiffOp& A, int k);  // k >= effective_order(A)

// The fibre form at an exact point: monomial x^alpha carries the plain
// coefficient value u_alpha(p) (no factorial weighting).
NAryForm symbol_form_at(const SymbolField& s, const Point& p);

// Symbolic variant with cleared denominators: returns (F, D) with the true
// symbol form equal to F / D; F's form variables are fresh "_z1..",
// parameters are the operator's variables; D is a polynomial in those.
std::pair<NAryForm, Polynomial> symbol_form_cleared(const SymbolField& s);

// Exactly invertible polynomial diffeomorphism: affine maps, triangular maps
// y_i = c_i x_i + p_i(x_1..x_{i-1}), and their compositions. Forward and
// inverse are stored and the round trip is validated at construction.
class DiffMap {
public:
    static DiffMap affine(std::vector<std::string> vars, const std::vector<std::vector<Rat>>& m,
                          const std::vector<Rat>& b);
    static DiffMap triangular(std::vector<std::string> vars, const std::vector<Rat>& scale,
                              const std::vector<Polynomial>& shift);
    static DiffMap identity(std::vector<std::string> vars);
    static DiffMap compose(const DiffMap& outer, const DiffMap& inner);
    DiffMap inverse() const;

    int n() const { return static_cast<int>(vars_.size()); }
    const std::vector<std::string>& vars() const { return vars_; }
    const std::vector<Polynomial>& forward() const { return forward_; }
    const std::vector<Polynomial>& inverse_polys() const { return inverse_; }

    std::vector<Rat> apply(const std::vector<Rat>& x) const;
    std::vector<Rat> apply_inverse(const std::vector<Rat>& y) const;

    // Substitution maps over a variable superset; extra variables map to
    // themselves (this is the phi^(0) extension used for parameters).
    SubstMap forward_subst(const std::vector<std::string>& target_vars) const;
    SubstMap inverse_subst(const std::vector<std::string>& target_vars) const;

private:
    DiffMap(std::vector<std::string> vars, std::vector<Polynomial> fwd, std::vector<Polynomial> inv);
    void validate() const;
    std::vector<std::string> vars_;
    std::vector<Polynomial> forward_, inverse_;
};

DiffMap invert_map(const DiffMap& phi);

// (phi_* A)(g) = A(g o phi) o phi^{-1}; parameters of A are untouched.
LinearDiffOp pushforward(const LinearDiffOp& A, const DiffMap& phi);

} // namespace tresse

#endif
