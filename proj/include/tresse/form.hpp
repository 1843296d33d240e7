#ifndef TRESSE_FORM_HPP
#define TRESSE_FORM_HPP

#include "tresse/polynomial.hpp"
#include "tresse/rational_function.hpp"

#include <string>
#include <vector>

namespace tresse {

// Homogeneous degree-k polynomial in n form variables. The underlying
// polynomial may carry extra parameter variables (base-point coordinates of a
// symbol field, a spectral parameter, ...); homogeneity is required in the
// form variables only, which always come first in the variable list.
class NAryForm {
public:
    NAryForm(int n, int degree, Polynomial poly);

    static NAryForm zero(int n, int degree, std::vector<std::string> vars);

    int n() const { return n_; }
    int degree() const { return degree_; }
    const Polynomial& poly() const { return poly_; }
    bool is_zero() const { return poly_.is_zero(); }

    std::vector<std::string> form_vars() const;
    std::vector<std::string> param_vars() const;
    int param_count() const { return poly_.nvars() - n_; }

    // Coefficient of the form-variable monomial x^alpha, as a polynomial in
    // the parameters (constant when there are none).
    Polynomial coeff(const MultiIndex& alpha) const;
    Rat coeff_value(const MultiIndex& alpha) const;

    // Value of a degree-0 form without parameters.
    Rat scalar_value() const;

    // f(g x): substitute x_i -> sum_j g[i][j] x_j; parameters untouched.
    NAryForm substituted(const std::vector<std::vector<Rat>>& g) const;

    bool operator==(const NAryForm&) const = default;

private:
    int n_;
    int degree_;
    Polynomial poly_;
};

// n-fold tensor product of n-ary forms, realized as a single polynomial in n
// disjoint groups of form variables plus the shared parameters. Group i
// carries factor i.
class TensorProduct {
public:
    TensorProduct(const std::vector<NAryForm>& factors);

    int n() const { return n_; }
    const Polynomial& poly() const { return poly_; }
    const std::vector<int>& group_degrees() const { return group_degrees_; }
    const std::vector<std::string>& param_vars() const { return param_vars_; }
    const std::vector<std::string>& form_var_names() const { return form_var_names_; }
    bool is_zero() const { return poly_.is_zero(); }

    int group_var(int group, int var) const { return group * n_ + var; }

    // The alternating n!-term derivation: each group loses one degree.
    TensorProduct nabla() const;

    // Multiplication map: identify all groups, keep parameters.
    NAryForm mu() const;

private:
    TensorProduct() = default;
    int n_ = 0;
    std::vector<int> group_degrees_;
    std::vector<std::string> form_var_names_; // original names, for mu()
    std::vector<std::string> param_vars_;
    Polynomial poly_;
};

} // namespace tresse

#endif
