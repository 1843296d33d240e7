#include "tresse/form.hpp"

#include "tresse/errors.hpp"

#include <algorithm>

namespace tresse {

NAryForm::NAryForm(int n, int degree, Polynomial poly)
  : n_(n), degree_(degree), poly_(std::move(poly)) {
    if (n_ < 1) throw dimension_error("form dimension must be >= 1");
    if (degree_ < 0) throw dimension_error("form degree must be >= 0");
    if (poly_.nvars() < n_) throw dimension_error("form polynomial has fewer variables than its dimension");
    for (const auto& [a, c] : poly_.terms()) {
        int d = 0;
        for (int i = 0; i < n_; ++i) d += a[i];
        if (d != degree_)
            throw dimension_error("form is not homogeneous of degree " + std::to_string(degree_) +
                                  ": found form-degree " + std::to_string(d) + " term");
    }
}

NAryForm NAryForm::zero(int n, int degree, std::vector<std::string> vars) {
    return NAryForm(n, degree, Polynomial(std::move(vars)));
}

std::vector<std::string> NAryForm::form_vars() const {
    return {poly_.vars().begin(), poly_.vars().begin() + n_};
}

std::vector<std::string> NAryForm::param_vars() const {
    return {poly_.vars().begin() + n_, poly_.vars().end()};
}

Polynomial NAryForm::coeff(const MultiIndex& alpha) const {
    if (alpha.size() != n_) throw dimension_error("coefficient multi-index has wrong length");
    Polynomial out(param_vars());
    const int np = param_count();
    for (const auto& [a, c] : poly_.terms()) {
        bool match = true;
        for (int i = 0; i < n_; ++i)
            if (a[i] != alpha[i]) {
                match = false;
                break;
            }
        if (!match) continue;
        std::vector<int> e(static_cast<std::size_t>(np));
        for (int i = 0; i < np; ++i) e[static_cast<std::size_t>(i)] = a[n_ + i];
        out.add_term(MultiIndex(std::move(e)), c);
    }
    return out;
}

Rat NAryForm::coeff_value(const MultiIndex& alpha) const {
    return coeff(alpha).constant_value();
}

Rat NAryForm::scalar_value() const {
    if (poly_.is_zero()) return Rat(0);
    if (degree_ != 0) throw dimension_error("form has positive degree, not a scalar");
    if (param_count() != 0) throw dimension_error("form carries parameters, not a scalar");
    return poly_.constant_value();
}

NAryForm NAryForm::substituted(const std::vector<std::vector<Rat>>& g) const {
    if (static_cast<int>(g.size()) != n_) throw dimension_error("substitution matrix has wrong size");
    const auto& vars = poly_.vars();
    SubstMap m;
    for (int i = 0; i < n_; ++i) {
        if (static_cast<int>(g[static_cast<std::size_t>(i)].size()) != n_)
            throw dimension_error("substitution matrix has wrong size");
        Polynomial row(vars);
        for (int j = 0; j < n_; ++j)
            row = row + Polynomial::variable(vars, j) * g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        m.emplace(vars[static_cast<std::size_t>(i)], RationalFunction(row));
    }
    for (int p = n_; p < poly_.nvars(); ++p)
        m.emplace(vars[static_cast<std::size_t>(p)], RationalFunction::variable(vars, p));
    Polynomial composed = substitute(poly_, vars, m).as_polynomial();
    return NAryForm(n_, degree_, std::move(composed));
}

TensorProduct::TensorProduct(const std::vector<NAryForm>& factors) {
    if (factors.empty()) throw dimension_error("tensor product needs at least one factor");
    n_ = static_cast<int>(factors.size());
    for (const auto& f : factors) {
        if (f.n() != n_)
            throw dimension_error("tensor product requires exactly n factors of dimension n");
        if (f.form_vars() != factors[0].form_vars() || f.param_vars() != factors[0].param_vars())
            throw dimension_error("tensor product factors live over different variables");
    }
    form_var_names_ = factors[0].form_vars();
    param_vars_ = factors[0].param_vars();
    std::vector<std::string> vars;
    vars.reserve(static_cast<std::size_t>(n_ * n_) + param_vars_.size());
    for (int g = 0; g < n_; ++g)
        for (int v = 0; v < n_; ++v)
            vars.push_back("_g" + std::to_string(g) + "_" + std::to_string(v));
    vars.insert(vars.end(), param_vars_.begin(), param_vars_.end());

    poly_ = Polynomial::constant(vars, Rat(1));
    const int np = static_cast<int>(param_vars_.size());
    for (int g = 0; g < n_; ++g) {
        group_degrees_.push_back(factors[static_cast<std::size_t>(g)].degree());
        Polynomial placed(vars);
        for (const auto& [a, c] : factors[static_cast<std::size_t>(g)].poly().terms()) {
            std::vector<int> e(vars.size(), 0);
            for (int v = 0; v < n_; ++v) e[static_cast<std::size_t>(group_var(g, v))] = a[v];
            for (int p = 0; p < np; ++p) e[static_cast<std::size_t>(n_ * n_ + p)] = a[n_ + p];
            placed.add_term(MultiIndex(std::move(e)), c);
        }
        poly_ = poly_ * placed;
    }
}

namespace {

struct Perm {
    std::vector<int> p;
    int sign;
};

std::vector<Perm> permutations_with_sign(int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
    std::vector<Perm> out;
    do {
        int inv = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (p[static_cast<std::size_t>(i)] > p[static_cast<std::size_t>(j)]) ++inv;
        out.push_back({p, (inv % 2 == 0) ? 1 : -1});
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

} // namespace

TensorProduct TensorProduct::nabla() const {
    TensorProduct out;
    out.n_ = n_;
    out.form_var_names_ = form_var_names_;
    out.param_vars_ = param_vars_;
    out.group_degrees_ = group_degrees_;
    for (int& d : out.group_degrees_) d = std::max(d - 1, 0);
    Polynomial res(poly_.vars());
    const auto perms = permutations_with_sign(n_);
    for (const auto& [a, c] : poly_.terms()) {
        for (const auto& perm : perms) {
            // differentiate group g by form variable perm[g], for every g
            Int mult = perm.sign;
            std::vector<int> e = a.entries();
            bool dead = false;
            for (int g = 0; g < n_; ++g) {
                int idx = group_var(g, perm.p[static_cast<std::size_t>(g)]);
                if (e[static_cast<std::size_t>(idx)] == 0) {
                    dead = true;
                    break;
                }
                mult *= e[static_cast<std::size_t>(idx)];
                e[static_cast<std::size_t>(idx)] -= 1;
            }
            if (dead) continue;
            res.add_term(MultiIndex(e), c * Rat(mult));
        }
    }
    out.poly_ = std::move(res);
    return out;
}

NAryForm TensorProduct::mu() const {
    std::vector<std::string> vars = form_var_names_;
    vars.insert(vars.end(), param_vars_.begin(), param_vars_.end());
    Polynomial res(vars);
    const int np = static_cast<int>(param_vars_.size());
    for (const auto& [a, c] : poly_.terms()) {
        std::vector<int> e(vars.size(), 0);
        for (int g = 0; g < n_; ++g)
            for (int v = 0; v < n_; ++v) e[static_cast<std::size_t>(v)] += a[group_var(g, v)];
        for (int p = 0; p < np; ++p) e[static_cast<std::size_t>(n_ + p)] += a[n_ * n_ + p];
        res.add_term(MultiIndex(std::move(e)), c);
    }
    int deg = 0;
    for (int d : group_degrees_) deg += d;
    return NAryForm(n_, deg, std::move(res));
}

} // namespace tresse
