#include "tresse/transvectant.hpp"

#include "tresse/errors.hpp"

#include <algorithm>

namespace tresse {

NAryForm transvectant(const std::vector<NAryForm>& fs, unsigned l) {
    if (fs.empty()) throw dimension_error("transvectant needs at least one form");
    const int n = static_cast<int>(fs.size());
    int degree_sum = 0;
    bool undershoot = false;
    for (const auto& f : fs) {
        if (f.n() != n) throw dimension_error("transvectant requires n forms of dimension n");
        degree_sum += f.degree();
        if (f.degree() < static_cast<int>(l)) undershoot = true;
    }
    const int result_degree = std::max(degree_sum - n * static_cast<int>(l), 0);
    if (undershoot) {
        std::vector<std::string> vars = fs[0].form_vars();
        auto params = fs[0].param_vars();
        vars.insert(vars.end(), params.begin(), params.end());
        return NAryForm::zero(n, result_degree, std::move(vars));
    }
    TensorProduct t(fs);
    for (unsigned i = 0; i < l && !t.is_zero(); ++i) t = t.nabla();
    NAryForm r = t.mu();
    if (r.is_zero()) {
        std::vector<std::string> vars = fs[0].form_vars();
        auto params = fs[0].param_vars();
        vars.insert(vars.end(), params.begin(), params.end());
        return NAryForm::zero(n, result_degree, std::move(vars));
    }
    return r;
}

NAryForm binary_transvectant(const NAryForm& f, const NAryForm& g, unsigned l) {
    if (f.n() != 2 || g.n() != 2) throw dimension_error("binary transvectant requires binary forms");
    if (f.poly().vars() != g.poly().vars())
        throw dimension_error("binary transvectant: forms live over different variables");
    const auto& vars = f.poly().vars();
    const int result_degree = std::max(f.degree() + g.degree() - 2 * static_cast<int>(l), 0);
    if (f.degree() < static_cast<int>(l) || g.degree() < static_cast<int>(l))
        return NAryForm::zero(2, result_degree, vars);

    // precompute iterated partials
    auto partials = [&](const Polynomial& p) {
        std::vector<Polynomial> out; // out[k] = d^l p / dx^(l-k) dy^k
        Polynomial dx = p;
        for (unsigned i = 0; i < l; ++i) dx = dx.derive(0);
        out.push_back(dx);
        for (unsigned k = 1; k <= l; ++k) {
            // replace one x-derivative by a y-derivative: recompute from scratch
            Polynomial q = p;
            for (unsigned i = 0; i < l - k; ++i) q = q.derive(0);
            for (unsigned i = 0; i < k; ++i) q = q.derive(1);
            out.push_back(q);
        }
        return out;
    };
    std::vector<Polynomial> df = partials(f.poly());
    std::vector<Polynomial> dg = partials(g.poly());
    Polynomial sum(vars);
    for (unsigned k = 0; k <= l; ++k) {
        Rat c(binomial(l, k));
        if (k % 2 == 1) c = -c;
        sum = sum + df[k] * dg[l - k] * c;
    }
    return NAryForm(2, result_degree, std::move(sum));
}

Rat self_transvectant_J(const NAryForm& f) {
    std::vector<NAryForm> copies(static_cast<std::size_t>(f.n()), f);
    NAryForm r = transvectant(copies, static_cast<unsigned>(f.degree()));
    return r.scalar_value();
}

} // namespace tresse
