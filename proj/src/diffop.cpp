#include "tresse/diffop.hpp"

#include "tresse/errors.hpp"

#include <algorithm>

namespace tresse {

LinearDiffOp::LinearDiffOp(std::vector<std::string> vars, int dim, int order,
                           std::map<MultiIndex, RationalFunction> coeffs)
  : vars_(std::move(vars)), dim_(dim), order_(order), coeffs_(std::move(coeffs)) {
    if (dim_ < 1 || dim_ > static_cast<int>(vars_.size()))
        throw dimension_error("operator dimension out of range");
    if (order_ < 0) throw dimension_error("operator order must be >= 0");
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
        const auto& [a, c] = *it;
        if (a.size() != dim_) throw dimension_error("coefficient multi-index has wrong length");
        if (a.total() > order_) throw dimension_error("coefficient order exceeds declared operator order");
        if (c.vars() != vars_) throw dimension_error("coefficient variable set mismatch");
        it = c.is_zero() ? coeffs_.erase(it) : std::next(it);
    }
}

LinearDiffOp LinearDiffOp::zero(std::vector<std::string> vars, int dim, int order) {
    return LinearDiffOp(std::move(vars), dim, order, {});
}

LinearDiffOp LinearDiffOp::identity(std::vector<std::string> vars, int dim) {
    std::map<MultiIndex, RationalFunction> c;
    c.emplace(MultiIndex::zero(dim), RationalFunction::constant(vars, Rat(1)));
    return LinearDiffOp(std::move(vars), dim, 0, std::move(c));
}

int LinearDiffOp::effective_order() const {
    int k = -1;
    for (const auto& [a, c] : coeffs_) k = std::max(k, a.total());
    return k;
}

RationalFunction LinearDiffOp::coeff(const MultiIndex& alpha) const {
    auto it = coeffs_.find(alpha);
    return it == coeffs_.end() ? RationalFunction::constant(vars_, Rat(0)) : it->second;
}

LinearDiffOp LinearDiffOp::operator+(const LinearDiffOp& o) const {
    if (vars_ != o.vars_ || dim_ != o.dim_) throw dimension_error("operator shape mismatch in +");
    auto coeffs = coeffs_;
    for (const auto& [a, c] : o.coeffs_) {
        auto [it, fresh] = coeffs.try_emplace(a, c);
        if (!fresh) it->second = it->second + c;
    }
    return LinearDiffOp(vars_, dim_, std::max(order_, o.order_), std::move(coeffs));
}

LinearDiffOp LinearDiffOp::operator-(const LinearDiffOp& o) const {
    return *this + o.scaled(RationalFunction::constant(o.vars_, Rat(-1)));
}

LinearDiffOp LinearDiffOp::scaled(const RationalFunction& g) const {
    if (g.vars() != vars_) throw dimension_error("scale factor variable set mismatch");
    auto coeffs = coeffs_;
    for (auto& [a, c] : coeffs) c = c * g;
    return LinearDiffOp(vars_, dim_, order_, std::move(coeffs));
}

LinearDiffOp LinearDiffOp::with_order(int k) const {
    if (k < effective_order()) throw dimension_error("cannot lower declared order below effective order");
    return LinearDiffOp(vars_, dim_, k, coeffs_);
}

bool LinearDiffOp::operator==(const LinearDiffOp& o) const {
    if (vars_ != o.vars_ || dim_ != o.dim_) return false;
    for (const auto& [a, c] : coeffs_)
        if (!(o.coeff(a) == c)) return false;
    for (const auto& [a, c] : o.coeffs_)
        if (!(coeff(a) == c)) return false;
    return true;
}

namespace {

// Memoized iterated partial derivatives of f, keyed by the derivative
// multi-index over the geometric variables.
class DerivativeCache {
public:
    DerivativeCache(const RationalFunction& f, int dim) {
        cache_.emplace(MultiIndex::zero(dim), f);
    }

    const RationalFunction& get(const MultiIndex& alpha) {
        auto it = cache_.find(alpha);
        if (it != cache_.end()) return it->second;
        int i = 0;
        while (alpha[i] == 0) ++i;
        RationalFunction d = get(alpha.minus(i)).derive(i);
        return cache_.emplace(alpha, std::move(d)).first->second;
    }

private:
    std::map<MultiIndex, RationalFunction> cache_;
};

} // namespace

RationalFunction apply_op(const LinearDiffOp& A, const RationalFunction& f) {
    if (f.vars() != A.vars()) throw dimension_error("apply_op: function variable set mismatch");
    DerivativeCache d(f, A.dim());
    RationalFunction s = RationalFunction::constant(A.vars(), Rat(0));
    for (const auto& [a, c] : A.coeffs()) s = s + c * d.get(a);
    return s;
}

LinearDiffOp compose(const LinearDiffOp& A, const LinearDiffOp& B) {
    if (A.vars() != B.vars() || A.dim() != B.dim())
        throw dimension_error("compose: operator shape mismatch");
    std::map<MultiIndex, RationalFunction> out;
    auto add = [&](const MultiIndex& a, const RationalFunction& c) {
        auto [it, fresh] = out.try_emplace(a, c);
        if (!fresh) it->second = it->second + c;
    };
    // A o B = sum_{a,b} A_a sum_{g <= a} C(a,g) (d^g B_b) d^{a-g+b}
    for (const auto& [b, cb] : B.coeffs()) {
        DerivativeCache db(cb, B.dim());
        for (const auto& [a, ca] : A.coeffs()) {
            // enumerate g <= a componentwise
            std::vector<int> g(static_cast<std::size_t>(a.size()), 0);
            for (;;) {
                MultiIndex gi(g);
                const RationalFunction& dgb = db.get(gi);
                if (!dgb.is_zero())
                    add(a - gi + b, ca * dgb * Rat(MultiIndex::binomial(a, gi)));
                int i = 0;
                while (i < a.size()) {
                    if (g[static_cast<std::size_t>(i)] < a[i]) {
                        ++g[static_cast<std::size_t>(i)];
                        std::fill(g.begin(), g.begin() + i, 0);
                        break;
                    }
                    ++i;
                }
                if (i == a.size()) break;
            }
        }
    }
    return LinearDiffOp(A.vars(), A.dim(), A.order() + B.order(), std::move(out));
}

SymbolField::SymbolField(std::vector<std::string> vars, int dim, int k,
                         std::map<MultiIndex, RationalFunction> coeffs)
  : vars_(std::move(vars)), dim_(dim), k_(k), coeffs_(std::move(coeffs)) {
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
        const auto& [a, c] = *it;
        if (a.size() != dim_ || a.total() != k_)
            throw dimension_error("symbol coefficient is not top-order");
        it = c.is_zero() ? coeffs_.erase(it) : std::next(it);
    }
}

RationalFunction SymbolField::coeff(const MultiIndex& alpha) const {
    auto it = coeffs_.find(alpha);
    return it == coeffs_.end() ? RationalFunction::constant(vars_, Rat(0)) : it->second;
}

SymbolField symbol(const LinearDiffOp& A) {
    return symbol_at(A, A.order());
}

SymbolField symbol_at(const LinearDiffOp& A, int k) {
    if (k < A.effective_order())
        throw dimension_error("symbol level below the operator's effective order");
    std::map<MultiIndex, RationalFunction> top;
    for (const auto& [a, c] : A.coeffs())
        if (a.total() == k) top.emplace(a, c);
    return SymbolField(A.vars(), A.dim(), k, std::move(top));
}

static std::vector<std::string> fibre_var_names(int n, bool internal) {
    std::vector<std::string> v;
    if (!internal && n <= 3) {
        const char* names[] = {"x", "y", "z"};
        for (int i = 0; i < n; ++i) v.emplace_back(names[i]);
    } else {
        for (int i = 0; i < n; ++i)
            v.push_back((internal ? "_z" : "x") + std::to_string(i + 1));
    }
    return v;
}

NAryForm symbol_form_at(const SymbolField& s, const Point& p) {
    std::vector<Rat> coords = p.as_rats();
    if (static_cast<int>(coords.size()) != static_cast<int>(s.vars().size()))
        throw dimension_error("symbol_form_at: point has wrong dimension");
    std::vector<std::string> fv = fibre_var_names(s.dim(), false);
    Polynomial poly(fv);
    for (const auto& [a, c] : s.coeffs()) poly.add_term(a, c.eval(coords));
    return NAryForm(s.dim(), s.k(), std::move(poly));
}

std::pair<NAryForm, Polynomial> symbol_form_cleared(const SymbolField& s) {
    std::vector<std::string> fv = fibre_var_names(s.dim(), true);
    std::vector<std::string> all = fv;
    all.insert(all.end(), s.vars().begin(), s.vars().end());
    Polynomial d = Polynomial::constant(s.vars(), Rat(1));
    for (const auto& [a, c] : s.coeffs()) d = d * c.den();
    Polynomial poly(all);
    for (const auto& [a, c] : s.coeffs()) {
        // c = num/den; cleared coefficient = num * (d / den)
        Polynomial rest = Polynomial::constant(s.vars(), Rat(1));
        for (const auto& [b, cc] : s.coeffs())
            if (!(b == a)) rest = rest * cc.den();
        Polynomial cleared = c.num() * rest;
        std::vector<int> e(all.size(), 0);
        for (int i = 0; i < s.dim(); ++i) e[static_cast<std::size_t>(i)] = a[i];
        Polynomial placed(all);
        placed.add_term(MultiIndex(e), Rat(1));
        poly = poly + placed * cleared.extended(all);
    }
    return {NAryForm(s.dim(), s.k(), std::move(poly)), d};
}

DiffMap::DiffMap(std::vector<std::string> vars, std::vector<Polynomial> fwd, std::vector<Polynomial> inv)
  : vars_(std::move(vars)), forward_(std::move(fwd)), inverse_(std::move(inv)) {
    validate();
}

void DiffMap::validate() const {
    const int n = this->n();
    if (static_cast<int>(forward_.size()) != n || static_cast<int>(inverse_.size()) != n)
        throw dimension_error("diffeomorphism component count mismatch");
    SubstMap fwd, inv;
    for (int i = 0; i < n; ++i) {
        fwd.emplace(vars_[static_cast<std::size_t>(i)], RationalFunction(forward_[static_cast<std::size_t>(i)]));
        inv.emplace(vars_[static_cast<std::size_t>(i)], RationalFunction(inverse_[static_cast<std::size_t>(i)]));
    }
    for (int i = 0; i < n; ++i) {
        RationalFunction a = substitute(forward_[static_cast<std::size_t>(i)], vars_, inv);
        RationalFunction b = substitute(inverse_[static_cast<std::size_t>(i)], vars_, fwd);
        RationalFunction xi = RationalFunction::variable(vars_, i);
        if (a != xi || b != xi)
            throw dimension_error("forward/inverse are not exact inverses of each other");
    }
}

DiffMap DiffMap::affine(std::vector<std::string> vars, const std::vector<std::vector<Rat>>& m,
                        const std::vector<Rat>& b) {
    const int n = static_cast<int>(vars.size());
    if (static_cast<int>(m.size()) != n || static_cast<int>(b.size()) != n)
        throw dimension_error("affine map shape mismatch");
    std::vector<std::vector<Rat>> minv = invert_rat_matrix(m); // throws singular_matrix_error
    std::vector<Polynomial> fwd, inv;
    for (int i = 0; i < n; ++i) {
        Polynomial f = Polynomial::constant(vars, b[static_cast<std::size_t>(i)]);
        Polynomial g(vars);
        Rat shift(0);
        for (int j = 0; j < n; ++j) {
            f = f + Polynomial::variable(vars, j) * m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            g = g + Polynomial::variable(vars, j) * minv[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            shift += minv[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * b[static_cast<std::size_t>(j)];
        }
        g = g + Polynomial::constant(vars, -shift);
        fwd.push_back(std::move(f));
        inv.push_back(std::move(g));
    }
    return DiffMap(std::move(vars), std::move(fwd), std::move(inv));
}

DiffMap DiffMap::triangular(std::vector<std::string> vars, const std::vector<Rat>& scale,
                            const std::vector<Polynomial>& shift) {
    const int n = static_cast<int>(vars.size());
    if (static_cast<int>(scale.size()) != n || static_cast<int>(shift.size()) != n)
        throw dimension_error("triangular map shape mismatch");
    std::vector<Polynomial> fwd;
    for (int i = 0; i < n; ++i) {
        if (scale[static_cast<std::size_t>(i)] == 0)
            throw singular_matrix_error("triangular map has zero diagonal scale");
        const Polynomial& p = shift[static_cast<std::size_t>(i)];
        if (p.vars() != vars) throw dimension_error("triangular shift variable set mismatch");
        for (int j = i; j < n; ++j)
            if (p.degree_in(j) > 0)
                throw dimension_error("triangular shift " + std::to_string(i) +
                                      " must depend only on earlier variables");
        fwd.push_back(Polynomial::variable(vars, i) * scale[static_cast<std::size_t>(i)] + p);
    }
    // back-substitution: x_i = (y_i - p_i(x_1..x_{i-1})) / c_i
    std::vector<Polynomial> inv;
    SubstMap prev;
    for (int i = 0; i < n; ++i) {
        SubstMap m = prev;
        for (int j = i; j < n; ++j)
            m.emplace(vars[static_cast<std::size_t>(j)], RationalFunction::variable(vars, j));
        RationalFunction pi = substitute(shift[static_cast<std::size_t>(i)], vars, m);
        RationalFunction xi = (RationalFunction::variable(vars, i) - pi) *
                              Rat(1 / scale[static_cast<std::size_t>(i)]);
        inv.push_back(xi.as_polynomial());
        prev.insert_or_assign(vars[static_cast<std::size_t>(i)], xi);
    }
    return DiffMap(std::move(vars), std::move(fwd), std::move(inv));
}

DiffMap DiffMap::identity(std::vector<std::string> vars) {
    std::vector<Polynomial> id;
    for (int i = 0; i < static_cast<int>(vars.size()); ++i) id.push_back(Polynomial::variable(vars, i));
    return DiffMap(std::move(vars), id, id);
}

DiffMap DiffMap::compose(const DiffMap& outer, const DiffMap& inner) {
    if (outer.vars_ != inner.vars_) throw dimension_error("compose: variable set mismatch");
    const auto& vars = outer.vars_;
    SubstMap innerf, outeri;
    for (int i = 0; i < outer.n(); ++i) {
        innerf.emplace(vars[static_cast<std::size_t>(i)], RationalFunction(inner.forward_[static_cast<std::size_t>(i)]));
        outeri.emplace(vars[static_cast<std::size_t>(i)], RationalFunction(outer.inverse_[static_cast<std::size_t>(i)]));
    }
    std::vector<Polynomial> fwd, inv;
    for (int i = 0; i < outer.n(); ++i) {
        fwd.push_back(substitute(outer.forward_[static_cast<std::size_t>(i)], vars, innerf).as_polynomial());
        inv.push_back(substitute(inner.inverse_[static_cast<std::size_t>(i)], vars, outeri).as_polynomial());
    }
    return DiffMap(vars, std::move(fwd), std::move(inv));
}

DiffMap DiffMap::inverse() const {
    return DiffMap(vars_, inverse_, forward_);
}

DiffMap invert_map(const DiffMap& phi) {
    return phi.inverse();
}

std::vector<Rat> DiffMap::apply(const std::vector<Rat>& x) const {
    std::vector<Rat> y;
    y.reserve(forward_.size());
    for (const auto& f : forward_) y.push_back(f.eval(x));
    return y;
}

std::vector<Rat> DiffMap::apply_inverse(const std::vector<Rat>& y) const {
    std::vector<Rat> x;
    x.reserve(inverse_.size());
    for (const auto& f : inverse_) x.push_back(f.eval(y));
    return x;
}

static SubstMap component_subst(const std::vector<std::string>& map_vars,
                                const std::vector<Polynomial>& components,
                                const std::vector<std::string>& target_vars) {
    SubstMap m;
    for (std::size_t i = 0; i < map_vars.size(); ++i)
        m.emplace(map_vars[i], RationalFunction(components[i].extended(target_vars)));
    for (std::size_t i = 0; i < target_vars.size(); ++i)
        if (!m.count(target_vars[i]))
            m.emplace(target_vars[i], RationalFunction::variable(target_vars, static_cast<int>(i)));
    return m;
}

SubstMap DiffMap::forward_subst(const std::vector<std::string>& target_vars) const {
    return component_subst(vars_, forward_, target_vars);
}

SubstMap DiffMap::inverse_subst(const std::vector<std::string>& target_vars) const {
    return component_subst(vars_, inverse_, target_vars);
}

LinearDiffOp pushforward(const LinearDiffOp& A, const DiffMap& phi) {
    const int n = A.dim();
    if (phi.n() != n) throw dimension_error("pushforward: map dimension mismatch");
    for (int i = 0; i < n; ++i)
        if (phi.vars()[static_cast<std::size_t>(i)] != A.vars()[static_cast<std::size_t>(i)])
            throw dimension_error("pushforward: map variables must match the operator's geometric variables");
    const auto& vars = A.vars();
    SubstMap inv = phi.inverse_subst(vars);

    // first-order images D_i = sum_j (dphi_j/dx_i o phi^{-1}) d_j
    std::vector<LinearDiffOp> d;
    d.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        std::map<MultiIndex, RationalFunction> c;
        for (int j = 0; j < n; ++j) {
            Polynomial jac = phi.forward()[static_cast<std::size_t>(j)].derive(i);
            RationalFunction entry = substitute(jac.extended(vars), vars, inv);
            if (!entry.is_zero()) c.emplace(MultiIndex::unit(n, j), entry);
        }
        d.push_back(LinearDiffOp(vars, n, 1, std::move(c)));
    }

    std::map<MultiIndex, LinearDiffOp> images;
    images.emplace(MultiIndex::zero(n), LinearDiffOp::identity(vars, n));
    LinearDiffOp out = LinearDiffOp::zero(vars, n, A.order());
    for (const MultiIndex& a : MultiIndex::all_up_to(n, A.order())) {
        if (a.total() > 0) {
            int i = 0;
            while (a[i] == 0) ++i;
            images.emplace(a, compose(d[static_cast<std::size_t>(i)], images.at(a.minus(i))));
        }
        RationalFunction ca = A.coeff(a);
        if (ca.is_zero()) continue;
        RationalFunction moved = substitute(ca, vars, inv);
        out = out + images.at(a).scaled(moved).with_order(A.order());
    }
    return out.with_order(A.order());
}

} // namespace tresse
