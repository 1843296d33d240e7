#include "tresse/rational_function.hpp"

#include "tresse/errors.hpp"

#include <algorithm>
#include <climits>

namespace tresse {

RationalFunction::RationalFunction(Polynomial num)
  : num_(std::move(num)), den_(Polynomial::constant(num_.vars(), Rat(1))) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
  : num_(std::move(num)), den_(std::move(den)) {
    if (num_.vars() != den_.vars()) throw dimension_error("numerator/denominator variable sets differ");
    if (den_.is_zero()) throw zero_denominator_error("denominator is identically zero");
    normalize();
}

RationalFunction RationalFunction::constant(std::vector<std::string> vars, const Rat& c) {
    return RationalFunction(Polynomial::constant(std::move(vars), c));
}

RationalFunction RationalFunction::variable(std::vector<std::string> vars, int i) {
    return RationalFunction(Polynomial::variable(std::move(vars), i));
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = Polynomial::constant(num_.vars(), Rat(1));
        return;
    }
    // clear coefficient denominators, then the joint integer content
    Int lcm = 1;
    for (const auto& [a, c] : num_.terms()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
    for (const auto& [a, c] : den_.terms()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
    Int gcd = 0;
    auto fold_gcd = [&](const Polynomial& p) {
        for (const auto& [a, c] : p.terms()) {
            Int scaled = c.get_num() * (lcm / c.get_den());
            mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), scaled.get_mpz_t());
        }
    };
    fold_gcd(num_);
    fold_gcd(den_);
    Rat scale(lcm, gcd);
    scale.canonicalize();
    if (den_.leading_coeff() < 0) scale = -scale;
    if (scale != 1) {
        num_ = num_ * scale;
        den_ = den_ * scale;
    }
    // cancel the common monomial factor
    const int n = num_.nvars();
    std::vector<int> shift(static_cast<std::size_t>(n), INT_MAX);
    auto fold_min = [&](const Polynomial& p) {
        for (const auto& [a, c] : p.terms())
            for (int v = 0; v < n; ++v) shift[static_cast<std::size_t>(v)] = std::min(shift[static_cast<std::size_t>(v)], a[v]);
    };
    fold_min(num_);
    fold_min(den_);
    bool any = false;
    for (int v = 0; v < n; ++v) any = any || shift[static_cast<std::size_t>(v)] > 0;
    if (any) {
        auto shifted = [&](const Polynomial& p) {
            Polynomial r(p.vars());
            for (const auto& [a, c] : p.terms()) {
                std::vector<int> e = a.entries();
                for (int v = 0; v < n; ++v) e[static_cast<std::size_t>(v)] -= shift[static_cast<std::size_t>(v)];
                r.add_term(MultiIndex(std::move(e)), c);
            }
            return r;
        };
        num_ = shifted(num_);
        den_ = shifted(den_);
    }
}

Polynomial RationalFunction::as_polynomial() const {
    if (!is_polynomial()) throw dimension_error("rational function is not a polynomial: " + str());
    Rat d = den_.constant_value();
    return num_ * Rat(1 / d);
}

Rat RationalFunction::constant_value() const {
    if (!is_constant()) throw dimension_error("rational function is not constant: " + str());
    return num_.constant_value() / den_.constant_value();
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    if (o.is_zero()) throw zero_denominator_error("division by the zero rational function");
    return RationalFunction(num_ * o.den_, den_ * o.num_);
}

RationalFunction RationalFunction::operator*(const Rat& c) const {
    return RationalFunction(num_ * c, den_);
}

RationalFunction operator*(const Rat& c, const RationalFunction& f) {
    return f * c;
}

RationalFunction RationalFunction::pow(long e) const {
    if (e == 0) return RationalFunction::constant(vars(), Rat(1));
    if (e < 0) {
        if (is_zero()) throw zero_denominator_error("negative power of the zero function");
        return RationalFunction(den_.pow(static_cast<unsigned>(-e)), num_.pow(static_cast<unsigned>(-e)));
    }
    return RationalFunction(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)));
}

RationalFunction RationalFunction::derive(int var) const {
    Polynomial dq = den_.derive(var);
    if (dq.is_zero()) return RationalFunction(num_.derive(var), den_);
    return RationalFunction(num_.derive(var) * den_ - num_ * dq, den_ * den_);
}

Rat RationalFunction::eval(std::span<const Rat> point) const {
    Rat d = den_.eval(point);
    if (d == 0) throw pole_error("pole: denominator vanishes at the evaluation point");
    return num_.eval(point) / d;
}

bool RationalFunction::operator==(const RationalFunction& o) const {
    if (vars() != o.vars()) return false;
    return num_ * o.den_ == o.num_ * den_;
}

std::string RationalFunction::str() const {
    if (is_polynomial()) return as_polynomial().str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RationalFunction substitute(const Polynomial& f, const std::vector<std::string>& target_vars,
                            const SubstMap& m) {
    // power tables per variable
    std::vector<const RationalFunction*> arg(static_cast<std::size_t>(f.nvars()), nullptr);
    for (int v = 0; v < f.nvars(); ++v) {
        auto it = m.find(f.vars()[static_cast<std::size_t>(v)]);
        if (it == m.end()) throw dimension_error("substitute: no value for variable " + f.vars()[static_cast<std::size_t>(v)]);
        if (it->second.vars() != target_vars)
            throw dimension_error("substitute: value for " + f.vars()[static_cast<std::size_t>(v)] + " has wrong variable set");
        arg[static_cast<std::size_t>(v)] = &it->second;
    }
    std::vector<std::vector<RationalFunction>> pw(static_cast<std::size_t>(f.nvars()));
    for (int v = 0; v < f.nvars(); ++v) {
        int d = f.degree_in(v);
        auto& t = pw[static_cast<std::size_t>(v)];
        t.reserve(static_cast<std::size_t>(std::max(d, 0)) + 1);
        t.push_back(RationalFunction::constant(target_vars, Rat(1)));
        for (int e = 1; e <= d; ++e) t.push_back(t.back() * (*arg[static_cast<std::size_t>(v)]));
    }
    RationalFunction s = RationalFunction::constant(target_vars, Rat(0));
    for (const auto& [a, c] : f.terms()) {
        RationalFunction term = RationalFunction::constant(target_vars, c);
        for (int v = 0; v < f.nvars(); ++v)
            if (a[v] > 0) term = term * pw[static_cast<std::size_t>(v)][static_cast<std::size_t>(a[v])];
        s = s + term;
    }
    return s;
}

RationalFunction substitute(const RationalFunction& f, const std::vector<std::string>& target_vars,
                            const SubstMap& m) {
    RationalFunction n = substitute(f.num(), target_vars, m);
    RationalFunction d = substitute(f.den(), target_vars, m);
    if (d.is_zero()) throw zero_denominator_error("substitution makes the denominator identically zero");
    return n / d;
}

} // namespace tresse
