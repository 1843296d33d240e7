#include "tresse/polynomial.hpp"

#include "tresse/errors.hpp"

#include <algorithm>
#include <sstream>

namespace tresse {

Polynomial::Polynomial(std::vector<std::string> vars) : vars_(std::move(vars)) {}

Polynomial Polynomial::constant(std::vector<std::string> vars, const Rat& c) {
    Polynomial p(std::move(vars));
    if (c != 0) p.terms_.emplace(MultiIndex::zero(p.nvars()), c);
    return p;
}

Polynomial Polynomial::variable(std::vector<std::string> vars, int i) {
    Polynomial p(std::move(vars));
    if (i < 0 || i >= p.nvars()) throw dimension_error("variable index out of range");
    p.terms_.emplace(MultiIndex::unit(p.nvars(), i), Rat(1));
    return p;
}

Polynomial Polynomial::monomial(std::vector<std::string> vars, const MultiIndex& a, const Rat& c) {
    Polynomial p(std::move(vars));
    if (a.size() != p.nvars()) throw dimension_error("monomial exponent length mismatch");
    if (c != 0) p.terms_.emplace(a, c);
    return p;
}

int Polynomial::var_index(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    return it == vars_.end() ? -1 : static_cast<int>(it - vars_.begin());
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.total() == 0);
}

Rat Polynomial::constant_value() const {
    if (terms_.empty()) return Rat(0);
    if (!is_constant()) throw dimension_error("polynomial is not constant: " + str());
    return terms_.begin()->second;
}

Rat Polynomial::coeff(const MultiIndex& a) const {
    auto it = terms_.find(a);
    return it == terms_.end() ? Rat(0) : it->second;
}

int Polynomial::total_degree() const {
    int d = -1;
    for (const auto& [a, c] : terms_) d = std::max(d, a.total());
    return d;
}

int Polynomial::degree_in(int var) const {
    int d = -1;
    for (const auto& [a, c] : terms_) d = std::max(d, a[var]);
    return d;
}

void Polynomial::add_term(const MultiIndex& a, const Rat& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(a, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

static void check_same_vars(const Polynomial& a, const Polynomial& b) {
    if (a.vars() != b.vars())
        throw dimension_error("polynomial variable sets differ");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_same_vars(*this, o);
    Polynomial r = *this;
    for (const auto& [a, c] : o.terms_) r.add_term(a, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    check_same_vars(*this, o);
    Polynomial r = *this;
    for (const auto& [a, c] : o.terms_) r.add_term(a, -c);
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(vars_);
    for (const auto& [a, c] : terms_) r.terms_.emplace(a, -c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_same_vars(*this, o);
    Polynomial r(vars_);
    for (const auto& [a, ca] : terms_)
        for (const auto& [b, cb] : o.terms_) r.add_term(a + b, ca * cb);
    return r;
}

Polynomial Polynomial::operator*(const Rat& c) const {
    if (c == 0) return Polynomial(vars_);
    Polynomial r(vars_);
    for (const auto& [a, ca] : terms_) r.terms_.emplace(a, ca * c);
    return r;
}

Polynomial operator*(const Rat& c, const Polynomial& p) {
    return p * c;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial r = Polynomial::constant(vars_, Rat(1));
    Polynomial base = *this;
    while (e) {
        if (e & 1u) r = r * base;
        base = (e >>= 1u) ? base * base : base;
    }
    return r;
}

Polynomial Polynomial::derive(int var) const {
    if (var < 0 || var >= nvars()) throw dimension_error("derivative variable index out of range");
    Polynomial r(vars_);
    for (const auto& [a, c] : terms_) {
        int e = a[var];
        if (e == 0) continue;
        r.terms_.emplace(a.minus(var), c * e);
    }
    return r;
}

Rat Polynomial::eval(std::span<const Rat> point) const {
    if (static_cast<int>(point.size()) != nvars())
        throw dimension_error("evaluation point has wrong dimension");
    // power tables per variable
    std::vector<std::vector<Rat>> pw(static_cast<std::size_t>(nvars()));
    for (int v = 0; v < nvars(); ++v) {
        int d = degree_in(v);
        auto& t = pw[static_cast<std::size_t>(v)];
        t.resize(static_cast<std::size_t>(std::max(d, 0)) + 1);
        t[0] = 1;
        for (int e = 1; e <= d; ++e) t[static_cast<std::size_t>(e)] = t[static_cast<std::size_t>(e - 1)] * point[static_cast<std::size_t>(v)];
    }
    Rat s(0);
    for (const auto& [a, c] : terms_) {
        Rat m = c;
        for (int v = 0; v < nvars(); ++v)
            if (a[v] > 0) m *= pw[static_cast<std::size_t>(v)][static_cast<std::size_t>(a[v])];
        s += m;
    }
    return s;
}

Polynomial Polynomial::eval_partial(const std::map<std::string, Rat>& bind,
                                    std::vector<std::string> keep_vars) const {
    Polynomial out(keep_vars);
    std::vector<int> target(static_cast<std::size_t>(nvars()), -1); // index into keep_vars, -1 = bound
    std::vector<Rat> value(static_cast<std::size_t>(nvars()));
    for (int v = 0; v < nvars(); ++v) {
        auto it = bind.find(vars_[static_cast<std::size_t>(v)]);
        if (it != bind.end()) {
            value[static_cast<std::size_t>(v)] = it->second;
        } else {
            int idx = out.var_index(vars_[static_cast<std::size_t>(v)]);
            if (idx < 0) throw dimension_error("eval_partial: unbound variable " + vars_[static_cast<std::size_t>(v)] + " not kept");
            target[static_cast<std::size_t>(v)] = idx;
        }
    }
    for (const auto& [a, c] : terms_) {
        Rat m = c;
        std::vector<int> e(keep_vars.size(), 0);
        for (int v = 0; v < nvars(); ++v) {
            if (target[static_cast<std::size_t>(v)] >= 0) {
                e[static_cast<std::size_t>(target[static_cast<std::size_t>(v)])] += a[v];
            } else {
                for (int k = 0; k < a[v]; ++k) m *= value[static_cast<std::size_t>(v)];
            }
        }
        out.add_term(MultiIndex(std::move(e)), m);
    }
    return out;
}

Polynomial Polynomial::extended(const std::vector<std::string>& new_vars) const {
    Polynomial out(new_vars);
    std::vector<int> target(static_cast<std::size_t>(nvars()));
    for (int v = 0; v < nvars(); ++v) {
        int idx = out.var_index(vars_[static_cast<std::size_t>(v)]);
        if (idx < 0) throw dimension_error("extended: variable " + vars_[static_cast<std::size_t>(v)] + " missing from new set");
        target[static_cast<std::size_t>(v)] = idx;
    }
    for (const auto& [a, c] : terms_) {
        std::vector<int> e(new_vars.size(), 0);
        for (int v = 0; v < nvars(); ++v) e[static_cast<std::size_t>(target[static_cast<std::size_t>(v)])] = a[v];
        out.terms_.emplace(MultiIndex(std::move(e)), c);
    }
    return out;
}

const Rat& Polynomial::leading_coeff() const {
    if (terms_.empty()) throw dimension_error("zero polynomial has no leading coefficient");
    return terms_.rbegin()->second;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [a, c] : terms_) {
        Rat mag = c < 0 ? Rat(-c) : c;
        if (first) {
            if (c < 0) os << '-';
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool has_var = a.total() > 0;
        bool wrote = false;
        if (!has_var || mag != 1) {
            os << rat_to_string(mag);
            wrote = true;
        }
        for (int v = 0; v < nvars(); ++v) {
            if (a[v] == 0) continue;
            if (wrote) os << '*';
            os << vars_[static_cast<std::size_t>(v)];
            if (a[v] > 1) os << '^' << a[v];
            wrote = true;
        }
    }
    return os.str();
}

} // namespace tresse
