#ifndef TRESSE_TESTS_UTIL_HPP
#define TRESSE_TESTS_UTIL_HPP

#include "tresse/diffop.hpp"
#include "tresse/form.hpp"

#include <random>
#include <vector>

namespace tresse::testing {

inline std::vector<std::string> vars_xy() { return {"x", "y"}; }
inline std::vector<std::string> vars_xyz() { return {"x", "y", "z"}; }

inline int rand_int(std::mt19937_64& g, int lo, int hi) {
    return lo + static_cast<int>(g() % static_cast<std::uint64_t>(hi - lo + 1));
}

// random homogeneous form with integer coefficients in [lo, hi]
inline NAryForm random_form(std::mt19937_64& g, int n, int degree, int lo = -9, int hi = 9) {
    std::vector<std::string> vars = n == 2 ? vars_xy() : vars_xyz();
    Polynomial p(vars);
    for (const auto& a : MultiIndex::all_of_degree(n, degree))
        p.add_term(a, Rat(rand_int(g, lo, hi)));
    return NAryForm(n, degree, std::move(p));
}

// random product of <= max_factors elementary integer matrices (det = 1)
inline std::vector<std::vector<Rat>> random_sl(std::mt19937_64& g, int n, int max_factors = 8) {
    std::vector<std::vector<Rat>> m(static_cast<std::size_t>(n), std::vector<Rat>(static_cast<std::size_t>(n), Rat(0)));
    for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    int f = 1 + rand_int(g, 0, max_factors - 1);
    for (int t = 0; t < f; ++t) {
        int i = rand_int(g, 0, n - 1), j = rand_int(g, 0, n - 1);
        if (i == j) continue;
        Rat c(rand_int(g, -3, 3));
        // right-multiply by E_{ij}(c): column j += c * column i
        for (int r = 0; r < n; ++r)
            m[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] +=
                c * m[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)];
    }
    return m;
}

// random invertible rational matrix (resamples until the determinant is nonzero)
inline std::vector<std::vector<Rat>> random_gl(std::mt19937_64& g, int n) {
    for (;;) {
        std::vector<std::vector<Rat>> m(static_cast<std::size_t>(n), std::vector<Rat>(static_cast<std::size_t>(n)));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Rat q(rand_int(g, -6, 6), 1 + rand_int(g, 0, 2));
                q.canonicalize();
                m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = q;
            }
        // determinant via elimination
        auto c = m;
        Rat det(1);
        bool ok = true;
        for (int col = 0; col < n && ok; ++col) {
            int piv = col;
            while (piv < n && c[static_cast<std::size_t>(piv)][static_cast<std::size_t>(col)] == 0) ++piv;
            if (piv == n) {
                ok = false;
                break;
            }
            if (piv != col) {
                std::swap(c[static_cast<std::size_t>(piv)], c[static_cast<std::size_t>(col)]);
                det = -det;
            }
            det *= c[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
            for (int r = col + 1; r < n; ++r) {
                if (c[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] == 0) continue;
                Rat f = c[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] /
                        c[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
                for (int cc = col; cc < n; ++cc)
                    c[static_cast<std::size_t>(r)][static_cast<std::size_t>(cc)] -=
                        f * c[static_cast<std::size_t>(col)][static_cast<std::size_t>(cc)];
            }
        }
        if (ok && det != 0) return m;
    }
}

// random polynomial (not necessarily homogeneous)
inline Polynomial random_poly(std::mt19937_64& g, const std::vector<std::string>& vars, int max_degree,
                              int lo = -5, int hi = 5, int terms = 4) {
    Polynomial p(vars);
    const int n = static_cast<int>(vars.size());
    for (int t = 0; t < terms; ++t) {
        std::vector<int> e(static_cast<std::size_t>(n), 0);
        int budget = rand_int(g, 0, max_degree);
        for (int v = 0; v < n && budget > 0; ++v) {
            int d = rand_int(g, 0, budget);
            e[static_cast<std::size_t>(v)] = d;
            budget -= d;
        }
        p.add_term(MultiIndex(e), Rat(rand_int(g, lo, hi)));
    }
    return p;
}

// random exactly invertible map: affine (det != 0) or triangular
inline DiffMap random_diffmap(std::mt19937_64& g, const std::vector<std::string>& vars,
                              bool unimodular = false) {
    const int n = static_cast<int>(vars.size());
    if (g() % 2 == 0) {
        auto m = unimodular ? random_sl(g, n) : random_gl(g, n);
        std::vector<Rat> b(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) b[static_cast<std::size_t>(i)] = Rat(rand_int(g, -3, 3));
        return DiffMap::affine(vars, m, b);
    }
    std::vector<Rat> scale(static_cast<std::size_t>(n));
    std::vector<Polynomial> shift;
    for (int i = 0; i < n; ++i) {
        scale[static_cast<std::size_t>(i)] = unimodular ? Rat(1) : Rat(rand_int(g, 1, 3));
        Polynomial p(vars);
        if (i > 0) {
            // polynomial in variables 0..i-1 only
            for (int t = 0; t < 2; ++t) {
                std::vector<int> e(static_cast<std::size_t>(n), 0);
                for (int v = 0; v < i; ++v) e[static_cast<std::size_t>(v)] = rand_int(g, 0, 2);
                p.add_term(MultiIndex(e), Rat(rand_int(g, -2, 2)));
            }
        } else {
            p.add_term(MultiIndex::zero(n), Rat(rand_int(g, -2, 2)));
        }
        shift.push_back(std::move(p));
    }
    return DiffMap::triangular(vars, scale, shift);
}

// random linear operator with polynomial coefficients
inline LinearDiffOp random_operator(std::mt19937_64& g, const std::vector<std::string>& vars, int dim,
                                    int order, int coeff_degree = 2) {
    std::map<MultiIndex, RationalFunction> coeffs;
    for (const auto& a : MultiIndex::all_up_to(dim, order)) {
        if (a.total() < order && g() % 2 == 0) continue;
        Polynomial p = random_poly(g, vars, coeff_degree, -4, 4, 3);
        if (!p.is_zero()) coeffs.emplace(a, RationalFunction(std::move(p)));
    }
    // ensure a nonzero top coefficient
    MultiIndex top = MultiIndex::all_of_degree(dim, order).front();
    if (!coeffs.count(top))
        coeffs.emplace(top, RationalFunction::constant(vars, Rat(1 + static_cast<int>(g() % 3))));
    return LinearDiffOp(vars, dim, order, std::move(coeffs));
}

} // namespace tresse::testing

#endif
