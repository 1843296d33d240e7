#include "tresse/catalog.hpp"
#include "tresse/diffop.hpp"
#include "tresse/errors.hpp"
#include "tresse/parse.hpp"

#include "test_util.hpp"

#include <doctest.h>

using namespace tresse;

namespace {

const std::vector<std::string> V{"x1", "x2"};

RationalFunction rf(const char* s) {
    return parse_expr(s, V);
}

LinearDiffOp op(int order, std::map<std::string, std::string> coeffs) {
    std::map<MultiIndex, RationalFunction> m;
    for (const auto& [k, v] : coeffs) m.emplace(MultiIndex::parse_key(k, 2), rf(v.c_str()));
    return LinearDiffOp(V, 2, order, std::move(m));
}

} // namespace

TEST_CASE("apply_op basics") {
    // A = d^2/dx1^2 + x1 d/dx2 + (x1+x2)
    LinearDiffOp a = op(2, {{"2,0", "1"}, {"0,1", "x1"}, {"0,0", "x1+x2"}});
    CHECK(apply_op(a, rf("1")) == rf("x1+x2"));
    LinearDiffOp dxx = op(2, {{"2,0", "1"}});
    CHECK(apply_op(dxx, rf("x1^2")) == rf("2"));
    LinearDiffOp dx = op(1, {{"1,0", "1"}});
    CHECK(apply_op(dx, rf("1/(1-x1)")) == rf("1/(1-x1)^2"));
}

TEST_CASE("compose Leibniz") {
    LinearDiffOp dx = op(1, {{"1,0", "1"}});
    LinearDiffOp mul_x1 = op(0, {{"0,0", "x1"}});
    LinearDiffOp c = compose(dx, mul_x1);
    CHECK(c.coeff(MultiIndex({1, 0})) == rf("x1"));
    CHECK(c.coeff(MultiIndex({0, 0})) == rf("1"));

    LinearDiffOp a = op(2, {{"2,0", "x2"}, {"0,1", "x1"}});
    CHECK(compose(a, LinearDiffOp::identity(V, 2)) == a);
    CHECK(compose(LinearDiffOp::identity(V, 2), a) == a);

    LinearDiffOp dy = op(1, {{"0,1", "1"}});
    LinearDiffOp mixed = compose(dx, dy);
    CHECK(mixed.coeff(MultiIndex({1, 1})) == rf("1"));
    CHECK(mixed.coeffs().size() == 1);
}

TEST_CASE("compose agrees with nested application") {
    std::mt19937_64 g(30);
    for (int t = 0; t < 10; ++t) {
        LinearDiffOp a = testing::random_operator(g, V, 2, 2);
        LinearDiffOp b = testing::random_operator(g, V, 2, 2);
        LinearDiffOp c = compose(a, b);
        for (const auto& mono : MultiIndex::all_up_to(2, 6)) {
            RationalFunction f(Polynomial::monomial(V, mono, Rat(1)));
            CHECK(apply_op(c, f) == apply_op(a, apply_op(b, f)));
        }
    }
}

TEST_CASE("symbol extraction") {
    LinearDiffOp a = op(2, {{"2,0", "1"}, {"0,1", "x1"}});
    SymbolField s = symbol(a);
    CHECK(s.k() == 2);
    CHECK(s.coeffs().size() == 1);
    CHECK(s.coeff(MultiIndex({2, 0})) == rf("1"));

    // linearity at equal order
    LinearDiffOp b = op(2, {{"2,0", "x2"}, {"1,1", "3"}});
    SymbolField sb = symbol(a + b);
    CHECK(sb.coeff(MultiIndex({2, 0})) == rf("1+x2"));
    CHECK(sb.coeff(MultiIndex({1, 1})) == rf("3"));

    // order-(k-1) operator viewed at level k has zero symbol
    LinearDiffOp low = op(1, {{"1,0", "1"}, {"0,0", "x2"}});
    CHECK(symbol_at(low, 2).is_zero());
    CHECK_FALSE(symbol_at(low, 1).is_zero());
    CHECK_THROWS_AS(symbol_at(a, 1), dimension_error);
}

TEST_CASE("symbol_form_at") {
    std::map<MultiIndex, RationalFunction> cs;
    cs.emplace(MultiIndex({4, 0}), rf("1+x1"));
    cs.emplace(MultiIndex({2, 2}), rf("6"));
    cs.emplace(MultiIndex({0, 4}), rf("1"));
    SymbolField s(V, 2, 4, std::move(cs));

    NAryForm f0 = symbol_form_at(s, Point::exact({Rat(0), Rat(0)}));
    CHECK(f0.poly() == parse_polynomial("x^4 + 6*x^2*y^2 + y^4", {"x", "y"}));
    NAryForm f1 = symbol_form_at(s, Point::exact({Rat(1), Rat(0)}));
    CHECK(f1.poly() == parse_polynomial("2*x^4 + 6*x^2*y^2 + y^4", {"x", "y"}));

    std::map<MultiIndex, RationalFunction> pole;
    pole.emplace(MultiIndex({2, 0}), rf("1/x1"));
    SymbolField sp(V, 2, 2, std::move(pole));
    CHECK_THROWS_AS(symbol_form_at(sp, Point::exact({Rat(0), Rat(1)})), pole_error);
}

TEST_CASE("symbol_form_cleared matches evaluation") {
    std::map<MultiIndex, RationalFunction> cs;
    cs.emplace(MultiIndex({2, 0}), rf("x2/(1+x1^2)"));
    cs.emplace(MultiIndex({0, 2}), rf("3"));
    SymbolField s(V, 2, 2, std::move(cs));
    auto [form, den] = symbol_form_cleared(s);
    CHECK(form.n() == 2);
    CHECK(form.degree() == 2);
    // at x = (1, 2): den = 2, coefficients (2,0) -> 1, (0,2) -> 3
    std::vector<Rat> pt{Rat(1), Rat(2)};
    Rat d = den.eval(pt);
    Polynomial c20 = form.coeff(MultiIndex({2, 0}));
    CHECK(c20.eval(pt) / d == Rat(1));
    CHECK(form.coeff(MultiIndex({0, 2})).eval(pt) / d == Rat(3));
}

TEST_CASE("diffmap construction and inversion") {
    // affine y = Mx + b
    DiffMap aff = DiffMap::affine(V, {{Rat(1), Rat(2)}, {Rat(0), Rat(1)}}, {Rat(3), Rat(-1)});
    auto y = aff.apply({Rat(1), Rat(1)});
    CHECK(y[0] == Rat(6));
    CHECK(y[1] == Rat(0));
    auto x = aff.apply_inverse(y);
    CHECK(x[0] == Rat(1));
    CHECK(x[1] == Rat(1));

    // triangular y1 = x1, y2 = x2 + x1^2
    DiffMap tri = DiffMap::triangular(V, {Rat(1), Rat(1)},
                                      {Polynomial(V), parse_polynomial("x1^2", V)});
    CHECK(tri.inverse_polys()[1] == parse_polynomial("x2 - x1^2", V));
    DiffMap back = invert_map(tri);
    CHECK(back.forward()[1] == parse_polynomial("x2 - x1^2", V));

    // singular affine part
    CHECK_THROWS_AS(DiffMap::affine(V, {{Rat(1), Rat(2)}, {Rat(2), Rat(4)}}, {Rat(0), Rat(0)}),
                    singular_matrix_error);
}

TEST_CASE("pushforward pinned examples") {
    // 1D slice: y = 2x, d/dx -> 2 d/dy
    std::vector<std::string> w{"x"};
    DiffMap two = DiffMap::affine(w, {{Rat(2)}}, {Rat(0)});
    std::map<MultiIndex, RationalFunction> c;
    c.emplace(MultiIndex({1}), RationalFunction::constant(w, Rat(1)));
    LinearDiffOp d(w, 1, 1, std::move(c));
    LinearDiffOp pd = pushforward(d, two);
    CHECK(pd.coeff(MultiIndex({1})) == RationalFunction::constant(w, Rat(2)));

    // y1 = x1, y2 = x2 + x1^2: d/dx1 -> d/dy1 + 2 y1 d/dy2
    DiffMap tri = DiffMap::triangular(V, {Rat(1), Rat(1)},
                                      {Polynomial(V), parse_polynomial("x1^2", V)});
    LinearDiffOp dx = op(1, {{"1,0", "1"}});
    LinearDiffOp pdx = pushforward(dx, tri);
    CHECK(pdx.coeff(MultiIndex({1, 0})) == rf("1"));
    CHECK(pdx.coeff(MultiIndex({0, 1})) == rf("2*x1"));

    LinearDiffOp a = op(2, {{"2,0", "x2"}, {"0,1", "x1"}, {"0,0", "3"}});
    CHECK(pushforward(a, DiffMap::identity(V)) == a);
}

TEST_CASE("apply/pushforward compatibility") {
    std::mt19937_64 g(31);
    for (int t = 0; t < 8; ++t) {
        LinearDiffOp a = testing::random_operator(g, V, 2, t % 3 + 1);
        DiffMap phi = testing::random_diffmap(g, V);
        LinearDiffOp pa = pushforward(a, phi);
        SubstMap fwd = phi.forward_subst(V);
        SubstMap inv = phi.inverse_subst(V);
        for (const auto& mono : MultiIndex::all_up_to(2, 4)) {
            RationalFunction gfun(Polynomial::monomial(V, mono, Rat(1)));
            RationalFunction lhs = apply_op(pa, gfun);
            RationalFunction rhs = substitute(apply_op(a, substitute(gfun, V, fwd)), V, inv);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("pushforward functoriality") {
    std::mt19937_64 g(32);
    std::vector<std::string> w3{"x1", "x2", "x3"};
    for (int t = 0; t < 6; ++t) {
        const auto& vars = t % 2 == 0 ? V : w3;
        LinearDiffOp a = testing::random_operator(g, vars, static_cast<int>(vars.size()),
                                                  t % 2 == 0 ? 3 : 2, 1);
        DiffMap phi = testing::random_diffmap(g, vars);
        DiffMap psi = testing::random_diffmap(g, vars);
        LinearDiffOp lhs = pushforward(pushforward(a, phi), psi);
        LinearDiffOp rhs = pushforward(a, DiffMap::compose(psi, phi));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("pushforward preserves the order filtration") {
    std::mt19937_64 g(33);
    for (int t = 0; t < 5; ++t) {
        LinearDiffOp a = testing::random_operator(g, V, 2, 3);
        DiffMap phi = testing::random_diffmap(g, V);
        LinearDiffOp pa = pushforward(a, phi);
        CHECK(pa.effective_order() == a.effective_order());
        // the symbol of the pushforward depends only on the symbol of a:
        // adding a lower-order operator does not change it
        LinearDiffOp low = testing::random_operator(g, V, 2, 2).with_order(3);
        LinearDiffOp pb = pushforward(a + low, phi);
        SymbolField sa = symbol(pa);
        SymbolField sb = symbol_at(pb, 3);
        for (const auto& [al, c] : sa.coeffs()) CHECK(sb.coeff(al) == c);
    }
}

TEST_CASE("symbol naturality through catalog invariants") {
    // GL-invariants of the fibre form agree at corresponding points
    std::mt19937_64 g(34);
    for (int t = 0; t < 4; ++t) {
        LinearDiffOp a = testing::random_operator(g, V, 2, 4, 1);
        DiffMap phi = testing::random_diffmap(g, V);
        LinearDiffOp pa = pushforward(a, phi);
        std::vector<Rat> p{Rat(1, 2), Rat(-1, 3)};
        std::vector<Rat> q = phi.apply(p);
        NAryForm f1 = symbol_form_at(symbol(a), Point::exact(p));
        NAryForm f2 = symbol_form_at(symbol(pa), Point::exact(q));
        auto j1 = quartic_j_value(f1);
        auto j2 = quartic_j_value(f2);
        CHECK(j1.has_value() == j2.has_value());
        if (j1 && j2) CHECK(*j1 == *j2);
    }
}
