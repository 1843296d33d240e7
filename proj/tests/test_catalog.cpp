#include "tresse/catalog.hpp"
#include "tresse/errors.hpp"
#include "tresse/parse.hpp"
#include "tresse/transvectant.hpp"

#include "oracle.hpp"
#include "test_util.hpp"

#include <doctest.h>

using namespace tresse;

namespace {

NAryForm quartic(const char* text) {
    return NAryForm(2, 4, parse_polynomial(text, {"x", "y"}));
}

NAryForm quintic(const char* text) {
    return NAryForm(2, 5, parse_polynomial(text, {"x", "y"}));
}

NAryForm cubic3(const char* text) {
    return NAryForm(3, 3, parse_polynomial(text, {"x", "y", "z"}));
}

} // namespace

TEST_CASE("classical quartic coefficients") {
    auto c = quartic_classical_coeffs(quartic("x^4 + y^4"));
    CHECK(c.p4 == Rat(1));
    CHECK(c.p3 == Rat(0));
    CHECK(c.p2 == Rat(0));
    CHECK(c.p1 == Rat(0));
    CHECK(c.p0 == Rat(1));

    CHECK(quartic_classical_coeffs(quartic("x^4 - 2*x^2*y^2 + y^4")).p2 == Rat(-1, 3));

    auto d = quartic_classical_coeffs(quartic("x^3*y"));
    CHECK(d.p3 == Rat(1, 4));
    CHECK(d.p0 == Rat(0));
    CHECK(d.p4 == Rat(0));

    CHECK_THROWS_AS(quartic_classical_coeffs(quintic("x^5")), dimension_error);
    // reconstruction p4 x^4 + 4 p3 x^3 y + 6 p2 x^2 y^2 + 4 p1 x y^3 + p0 y^4
    std::mt19937_64 g(20);
    for (int t = 0; t < 20; ++t) {
        NAryForm p = testing::random_form(g, 2, 4);
        auto q = quartic_classical_coeffs(p);
        std::vector<std::string> v{"x", "y"};
        Polynomial rec = parse_polynomial("x^4", v) * q.p4 + parse_polynomial("4*x^3*y", v) * q.p3 +
                         parse_polynomial("6*x^2*y^2", v) * q.p2 + parse_polynomial("4*x*y^3", v) * q.p1 +
                         parse_polynomial("y^4", v) * q.p0;
        CHECK(rec == p.poly());
    }
}

TEST_CASE("quartic J2 and J3 on the pinned examples") {
    CHECK(quartic_j2_value(quartic("x^4 + y^4")) == Rat(1));
    CHECK(quartic_j3_value(quartic("x^4 + y^4")) == Rat(0));

    NAryForm w = quartic("(x^2 - y^2)^2");
    CHECK(quartic_j2_value(w) == Rat(4, 3));
    CHECK(quartic_j3_value(w) == Rat(-8, 27));
    CHECK(quartic_discriminant_value(w) == Rat(0));
    CHECK(*quartic_j_value(w) == Rat(27));
    CHECK_FALSE(quartic_is_regular(w));

    NAryForm r = quartic("x^4 + x^3*y + y^4");
    CHECK(quartic_j2_value(r) == Rat(1));
    CHECK(quartic_j3_value(r) == Rat(-1, 16));
    CHECK(*quartic_j_value(r) == Rat(256));
    CHECK(quartic_is_regular(r));

    NAryForm d = quartic("x^3*y");
    CHECK(quartic_j2_value(d) == Rat(0));
    CHECK(quartic_j3_value(d) == Rat(0));
    CHECK_FALSE(quartic_j_value(d).has_value());
    CHECK_FALSE(quartic_is_regular(d));
}

TEST_CASE("dual-path equality on random quartics") {
    std::mt19937_64 g(21);
    for (int t = 0; t < 500; ++t) {
        NAryForm p = testing::random_form(g, 2, 4);
        // quartic_j2/j3 throw if the two paths disagree
        Rat j2 = quartic_j2_value(p);
        Rat j3 = quartic_j3_value(p);
        Polynomial t1 = binary_transvectant(p, p, 4).coeff(MultiIndex::zero(2));
        CHECK(t1.constant_value() == Rat(1152) * j2);
        Polynomial t2 =
            binary_transvectant(binary_transvectant(p, p, 2), p, 4).coeff(MultiIndex::zero(2));
        CHECK(t2.constant_value() == Rat(497664) * j3);
    }
}

TEST_CASE("quintic tower and the pinned Fermat values") {
    NAryForm p = quintic("x^5 + y^5");
    NAryForm c21 = binary_transvectant(p, p, 4);
    CHECK(c21.degree() == 2); // 2*5 - 2*4
    CHECK(c21.poly() == parse_polynomial("28800*x*y", {"x", "y"}));

    auto q = quintic_invariants(p);
    CHECK(q.j4 == Rat(-1658880000));
    CHECK(q.j8 == Rat(0));
    CHECK(q.j12 == Rat(0));
    CHECK(q.i1.has_value());
    CHECK(*q.i1 == Rat(0));
    CHECK_FALSE(q.i2.has_value()); // J8 = 0
    CHECK(q.degenerate == "J8 = 0: I2 undefined");
}

TEST_CASE("quintic x^5 is totally degenerate") {
    auto q = quintic_invariants(quintic("x^5"));
    CHECK(q.j4 == Rat(0));
    CHECK(q.j8 == Rat(0));
    CHECK(q.j12 == Rat(0));
    CHECK_FALSE(q.i1.has_value());
    CHECK_FALSE(q.i2.has_value());
    CHECK(q.degenerate == "J4 = 0: I1 and I2 undefined");
}

TEST_CASE("quintic with defined GL invariants") {
    auto q = quintic_invariants(quintic("x^5 + x*y^4 + y^5"));
    CHECK(q.j4 == Rat(-1658880000));
    CHECK(q.j8 == Rat(-3522410053632000));
    CHECK(q.j12 == Rat(0));
    CHECK(*q.i1 == Rat(-4, 3125));
    CHECK(*q.i2 == Rat(0));
}

TEST_CASE("ternary cubic pinned values") {
    auto fermat = ternary_cubic_invariants(cubic3("x^3 + y^3 + z^3"));
    CHECK(fermat.j1 == Rat(1612431360));
    CHECK(fermat.j2 == Rat(0));
    CHECK(fermat.j.has_value());
    CHECK(*fermat.j == Rat(0));

    auto x3 = ternary_cubic_invariants(cubic3("x^3"));
    CHECK(x3.j1 == Rat(0));
    CHECK(x3.j2 == Rat(0));
    CHECK_FALSE(x3.j.has_value());

    // c1 of the Fermat cubic
    NAryForm p = cubic3("x^3 + y^3 + z^3");
    NAryForm c1 = transvectant({p, p, p}, 2);
    CHECK(c1.poly() == parse_polynomial("1296*x*y*z", {"x", "y", "z"}));
}

TEST_CASE("catalog scalars are SL-invariant") {
    std::mt19937_64 g(22);
    for (int t = 0; t < 10; ++t) {
        NAryForm p = testing::random_form(g, 2, 4, -4, 4);
        auto m = testing::random_sl(g, 2);
        NAryForm pg = p.substituted(m);
        CHECK(quartic_j2_value(pg) == quartic_j2_value(p));
        CHECK(quartic_j3_value(pg) == quartic_j3_value(p));
    }
    for (int t = 0; t < 4; ++t) {
        NAryForm p = testing::random_form(g, 2, 5, -3, 3);
        auto m = testing::random_sl(g, 2);
        auto a = quintic_invariants(p);
        auto b = quintic_invariants(p.substituted(m));
        CHECK(a.j4 == b.j4);
        CHECK(a.j8 == b.j8);
        CHECK(a.j12 == b.j12);
    }
    for (int t = 0; t < 3; ++t) {
        NAryForm p = testing::random_form(g, 3, 3, -2, 2);
        auto m = testing::random_sl(g, 3);
        auto a = ternary_cubic_invariants(p);
        auto b = ternary_cubic_invariants(p.substituted(m));
        CHECK(a.j1 == b.j1);
        CHECK(a.j2 == b.j2);
    }
}

TEST_CASE("GL invariance of the ratios and scaling weights") {
    std::mt19937_64 g(23);
    for (int t = 0; t < 8; ++t) {
        NAryForm p = testing::random_form(g, 2, 4, -4, 4);
        auto j = quartic_j_value(p);
        if (!j) continue;
        auto m = testing::random_gl(g, 2);
        auto jg = quartic_j_value(p.substituted(m));
        REQUIRE(jg.has_value());
        CHECK(*jg == *j);
    }
    // scaling: J2(P o c id) = c^8 J2, J3 -> c^12 J3
    std::vector<std::vector<Rat>> c2{{Rat(3), Rat(0)}, {Rat(0), Rat(3)}};
    std::mt19937_64 g2(24);
    for (int t = 0; t < 10; ++t) {
        NAryForm p = testing::random_form(g2, 2, 4);
        NAryForm ps = p.substituted(c2);
        Rat c8 = Rat(6561);     // 3^8
        Rat c12 = Rat(531441);  // 3^12
        CHECK(quartic_j2_value(ps) == c8 * quartic_j2_value(p));
        CHECK(quartic_j3_value(ps) == c12 * quartic_j3_value(p));
        auto j = quartic_j_value(p);
        auto js = quartic_j_value(ps);
        if (j) {
            REQUIRE(js.has_value());
            CHECK(*js == *j);
        }
    }
}

TEST_CASE("degenerate consistency on repeated-root quartics") {
    std::mt19937_64 g(25);
    std::vector<std::string> v{"x", "y"};
    for (int t = 0; t < 25; ++t) {
        int a = testing::rand_int(g, -5, 5);
        Polynomial lin = Polynomial::variable(v, 0) - Polynomial::variable(v, 1) * Rat(a);
        Polynomial q(v);
        for (const auto& mi : MultiIndex::all_of_degree(2, 2))
            q.add_term(mi, Rat(testing::rand_int(g, -5, 5)));
        if (q.is_zero()) continue;
        NAryForm p(2, 4, lin * lin * q);
        CHECK(quartic_discriminant_value(p) == Rat(0));
        auto j = quartic_j_value(p);
        bool consistent = (!j.has_value() && quartic_j2_value(p) == Rat(0)) || (j.has_value() && *j == Rat(27));
        CHECK(consistent);
    }
}

TEST_CASE("oracle agreement for the catalog towers") {
    using tresse::testing::oracle_transvectant;
    NAryForm p5 = quintic("x^5 + y^5");
    NAryForm c21 = oracle_transvectant({p5, p5}, 4);
    NAryForm c3 = oracle_transvectant({p5, c21}, 2);
    NAryForm c22 = oracle_transvectant({c3, c3}, 2);
    CHECK(oracle_transvectant({c21, c21}, 2).scalar_value() == Rat(-1658880000));
    CHECK(oracle_transvectant({c21, c22}, 2).scalar_value() == Rat(0));

    NAryForm pc = cubic3("x^3 + y^3 + z^3");
    NAryForm pc2(3, 6, pc.poly() * pc.poly());
    CHECK(oracle_transvectant({pc2, pc2, pc2}, 6).scalar_value() == Rat(1612431360));
}

TEST_CASE("catalog report rows") {
    auto rows = catalog_report(quartic("(x^2 - y^2)^2"), "quartic");
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].name == "J2");
    CHECK(rows[0].value == "4/3");
    CHECK(rows[3].name == "J");
    CHECK(rows[3].value == "27");
    REQUIRE(rows[3].regular.has_value());
    CHECK_FALSE(*rows[3].regular);
    CHECK_THROWS_AS(catalog_report(quartic("x^4"), "nope"), data_error);
}
