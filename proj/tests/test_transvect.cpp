#include "tresse/errors.hpp"
#include "tresse/parse.hpp"
#include "tresse/transvectant.hpp"

#include "oracle.hpp"
#include "test_util.hpp"

#include <doctest.h>

using namespace tresse;
using tresse::testing::oracle_transvectant;

namespace {

NAryForm form2(const char* text, int degree) {
    return NAryForm(2, degree, parse_polynomial(text, {"x", "y"}));
}

NAryForm form3(const char* text, int degree) {
    return NAryForm(3, degree, parse_polynomial(text, {"x", "y", "z"}));
}

} // namespace

TEST_CASE("nabla on elementary tensors") {
    // n=2: x (x) y -> 1 (x) 1
    TensorProduct t({form2("x", 1), form2("y", 1)});
    TensorProduct dt = t.nabla();
    NAryForm merged = dt.mu();
    CHECK(merged.degree() == 0);
    CHECK(merged.scalar_value() == Rat(1));

    // n=3: x (x) y (x) z -> 1 with coefficient +1
    TensorProduct t3({form3("x", 1), form3("y", 1), form3("z", 1)});
    CHECK(t3.nabla().mu().scalar_value() == Rat(1));

    // a constant factor kills every permutation
    TensorProduct tc({form2("x", 1), NAryForm(2, 0, parse_polynomial("5", {"x", "y"}))});
    CHECK(tc.nabla().poly().is_zero());
}

TEST_CASE("transvectant order zero is the product") {
    NAryForm f = form2("x^2 + y^2", 2);
    NAryForm g = form2("x + y", 1);
    NAryForm r = transvectant({f, g}, 0);
    CHECK(r.poly() == f.poly() * g.poly());
}

TEST_CASE("pinned quartic self-transvectant") {
    NAryForm p = form2("x^4 + y^4", 4);
    NAryForm r = transvectant({p, p}, 4);
    CHECK(r.degree() == 0);
    CHECK(r.scalar_value() == Rat(1152));
    CHECK(binary_transvectant(p, p, 4).scalar_value() == Rat(1152));
    CHECK(self_transvectant_J(p) == Rat(1152));
    CHECK(oracle_transvectant({p, p}, 4).scalar_value() == Rat(1152));
}

TEST_CASE("ternary unit transvectant") {
    NAryForm r = transvectant({form3("x", 1), form3("y", 1), form3("z", 1)}, 1);
    CHECK(r.scalar_value() == Rat(1));
}

TEST_CASE("J vanishes in odd degree and for undershoot") {
    NAryForm f = form2("x^3 + 2*x*y^2", 3);
    CHECK(self_transvectant_J(f) == Rat(0));
    NAryForm x3 = form3("x^3", 3);
    CHECK(self_transvectant_J(x3) == Rat(0));
    // odd-l self transvectant is zero by skew symmetry
    NAryForm q = form2("x^4 + x*y^3", 4);
    CHECK(binary_transvectant(q, q, 3).is_zero());
    // degree undershoot gives the zero form
    CHECK(transvectant({form2("x", 1), form2("y", 1)}, 2).is_zero());
}

TEST_CASE("binary fast path equals the general path") {
    std::mt19937_64 g(7);
    for (int t = 0; t < 200; ++t) {
        int df = testing::rand_int(g, 0, 4);
        int dg = testing::rand_int(g, 0, 4);
        unsigned l = static_cast<unsigned>(testing::rand_int(g, 0, 4));
        NAryForm f = testing::random_form(g, 2, df, -5, 5);
        NAryForm h = testing::random_form(g, 2, dg, -5, 5);
        NAryForm a = binary_transvectant(f, h, l);
        NAryForm b = transvectant({f, h}, l);
        CHECK(a.poly() == b.poly());
    }
}

TEST_CASE("pipeline equals the brute-force oracle") {
    std::mt19937_64 g(8);
    for (int t = 0; t < 25; ++t) {
        int n = t % 2 == 0 ? 2 : 3;
        unsigned l = static_cast<unsigned>(testing::rand_int(g, 0, 3));
        std::vector<NAryForm> fs;
        for (int i = 0; i < n; ++i)
            fs.push_back(testing::random_form(g, n, testing::rand_int(g, static_cast<int>(l), 4), -4, 4));
        CHECK(transvectant(fs, l).poly() == oracle_transvectant(fs, l).poly());
    }
}

TEST_CASE("skew symmetry sign law") {
    std::mt19937_64 g(9);
    for (int t = 0; t < 30; ++t) {
        int n = t % 2 == 0 ? 2 : 3;
        unsigned l = static_cast<unsigned>(testing::rand_int(g, 0, 4));
        std::vector<NAryForm> fs;
        for (int i = 0; i < n; ++i)
            fs.push_back(testing::random_form(g, n, testing::rand_int(g, 0, 4), -4, 4));
        NAryForm base = transvectant(fs, l);
        // swap two arguments: sign (-1)^l
        std::vector<NAryForm> swapped = fs;
        std::swap(swapped[0], swapped[1]);
        NAryForm s = transvectant(swapped, l);
        if (l % 2 == 0) {
            CHECK(s.poly() == base.poly());
        } else {
            CHECK(s.poly() == -base.poly());
        }
        if (n == 3) {
            // 3-cycle is even: sign +1 for every l
            std::vector<NAryForm> cyc{fs[1], fs[2], fs[0]};
            CHECK(transvectant(cyc, l).poly() == base.poly());
        }
    }
}

TEST_CASE("degree law") {
    std::mt19937_64 g(10);
    for (int t = 0; t < 30; ++t) {
        int n = t % 2 == 0 ? 2 : 3;
        unsigned l = static_cast<unsigned>(testing::rand_int(g, 0, 5));
        std::vector<NAryForm> fs;
        int sum = 0;
        bool undershoot = false;
        for (int i = 0; i < n; ++i) {
            int d = testing::rand_int(g, 0, 5);
            sum += d;
            if (d < static_cast<int>(l)) undershoot = true;
            fs.push_back(testing::random_form(g, n, d, 1, 5)); // nonzero coefficients
        }
        NAryForm r = transvectant(fs, l);
        if (undershoot) {
            CHECK(r.is_zero());
        } else if (!r.is_zero()) {
            CHECK(r.degree() == sum - n * static_cast<int>(l));
        }
    }
}

TEST_CASE("SL equivariance") {
    std::mt19937_64 g(11);
    for (int t = 0; t < 12; ++t) {
        int n = t % 2 == 0 ? 2 : 3;
        unsigned l = static_cast<unsigned>(testing::rand_int(g, 1, 3));
        std::vector<NAryForm> fs;
        for (int i = 0; i < n; ++i)
            fs.push_back(testing::random_form(g, n, testing::rand_int(g, static_cast<int>(l), 4), -3, 3));
        auto m = testing::random_sl(g, n);
        std::vector<NAryForm> moved;
        for (const auto& f : fs) moved.push_back(f.substituted(m));
        NAryForm lhs = transvectant(moved, l);
        NAryForm rhs = transvectant(fs, l).substituted(m);
        CHECK(lhs.poly() == rhs.poly());
    }
}

TEST_CASE("multilinearity") {
    std::mt19937_64 g(12);
    for (int t = 0; t < 15; ++t) {
        int n = 2;
        unsigned l = static_cast<unsigned>(testing::rand_int(g, 0, 3));
        int d = testing::rand_int(g, static_cast<int>(l), 4);
        NAryForm f1 = testing::random_form(g, n, d);
        NAryForm f1b = testing::random_form(g, n, d);
        NAryForm f2 = testing::random_form(g, n, testing::rand_int(g, static_cast<int>(l), 4));
        NAryForm sum(n, d, f1.poly() + f1b.poly());
        NAryForm lhs = transvectant({sum, f2}, l);
        NAryForm rhs(n, lhs.degree(),
                     transvectant({f1, f2}, l).poly() + transvectant({f1b, f2}, l).poly());
        CHECK(lhs.poly() == rhs.poly());
    }
}

TEST_CASE("transvectant input validation") {
    NAryForm f2 = form2("x^2+y^2", 2);
    NAryForm f3 = form3("x^2+y*z", 2);
    CHECK_THROWS_AS(transvectant({f2, f3}, 1), dimension_error);
    CHECK_THROWS_AS(binary_transvectant(f3, f3, 1), dimension_error);
}
