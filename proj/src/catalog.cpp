#include "tresse/catalog.hpp"

#include "tresse/errors.hpp"
#include "tresse/transvectant.hpp"

namespace tresse {

namespace {

void require_shape(const NAryForm& P, int n, int degree, const char* what) {
    if (P.n() != n || P.degree() != degree)
        throw dimension_error(std::string(what) + " requires an n=" + std::to_string(n) +
                              " form of degree " + std::to_string(degree));
}

// Coefficient of the scalar (degree-0) transvectant result, as a polynomial
// in the parameters.
Polynomial scalar_part(const NAryForm& f) {
    if (f.degree() != 0) throw dimension_error("expected a degree-0 form");
    return f.coeff(MultiIndex::zero(f.n()));
}

struct QuarticCoeffPolys {
    Polynomial p0, p1, p2, p3, p4;
};

QuarticCoeffPolys quartic_coeff_polys(const NAryForm& P) {
    auto c = [&](int a, int b) { return P.coeff(MultiIndex({a, b})); };
    QuarticCoeffPolys q{c(0, 4), c(1, 3) * Rat(1, 4), c(2, 2) * Rat(1, 6), c(3, 1) * Rat(1, 4), c(4, 0)};
    return q;
}

} // namespace

QuarticClassicalCoeffs quartic_classical_coeffs(const NAryForm& P) {
    require_shape(P, 2, 4, "quartic_classical_coeffs");
    auto q = quartic_coeff_polys(P);
    return {q.p0.constant_value(), q.p1.constant_value(), q.p2.constant_value(),
            q.p3.constant_value(), q.p4.constant_value()};
}

Polynomial quartic_j2(const NAryForm& P) {
    require_shape(P, 2, 4, "quartic_j2");
    auto q = quartic_coeff_polys(P);
    Polynomial explicit_path = q.p0 * q.p4 - q.p1 * q.p3 * Rat(4) + q.p2 * q.p2 * Rat(3);
    Polynomial transvectant_path =
        scalar_part(binary_transvectant(P, P, 4)) * Rat(1, 128 * 9);
    if (!(explicit_path == transvectant_path))
        throw error("quartic J2: explicit and transvectant paths disagree (normalization bug)");
    return explicit_path;
}

Polynomial quartic_j3(const NAryForm& P) {
    require_shape(P, 2, 4, "quartic_j3");
    auto q = quartic_coeff_polys(P);
    Polynomial explicit_path = q.p0 * q.p2 * q.p4 - q.p0 * q.p3 * q.p3 - q.p1 * q.p1 * q.p4 +
                               q.p1 * q.p2 * q.p3 * Rat(2) - q.p2 * q.p2 * q.p2;
    Polynomial transvectant_path =
        scalar_part(binary_transvectant(binary_transvectant(P, P, 2), P, 4)) * Rat(1, 2048 * 243);
    if (!(explicit_path == transvectant_path))
        throw error("quartic J3: explicit and transvectant paths disagree (normalization bug)");
    return explicit_path;
}

Polynomial quartic_discriminant(const NAryForm& P) {
    Polynomial j2 = quartic_j2(P);
    Polynomial j3 = quartic_j3(P);
    return j2.pow(3) * Rat(256) - j3.pow(2) * Rat(6912);
}

Rat quartic_j2_value(const NAryForm& P) {
    return quartic_j2(P).constant_value();
}

Rat quartic_j3_value(const NAryForm& P) {
    return quartic_j3(P).constant_value();
}

Rat quartic_discriminant_value(const NAryForm& P) {
    return quartic_discriminant(P).constant_value();
}

std::optional<Rat> quartic_j_value(const NAryForm& P) {
    Rat j2 = quartic_j2_value(P);
    Rat j3 = quartic_j3_value(P);
    if (j3 == 0) return std::nullopt;
    return j2 * j2 * j2 / (j3 * j3);
}

bool quartic_is_regular(const NAryForm& P) {
    auto j = quartic_j_value(P);
    return j.has_value() && *j != 27;
}

namespace {

struct QuinticTower {
    NAryForm c21, c3, c22;
};

QuinticTower quintic_tower(const NAryForm& P) {
    require_shape(P, 2, 5, "quintic invariants");
    QuinticTower t{binary_transvectant(P, P, 4), NAryForm::zero(2, 0, P.poly().vars()),
                   NAryForm::zero(2, 0, P.poly().vars())};
    if (!t.c21.is_zero() && t.c21.degree() != 2) throw error("quintic c21 degree check failed");
    t.c3 = binary_transvectant(P, t.c21, 2);
    if (!t.c3.is_zero() && t.c3.degree() != 3) throw error("quintic c3 degree check failed");
    t.c22 = binary_transvectant(t.c3, t.c3, 2);
    if (!t.c22.is_zero() && t.c22.degree() != 2) throw error("quintic c22 degree check failed");
    return t;
}

} // namespace

Polynomial quintic_j4(const NAryForm& P) {
    auto t = quintic_tower(P);
    return scalar_part(binary_transvectant(t.c21, t.c21, 2));
}

Polynomial quintic_j8(const NAryForm& P) {
    auto t = quintic_tower(P);
    return scalar_part(binary_transvectant(t.c21, t.c22, 2));
}

Polynomial quintic_j12(const NAryForm& P) {
    auto t = quintic_tower(P);
    return scalar_part(binary_transvectant(t.c22, t.c22, 2));
}

QuinticInvariants quintic_invariants(const NAryForm& P) {
    auto t = quintic_tower(P);
    QuinticInvariants out;
    out.j4 = scalar_part(binary_transvectant(t.c21, t.c21, 2)).constant_value();
    out.j8 = scalar_part(binary_transvectant(t.c21, t.c22, 2)).constant_value();
    out.j12 = scalar_part(binary_transvectant(t.c22, t.c22, 2)).constant_value();
    if (out.j4 == 0) {
        out.degenerate = "J4 = 0: I1 and I2 undefined";
    } else {
        out.i1 = out.j8 / (out.j4 * out.j4);
        if (out.j8 == 0) {
            out.degenerate = "J8 = 0: I2 undefined";
        } else {
            out.i2 = out.j12 / (out.j4 * out.j8);
        }
    }
    return out;
}

namespace {

struct CubicTower {
    NAryForm c1, c2;
};

CubicTower cubic_tower(const NAryForm& P) {
    require_shape(P, 3, 3, "ternary cubic invariants");
    CubicTower t{transvectant({P, P, P}, 2), NAryForm::zero(3, 0, P.poly().vars())};
    if (!t.c1.is_zero() && t.c1.degree() != 3) throw error("cubic c1 degree check failed");
    t.c2 = transvectant({P, P, t.c1}, 2);
    if (!t.c2.is_zero() && t.c2.degree() != 3) throw error("cubic c2 degree check failed");
    return t;
}

} // namespace

Polynomial ternary_cubic_j1(const NAryForm& P) {
    require_shape(P, 3, 3, "ternary_cubic_j1");
    NAryForm p2(3, 6, P.poly() * P.poly());
    return scalar_part(transvectant({p2, p2, p2}, 6));
}

Polynomial ternary_cubic_j2(const NAryForm& P) {
    auto t = cubic_tower(P);
    return scalar_part(transvectant({P, t.c1, t.c2}, 3));
}

TernaryCubicInvariants ternary_cubic_invariants(const NAryForm& P) {
    TernaryCubicInvariants out;
    out.j1 = ternary_cubic_j1(P).constant_value();
    out.j2 = ternary_cubic_j2(P).constant_value();
    if (out.j1 != 0) out.j = out.j2 * out.j2 / (out.j1 * out.j1 * out.j1);
    return out;
}

int catalog_weight(const std::string& name) {
    if (name == "J2q") return 2;
    if (name == "J3q") return 3;
    if (name == "J4qu") return 4;
    if (name == "J8qu") return 8;
    if (name == "J12qu") return 12;
    if (name == "J1c") return 6;
    if (name == "J2c") return 9;
    throw dimension_error("unknown catalog scalar: " + name);
}

std::vector<InvariantReport> catalog_report(const NAryForm& P, const std::string& catalog) {
    std::vector<InvariantReport> rows;
    auto add = [&](const std::string& name, const Rat& v, const std::string& path) {
        rows.push_back({name, rat_to_string(v), path, true, std::nullopt, ""});
    };
    if (catalog == "quartic") {
        Rat j2 = quartic_j2_value(P);
        Rat j3 = quartic_j3_value(P);
        add("J2", j2, "both");
        add("J3", j3, "both");
        add("discriminant", quartic_discriminant_value(P), "both");
        auto j = quartic_j_value(P);
        InvariantReport jr{"J", "undefined", "both", false, false, "J3 = 0: degenerate orbit"};
        if (j) {
            jr.value = rat_to_string(*j);
            jr.defined = true;
            jr.note.clear();
            jr.regular = (*j != 27);
        }
        rows.push_back(jr);
    } else if (catalog == "quintic") {
        auto q = quintic_invariants(P);
        add("J4", q.j4, "transvectant");
        add("J8", q.j8, "transvectant");
        add("J12", q.j12, "transvectant");
        InvariantReport i1{"I1", "undefined", "transvectant", false, std::nullopt, q.degenerate};
        if (q.i1) {
            i1.value = rat_to_string(*q.i1);
            i1.defined = true;
            i1.note.clear();
        }
        rows.push_back(i1);
        InvariantReport i2{"I2", "undefined", "transvectant", false, std::nullopt, q.degenerate};
        if (q.i2) {
            i2.value = rat_to_string(*q.i2);
            i2.defined = true;
            i2.note.clear();
        }
        rows.push_back(i2);
    } else if (catalog == "ternary-cubic") {
        auto c = ternary_cubic_invariants(P);
        add("J1", c.j1, "transvectant");
        add("J2", c.j2, "transvectant");
        InvariantReport jr{"J", "undefined", "transvectant", false, std::nullopt, "J1 = 0: degenerate"};
        if (c.j) {
            jr.value = rat_to_string(*c.j);
            jr.defined = true;
            jr.note.clear();
        }
        rows.push_back(jr);
    } else {
        throw data_error("unknown catalog '" + catalog + "' (expected quartic|quintic|ternary-cubic)");
    }
    return rows;
}

} // namespace tresse
