#ifndef TRESSE_CATALOG_HPP
#define TRESSE_CATALOG_HPP

#include "tresse/form.hpp"
#include "tresse/rational_function.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tresse {

// Classical weighted coefficients of a binary quartic
//   P = p4 x^4 + 4 p3 x^3 y + 6 p2 x^2 y^2 + 4 p1 x y^3 + p0 y^4.
struct QuarticClassicalCoeffs {
    Rat p0, p1, p2, p3, p4;
};

QuarticClassicalCoeffs quartic_classical_coeffs(const NAryForm& P);

// Parametric cores: values are polynomials in the form's parameter variables
// (plain rationals when there are none). The quartic invariants are computed
// along both the explicit-polynomial and the transvectant route and must
// agree exactly; a mismatch throws (it would signal a normalization bug).
Polynomial quartic_j2(const NAryForm& P); // {P,P}_4 / (2^7 3^2) == p0p4 - 4p1p3 + 3p2^2
Polynomial quartic_j3(const NAryForm& P); // {{P,P}_2,P}_4 / (2^11 3^5) == p0p2p4 - p0p3^2 - p1^2p4 + 2p1p2p3 - p2^3
Polynomial quartic_discriminant(const NAryForm& P); // 256 J2^3 - 6912 J3^2

Rat quartic_j2_value(const NAryForm& P);
Rat quartic_j3_value(const NAryForm& P);
Rat quartic_discriminant_value(const NAryForm& P);

// J = J2^3 / J3^2; undefined (degenerate orbit) when J3 = 0.
std::optional<Rat> quartic_j_value(const NAryForm& P);
bool quartic_is_regular(const NAryForm& P); // J3 != 0 and J != 27

// Binary quintic covariant/invariant tower:
//   c21 = {P,P}_4, c3 = {P,c21}_2, c22 = {c3,c3}_2,
//   J4 = {c21,c21}_2, J8 = {c21,c22}_2, J12 = {c22,c22}_2,
//   I1 = J8/J4^2, I2 = J12/(J4 J8).
Polynomial quintic_j4(const NAryForm& P);
Polynomial quintic_j8(const NAryForm& P);
Polynomial quintic_j12(const NAryForm& P);

struct QuinticInvariants {
    Rat j4, j8, j12;
    std::optional<Rat> i1, i2;
    std::string degenerate; // names the vanished denominator, empty when none
};
QuinticInvariants quintic_invariants(const NAryForm& P);

// Ternary cubic tower:
//   J1 = {P^2,P^2,P^2}_6, c1 = {P,P,P}_2, c2 = {P,P,c1}_2, J2 = {P,c1,c2}_3,
//   J = J2^2 / J1^3 (defined iff J1 != 0).
Polynomial ternary_cubic_j1(const NAryForm& P);
Polynomial ternary_cubic_j2(const NAryForm& P);

struct TernaryCubicInvariants {
    Rat j1, j2;
    std::optional<Rat> j;
};
TernaryCubicInvariants ternary_cubic_invariants(const NAryForm& P);

// Homogeneity weight of each SL-scalar in the form's coefficients; a form
// scaled by a factor s has its invariant scaled by s^weight. Used to undo the
// denominator clearing when catalog invariants are evaluated on symbols with
// rational-function coefficients.
int catalog_weight(const std::string& name); // "J2q","J3q","J4qu","J8qu","J12qu","J1c","J2c"

// Flat report rows for the CLI.
struct InvariantReport {
    std::string name;
    std::string value; // exact rational string, or "undefined"
    std::string path;  // "explicit", "transvectant", "both"
    bool defined = true;
    std::optional<bool> regular;
    std::string note;
};
std::vector<InvariantReport> catalog_report(const NAryForm& P, const std::string& catalog);

} // namespace tresse

#endif
