#ifndef TRESSE_FNONLINEAR_HPP
#define TRESSE_FNONLINEAR_HPP

#include "tresse/natinv.hpp"

namespace tresse {

// Operator with coefficients rational in (x_1..x_n, u), differentiating only
// in x: the Q(u)-nonlinear class. Internally a LinearDiffOp whose single
// parameter variable is named "u".
class FOperator {
public:
    explicit FOperator(LinearDiffOp op);

    const LinearDiffOp& as_linear() const { return op_; }
    int n() const { return op_.dim(); }
    int order() const { return op_.order(); }
    const std::vector<std::string>& vars() const { return op_.vars(); }
    int u_index() const { return op_.dim(); } // "u" is the sole parameter

    bool operator==(const FOperator& o) const { return op_ == o.op_; }

private:
    LinearDiffOp op_;
};

// A_f: substitute u := f(x) in every coefficient; a linear operator in x.
LinearDiffOp restrict_at_function(const FOperator& A, const RationalFunction& f);

// A_w(f) = A_f(f).
RationalFunction nonlinear_apply(const FOperator& A, const RationalFunction& f);

// d/d eps of eval_invariant(e, A_{f+eps}) at eps = 0, computed symbolically.
RationalFunction vertical_derivative(const ExprPtr& e, const FOperator& A,
                                     const RationalFunction& f);

// phi^(0): (x, u) -> (phi(x), u); coefficients are composed with
// (phi^{-1}, id) and the derivative part transforms like pushforward.
FOperator pushforward0(const FOperator& A, const DiffMap& phi);

struct AdjustedTriple {
    FOperator op;
    Box box;                    // axes for every x_i and for u
    std::vector<ExprPtr> frame; // the I_1..I_n expressions (u slot is implicit)
    std::string frame_src;
};

struct AdjustedCertificate {
    bool ok = false;
    std::string detail;           // names the failed condition
    std::vector<Rat> witness;     // grid point for a pointwise failure
    bool has_det = false;
    RationalFunction det;         // (n+1)x(n+1) Jacobian det of (u, I_1..I_n) in (x, u)
    int grid_points = 0;
};

// Condition (adj ext): every frame invariant evaluated on A is independent of
// u, and (u, I_1(A),..,I_n(A)) has a nonvanishing Jacobian on the box grid.
AdjustedCertificate verify_adjusted(const AdjustedTriple& triple, int grid_per_axis = 9);

// Extended fingerprint: rows (x.., u, I_1..I_n, Y_alpha) with
// J~_alpha evaluated fibrewise (u symbolic along the slice).
ModelFingerprint extended_model_map(const AdjustedTriple& triple, const ModelConfig& config);

// Theorem-4 style comparison: u is matched exactly, Newton runs in the x
// coordinates of each u-slice. Requires identical frame expressions.
EquivalenceVerdict extended_equivalence_check(const AdjustedTriple& t1, const AdjustedTriple& t2,
                                              const ModelConfig& config);

} // namespace tresse

#endif
