#ifndef TRESSE_NATINV_HPP
#define TRESSE_NATINV_HPP

#include "tresse/diffop.hpp"
#include "tresse/invariant_expr.hpp"
#include "tresse/sampling.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tresse {

// Restriction of an invariant expression to the section of A: an exact
// rational function of the operator's variables. Catalog tokens evaluate the
// named invariant of the (symbolic-coefficient) symbol; the frame context is
// required only when the expression contains Tresse nodes.
RationalFunction eval_invariant(const ExprPtr& e, const LinearDiffOp& A);
RationalFunction eval_invariant(const ExprPtr& e, const LinearDiffOp& A,
                                const std::vector<RationalFunction>& frame_values);

// box(g) restricted to the section of A coincides with applying A.
RationalFunction box_apply(const LinearDiffOp& A, const RationalFunction& g);

std::vector<RationalFunction> eval_frame(const std::vector<ExprPtr>& frame, const LinearDiffOp& A);

// Tresse derivatives df/dI_i: the unique coefficients with
// df/dx_j = sum_i (df/dI_i) dI_i/dx_j. Throws singular_matrix_error when the
// frame Jacobian is singular as a matrix of functions.
std::vector<RationalFunction> tresse_derivatives(const RationalFunction& f,
                                                 const std::vector<RationalFunction>& frame_values,
                                                 int dim);
RationalFunction tresse_derivative(const RationalFunction& f,
                                   const std::vector<RationalFunction>& frame_values, int dim,
                                   int slot);

// J_alpha = (1/alpha!) box(I^alpha).
RationalFunction j_alpha(const LinearDiffOp& A, const std::vector<RationalFunction>& frame_values,
                         const MultiIndex& alpha);

// Triangular combination sum_{g <= alpha} (-I)^g / g! * J_{alpha-g}; with the
// coordinate frame it returns the coefficient A_alpha exactly.
RationalFunction coefficient_recovery(const LinearDiffOp& A,
                                      const std::vector<RationalFunction>& frame_values,
                                      const MultiIndex& alpha);

// Remark-style J_alpha for pure symbols: the full symmetric contraction
// <sigma, dh^alpha> under the permanent-sum convention (no 1/k!).
RationalFunction symbol_j_alpha(const SymbolField& sigma, const std::vector<RationalFunction>& h,
                                const MultiIndex& alpha);

struct GeneralPositionCertificate {
    enum class Failure {
        none,
        degenerate_expr,        // a frame entry is undefined on this operator
        identically_zero,       // det == 0 as a function
        vanishes_at_grid_point, // det == 0 at a box grid sample
        pole_at_grid_point,
    };
    bool ok = false;
    Failure failure = Failure::none;
    std::string detail;
    std::vector<Rat> witness; // an admissible grid point (ok) or the failing one
    bool has_det = false;
    RationalFunction det;
    int grid_points = 0;
};

std::string to_string(GeneralPositionCertificate::Failure f);

// det of the frame Jacobian in the geometric variables; ok iff it is not
// identically zero and does not vanish at any grid sample of the box. The box
// must provide an axis for every operator variable.
GeneralPositionCertificate general_position_check(const std::vector<ExprPtr>& frame,
                                                  const LinearDiffOp& A, const Box& box,
                                                  int grid_per_axis = 9);

struct ModelConfig {
    int samples = 64;
    std::uint64_t seed = 0;
    double tol_root = 1e-12;
    double tol_match = 1e-9;
    double abs_floor = 1e-12;
    int max_newton_iter = 50;
    int newton_seeds_per_axis = 5;
    int grid_per_axis = 9;
    double match_threshold = 0.95;
    int jobs = 1;
};

struct ModelFingerprint {
    std::vector<std::string> x_names;
    std::vector<std::string> frame_names; // "I1".."In" (prefixed by "u" in the extended case)
    std::vector<MultiIndex> alphas;       // graded order; CSV column Y_<alpha joined by '_'>
    std::vector<std::vector<double>> rows;
    int rejections = 0;
    std::string frame_src;
    std::string box_src;
    ModelConfig config;
    GeneralPositionCertificate certificate;

    std::string to_csv() const;
};

// phi_A sampled at `config.samples` seeded points of the box. Rows are
// deterministic for a fixed seed: row r draws from its own substream, pole
// hits are resampled (counted), and base coordinates are kept pairwise
// distinct. Throws degenerate_error when general position fails on the box.
ModelFingerprint model_map(const LinearDiffOp& A, const std::vector<ExprPtr>& frame,
                           const Box& box, const ModelConfig& config,
                           const std::string& frame_src = "");

struct EquivalenceVerdict {
    enum class Kind { Equivalent, Distinct, Inconclusive };
    Kind kind = Kind::Inconclusive;
    int samples = 0;
    int matched = 0;
    int no_root = 0;
    int separators = 0;
    int rejections = 0;

    struct PairWitness {
        std::vector<double> x, y;
        double residual;
    };
    std::vector<PairWitness> witnesses;

    struct Separator {
        std::vector<double> x, y;
        std::string alpha; // separating coordinate Y_<alpha>
        double lhs, rhs;
    };
    std::optional<Separator> separator;

    std::string reason;
};

// Theorem-2 style model comparison: sample box1, push the base coordinates
// through Newton into box2 (exact Jacobian, float iterates), and compare all
// Y_alpha. Distinct is sound (a base-matched preimage with a Y mismatch);
// Equivalent is an evidence verdict with witness pairs.
EquivalenceVerdict equivalence_check(const LinearDiffOp& A1, const Box& box1,
                                     const LinearDiffOp& A2, const Box& box2,
                                     const std::vector<ExprPtr>& frame, const ModelConfig& config);

// Shared internals (also used by the F-nonlinear checker).
namespace detail {

struct NewtonFuncs {
    const std::vector<RationalFunction>* funcs; // base invariants of the target operator
    std::vector<std::vector<RationalFunction>> jac; // d funcs / d x_j, j < free_dims
    int free_dims;
};

std::optional<std::vector<double>> newton_solve(const NewtonFuncs& nf,
                                                const std::vector<Rat>& fixed_tail,
                                                const std::vector<Rat>& target,
                                                const std::vector<double>& start,
                                                const std::vector<double>& lo,
                                                const std::vector<double>& hi,
                                                const ModelConfig& cfg, double* residual_out);

bool values_match(double a, double b, const ModelConfig& cfg);

std::vector<MultiIndex> fingerprint_alphas(int dim, int order);

} // namespace detail

} // namespace tresse

#endif
