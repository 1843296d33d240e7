#include "tresse/natinv.hpp"

#include "tresse/catalog.hpp"
#include "tresse/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <future>
#include <sstream>

namespace tresse {

namespace {

RationalFunction eval_catalog_token(const std::string& token, const LinearDiffOp& A) {
    const auto& info = catalog_tokens().at(token);
    if (A.dim() != info.n || A.order() != info.k)
        throw dimension_error("catalog token " + token + " expects an operator with n=" +
                              std::to_string(info.n) + ", k=" + std::to_string(info.k));
    auto [form, den] = symbol_form_cleared(symbol(A));
    // the cleared factor cancels in the weight-0 ratios below
    auto ratio = [&](Polynomial num, Polynomial d, const char* what) {
        if (d.is_zero())
            throw degenerate_error(std::string(what) + " is undefined: denominator invariant vanishes identically");
        return RationalFunction(std::move(num), std::move(d));
    };
    if (token == "J2q") return RationalFunction(quartic_j2(form), den.pow(2));
    if (token == "J3q") return RationalFunction(quartic_j3(form), den.pow(3));
    if (token == "Jq") {
        Polynomial j2 = quartic_j2(form);
        Polynomial j3 = quartic_j3(form);
        return ratio(j2.pow(3), j3.pow(2), "quartic J = J2^3/J3^2");
    }
    if (token == "I1quintic") {
        Polynomial j4 = quintic_j4(form);
        return ratio(quintic_j8(form), j4.pow(2), "quintic I1 = J8/J4^2");
    }
    if (token == "I2quintic") {
        Polynomial j4 = quintic_j4(form);
        Polynomial j8 = quintic_j8(form);
        return ratio(quintic_j12(form), j4 * j8, "quintic I2 = J12/(J4 J8)");
    }
    if (token == "J1c") return RationalFunction(ternary_cubic_j1(form), den.pow(6));
    if (token == "J2c") return RationalFunction(ternary_cubic_j2(form), den.pow(9));
    if (token == "Jc") {
        Polynomial j1 = ternary_cubic_j1(form);
        Polynomial j2 = ternary_cubic_j2(form);
        return ratio(j2.pow(2), j1.pow(3), "cubic J = J2^2/J1^3");
    }
    throw dimension_error("unhandled catalog token " + token);
}

RationalFunction eval_impl(const ExprPtr& e, const LinearDiffOp& A,
                           const std::vector<RationalFunction>* frame_values) {
    using Kind = InvariantExpr::Kind;
    const auto& vars = A.vars();
    switch (e->kind) {
        case Kind::Catalog: return eval_catalog_token(e->name, A);
        case Kind::Free: return A.coeff(MultiIndex::zero(A.dim()));
        case Kind::Coord: {
            auto it = std::find(vars.begin(), vars.end(), e->name);
            if (it == vars.end())
                throw dimension_error("coordinate '" + e->name + "' is not a variable of the operator");
            return RationalFunction::variable(vars, static_cast<int>(it - vars.begin()));
        }
        case Kind::Const: return RationalFunction::constant(vars, e->value);
        case Kind::Neg: return -eval_impl(e->children[0], A, frame_values);
        case Kind::Add:
            return eval_impl(e->children[0], A, frame_values) + eval_impl(e->children[1], A, frame_values);
        case Kind::Sub:
            return eval_impl(e->children[0], A, frame_values) - eval_impl(e->children[1], A, frame_values);
        case Kind::Mul:
            return eval_impl(e->children[0], A, frame_values) * eval_impl(e->children[1], A, frame_values);
        case Kind::Div: {
            RationalFunction d = eval_impl(e->children[1], A, frame_values);
            if (d.is_zero())
                throw degenerate_error("division by an identically vanishing invariant expression");
            return eval_impl(e->children[0], A, frame_values) / d;
        }
        case Kind::Pow: {
            RationalFunction b = eval_impl(e->children[0], A, frame_values);
            if (e->exponent < 0 && b.is_zero())
                throw degenerate_error("negative power of an identically vanishing invariant expression");
            return b.pow(e->exponent);
        }
        case Kind::Box: return apply_op(A, eval_impl(e->children[0], A, frame_values));
        case Kind::Tresse: {
            if (!frame_values)
                throw dimension_error("tresse(...) requires a frame context");
            if (e->slot < 1 || e->slot > static_cast<int>(frame_values->size()))
                throw dimension_error("tresse slot out of range");
            RationalFunction f = eval_impl(e->children[0], A, frame_values);
            return tresse_derivative(f, *frame_values, A.dim(), e->slot);
        }
    }
    throw error("unreachable expression kind");
}

} // namespace

RationalFunction eval_invariant(const ExprPtr& e, const LinearDiffOp& A) {
    return eval_impl(e, A, nullptr);
}

RationalFunction eval_invariant(const ExprPtr& e, const LinearDiffOp& A,
                                const std::vector<RationalFunction>& frame_values) {
    return eval_impl(e, A, &frame_values);
}

RationalFunction box_apply(const LinearDiffOp& A, const RationalFunction& g) {
    return apply_op(A, g);
}

std::vector<RationalFunction> eval_frame(const std::vector<ExprPtr>& frame, const LinearDiffOp& A) {
    // two passes so that tresse(...) entries can reference the plain entries
    std::vector<RationalFunction> values;
    values.reserve(frame.size());
    bool has_tresse = false;
    for (const auto& e : frame) {
        if (e->kind == InvariantExpr::Kind::Tresse) {
            has_tresse = true;
            values.push_back(RationalFunction::constant(A.vars(), Rat(0)));
        } else {
            values.push_back(eval_invariant(e, A));
        }
    }
    if (has_tresse)
        for (std::size_t i = 0; i < frame.size(); ++i)
            if (frame[i]->kind == InvariantExpr::Kind::Tresse)
                values[i] = eval_invariant(frame[i], A, values);
    return values;
}

std::vector<RationalFunction> tresse_derivatives(const RationalFunction& f,
                                                 const std::vector<RationalFunction>& frame_values,
                                                 int dim) {
    if (static_cast<int>(frame_values.size()) != dim)
        throw dimension_error("frame size must equal the geometric dimension");
    RFMatrix m(static_cast<std::size_t>(dim));
    std::vector<RationalFunction> rhs;
    for (int j = 0; j < dim; ++j) {
        auto& row = m[static_cast<std::size_t>(j)];
        row.reserve(static_cast<std::size_t>(dim));
        for (int i = 0; i < dim; ++i) row.push_back(frame_values[static_cast<std::size_t>(i)].derive(j));
        rhs.push_back(f.derive(j));
    }
    return solve_linear(m, rhs);
}

RationalFunction tresse_derivative(const RationalFunction& f,
                                   const std::vector<RationalFunction>& frame_values, int dim,
                                   int slot) {
    return tresse_derivatives(f, frame_values, dim)[static_cast<std::size_t>(slot - 1)];
}

RationalFunction j_alpha(const LinearDiffOp& A, const std::vector<RationalFunction>& frame_values,
                         const MultiIndex& alpha) {
    if (alpha.size() != A.dim()) throw dimension_error("j_alpha multi-index has wrong length");
    if (alpha.total() > A.order()) throw dimension_error("j_alpha requires |alpha| <= operator order");
    RationalFunction prod = RationalFunction::constant(A.vars(), Rat(1));
    for (int i = 0; i < A.dim(); ++i)
        for (int t = 0; t < alpha[i]; ++t) prod = prod * frame_values[static_cast<std::size_t>(i)];
    Rat weight(1);
    weight /= Rat(alpha.factorial());
    return apply_op(A, prod) * weight;
}

RationalFunction coefficient_recovery(const LinearDiffOp& A,
                                      const std::vector<RationalFunction>& frame_values,
                                      const MultiIndex& alpha) {
    std::map<MultiIndex, RationalFunction> j_cache;
    auto j_of = [&](const MultiIndex& b) -> const RationalFunction& {
        auto it = j_cache.find(b);
        if (it == j_cache.end()) it = j_cache.emplace(b, j_alpha(A, frame_values, b)).first;
        return it->second;
    };
    RationalFunction out = RationalFunction::constant(A.vars(), Rat(0));
    std::vector<int> g(static_cast<std::size_t>(alpha.size()), 0);
    for (;;) {
        MultiIndex gi(g);
        RationalFunction term = j_of(alpha - gi);
        for (int i = 0; i < alpha.size(); ++i)
            for (int t = 0; t < gi[i]; ++t) term = term * (-frame_values[static_cast<std::size_t>(i)]);
        Rat w(1);
        w /= Rat(gi.factorial());
        out = out + term * w;
        int i = 0;
        while (i < alpha.size()) {
            if (g[static_cast<std::size_t>(i)] < alpha[i]) {
                ++g[static_cast<std::size_t>(i)];
                std::fill(g.begin(), g.begin() + i, 0);
                break;
            }
            ++i;
        }
        if (i == alpha.size()) break;
    }
    return out;
}

RationalFunction symbol_j_alpha(const SymbolField& sigma, const std::vector<RationalFunction>& h,
                                const MultiIndex& alpha) {
    if (alpha.size() != sigma.dim()) throw dimension_error("symbol_j_alpha multi-index has wrong length");
    if (alpha.total() != sigma.k())
        throw dimension_error("symbol_j_alpha requires |alpha| = k");
    if (static_cast<int>(h.size()) != sigma.dim())
        throw dimension_error("symbol_j_alpha needs dim scalar functions");
    const auto& vars = sigma.vars();
    const int n = sigma.dim();
    const int k = sigma.k();
    // gradient matrix G[i][j] = d h_i / d x_j
    std::vector<std::vector<RationalFunction>> grad;
    for (int i = 0; i < n; ++i) {
        std::vector<RationalFunction> row;
        for (int j = 0; j < n; ++j) row.push_back(h[static_cast<std::size_t>(i)].derive(j));
        grad.push_back(std::move(row));
    }
    // covector slots: function index i repeated alpha_i times
    std::vector<int> cols;
    for (int i = 0; i < n; ++i)
        for (int t = 0; t < alpha[i]; ++t) cols.push_back(i);

    RationalFunction total = RationalFunction::constant(vars, Rat(0));
    for (const auto& [beta, u] : sigma.coeffs()) {
        std::vector<int> dirs;
        for (int j = 0; j < n; ++j)
            for (int t = 0; t < beta[j]; ++t) dirs.push_back(j);
        // permanent over bijections between vector slots and covector slots
        std::vector<int> perm(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) perm[static_cast<std::size_t>(i)] = i;
        RationalFunction per = RationalFunction::constant(vars, Rat(0));
        do {
            RationalFunction prod = RationalFunction::constant(vars, Rat(1));
            for (int a = 0; a < k; ++a)
                prod = prod * grad[static_cast<std::size_t>(cols[static_cast<std::size_t>(perm[static_cast<std::size_t>(a)])])]
                                  [static_cast<std::size_t>(dirs[static_cast<std::size_t>(a)])];
            per = per + prod;
        } while (std::next_permutation(perm.begin(), perm.end()));
        total = total + u * per;
    }
    return total;
}

std::string to_string(GeneralPositionCertificate::Failure f) {
    using F = GeneralPositionCertificate::Failure;
    switch (f) {
        case F::none: return "none";
        case F::degenerate_expr: return "degenerate_expr";
        case F::identically_zero: return "identically_zero";
        case F::vanishes_at_grid_point: return "vanishes_at_grid_point";
        case F::pole_at_grid_point: return "pole_at_grid_point";
    }
    return "?";
}

namespace {

// Grid points of the box reordered to the operator's variable order.
std::vector<std::vector<Rat>> box_grid(const Box& box, const std::vector<std::string>& vars,
                                       int per_axis) {
    std::vector<int> axis(vars.size());
    for (std::size_t v = 0; v < vars.size(); ++v) {
        int a = box.axis(vars[v]);
        if (a < 0) throw data_error("box has no axis for variable '" + vars[v] + "'");
        axis[v] = a;
    }
    std::vector<std::vector<Rat>> levels(vars.size());
    for (std::size_t v = 0; v < vars.size(); ++v) {
        const Rat& lo = box.lo[static_cast<std::size_t>(axis[v])];
        const Rat& hi = box.hi[static_cast<std::size_t>(axis[v])];
        for (int t = 0; t < per_axis; ++t) {
            Rat s(t, per_axis - 1);
            s.canonicalize();
            levels[v].push_back(lo + (hi - lo) * s);
        }
    }
    std::vector<std::vector<Rat>> points;
    std::vector<int> idx(vars.size(), 0);
    for (;;) {
        std::vector<Rat> p;
        p.reserve(vars.size());
        for (std::size_t v = 0; v < vars.size(); ++v) p.push_back(levels[v][static_cast<std::size_t>(idx[v])]);
        points.push_back(std::move(p));
        std::size_t v = 0;
        while (v < vars.size()) {
            if (++idx[v] < per_axis) break;
            idx[v] = 0;
            ++v;
        }
        if (v == vars.size()) break;
    }
    return points;
}

} // namespace

GeneralPositionCertificate general_position_check(const std::vector<ExprPtr>& frame,
                                                  const LinearDiffOp& A, const Box& box,
                                                  int grid_per_axis) {
    GeneralPositionCertificate cert;
    if (grid_per_axis < 2) throw data_error("grid resolution must be >= 2");
    std::vector<RationalFunction> values;
    try {
        values = eval_frame(frame, A);
    } catch (const degenerate_error& e) {
        cert.failure = GeneralPositionCertificate::Failure::degenerate_expr;
        cert.detail = e.what();
        return cert;
    }
    if (static_cast<int>(values.size()) != A.dim())
        throw dimension_error("general position needs exactly dim frame entries");
    RFMatrix m(static_cast<std::size_t>(A.dim()));
    for (int i = 0; i < A.dim(); ++i)
        for (int j = 0; j < A.dim(); ++j)
            m[static_cast<std::size_t>(i)].push_back(values[static_cast<std::size_t>(i)].derive(j));
    cert.det = det(m);
    cert.has_det = true;
    if (cert.det.is_zero()) {
        cert.failure = GeneralPositionCertificate::Failure::identically_zero;
        cert.detail = "frame Jacobian determinant vanishes identically";
        return cert;
    }
    auto points = box_grid(box, A.vars(), grid_per_axis);
    cert.grid_points = static_cast<int>(points.size());
    for (const auto& p : points) {
        try {
            if (cert.det.eval(p) == 0) {
                cert.failure = GeneralPositionCertificate::Failure::vanishes_at_grid_point;
                cert.detail = "frame Jacobian determinant vanishes at a grid point";
                cert.witness = p;
                return cert;
            }
        } catch (const pole_error&) {
            cert.failure = GeneralPositionCertificate::Failure::pole_at_grid_point;
            cert.detail = "frame Jacobian determinant has a pole at a grid point";
            cert.witness = p;
            return cert;
        }
    }
    cert.ok = true;
    cert.witness = points.front();
    return cert;
}

namespace detail {

std::vector<MultiIndex> fingerprint_alphas(int dim, int order) {
    return MultiIndex::all_up_to(dim, order);
}

bool values_match(double a, double b, const ModelConfig& cfg) {
    double diff = std::fabs(a - b);
    double scale = std::max(std::fabs(a), std::fabs(b));
    return diff <= std::max(cfg.tol_match * scale, cfg.abs_floor);
}

std::optional<std::vector<double>> newton_solve(const NewtonFuncs& nf,
                                                const std::vector<Rat>& fixed_tail,
                                                const std::vector<Rat>& target,
                                                const std::vector<double>& start,
                                                const std::vector<double>& lo,
                                                const std::vector<double>& hi,
                                                const ModelConfig& cfg, double* residual_out) {
    const int n = nf.free_dims;
    std::vector<double> y = start;
    const Rat tol = rat_from_double(cfg.tol_root);
    for (int iter = 0; iter <= cfg.max_newton_iter; ++iter) {
        std::vector<Rat> point;
        point.reserve(static_cast<std::size_t>(n) + fixed_tail.size());
        for (double v : y) point.push_back(rat_from_double(v));
        point.insert(point.end(), fixed_tail.begin(), fixed_tail.end());

        std::vector<Rat> f(static_cast<std::size_t>(n));
        Rat worst(0);
        try {
            for (int i = 0; i < n; ++i) {
                f[static_cast<std::size_t>(i)] =
                    (*nf.funcs)[static_cast<std::size_t>(i)].eval(point) - target[static_cast<std::size_t>(i)];
                Rat r = abs(f[static_cast<std::size_t>(i)]) / (1 + abs(target[static_cast<std::size_t>(i)]));
                if (r > worst) worst = r;
            }
        } catch (const pole_error&) {
            return std::nullopt;
        }
        if (worst < tol) {
            for (int i = 0; i < n; ++i) {
                double w = hi[static_cast<std::size_t>(i)] - lo[static_cast<std::size_t>(i)];
                if (y[static_cast<std::size_t>(i)] < lo[static_cast<std::size_t>(i)] - 1e-9 * w ||
                    y[static_cast<std::size_t>(i)] > hi[static_cast<std::size_t>(i)] + 1e-9 * w)
                    return std::nullopt;
            }
            if (residual_out) *residual_out = rat_to_double(worst);
            return y;
        }
        if (iter == cfg.max_newton_iter) break;

        std::vector<std::vector<Rat>> jac(static_cast<std::size_t>(n), std::vector<Rat>(static_cast<std::size_t>(n)));
        try {
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    jac[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                        nf.jac[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].eval(point);
        } catch (const pole_error&) {
            return std::nullopt;
        }
        std::vector<Rat> delta;
        try {
            delta = solve_linear_rat(std::move(jac), std::move(f));
        } catch (const singular_matrix_error&) {
            return std::nullopt;
        }
        bool inside = true;
        for (int i = 0; i < n; ++i) {
            y[static_cast<std::size_t>(i)] =
                rat_to_double(point[static_cast<std::size_t>(i)] - delta[static_cast<std::size_t>(i)]);
            double w = hi[static_cast<std::size_t>(i)] - lo[static_cast<std::size_t>(i)];
            if (y[static_cast<std::size_t>(i)] < lo[static_cast<std::size_t>(i)] - w ||
                y[static_cast<std::size_t>(i)] > hi[static_cast<std::size_t>(i)] + w)
                inside = false;
        }
        if (!inside) return std::nullopt;
    }
    return std::nullopt;
}

} // namespace detail

namespace {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct SampledRow {
    std::vector<Rat> coords; // operator-variable order
    std::vector<double> values;
    int attempts_used = 0;
};

// One fingerprint row: draw from the row's substream until every function
// evaluates (poles rejected); `skip` earlier attempts are consumed first.
SampledRow sample_row(const Box& box, const std::vector<int>& axis_of_var,
                      const std::vector<RationalFunction>& funcs, std::uint64_t seed,
                      int row_index, int skip, int* rejections) {
    RowRng rng(seed, static_cast<std::uint64_t>(row_index));
    const int dim = static_cast<int>(axis_of_var.size());
    for (int attempt = 0; attempt < skip; ++attempt)
        for (int a = 0; a < box.dim(); ++a) rng.uniform01();
    for (int attempt = skip; attempt < skip + 100; ++attempt) {
        std::vector<Rat> by_axis;
        by_axis.reserve(static_cast<std::size_t>(box.dim()));
        for (int a = 0; a < box.dim(); ++a)
            by_axis.push_back(rng.rat_between(box.lo[static_cast<std::size_t>(a)],
                                              box.hi[static_cast<std::size_t>(a)]));
        std::vector<Rat> coords;
        coords.reserve(static_cast<std::size_t>(dim));
        for (int v = 0; v < dim; ++v)
            coords.push_back(by_axis[static_cast<std::size_t>(axis_of_var[static_cast<std::size_t>(v)])]);
        try {
            SampledRow row;
            row.coords = coords;
            row.values.reserve(static_cast<std::size_t>(dim) + funcs.size());
            for (const auto& c : coords) row.values.push_back(rat_to_double(c));
            for (const auto& f : funcs) row.values.push_back(rat_to_double(f.eval(coords)));
            row.attempts_used = attempt + 1;
            return row;
        } catch (const pole_error&) {
            if (rejections) ++*rejections;
        }
    }
    throw degenerate_error("sampling failed: 100 consecutive pole rejections in the box");
}

} // namespace

std::string ModelFingerprint::to_csv() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < x_names.size(); ++i) os << (i ? "," : "") << x_names[i];
    for (const auto& n : frame_names) os << ',' << n;
    for (const auto& a : alphas) {
        os << ",Y";
        for (int i = 0; i < a.size(); ++i) os << '_' << a[i];
    }
    os << '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_double(row[i]);
        os << '\n';
    }
    return os.str();
}

ModelFingerprint model_map(const LinearDiffOp& A, const std::vector<ExprPtr>& frame,
                           const Box& box, const ModelConfig& config,
                           const std::string& frame_src) {
    ModelFingerprint fp;
    fp.config = config;
    fp.frame_src = frame_src;
    fp.box_src = box.str();
    fp.certificate = general_position_check(frame, A, box, config.grid_per_axis);
    if (!fp.certificate.ok)
        throw degenerate_error("general position fails on the box: " +
                               (fp.certificate.detail.empty()
                                    ? to_string(fp.certificate.failure)
                                    : fp.certificate.detail));
    std::vector<RationalFunction> values = eval_frame(frame, A);
    fp.alphas = detail::fingerprint_alphas(A.dim(), A.order());
    std::vector<RationalFunction> funcs = values;
    for (const auto& a : fp.alphas) funcs.push_back(j_alpha(A, values, a));

    fp.x_names = A.vars();
    for (std::size_t i = 0; i < values.size(); ++i) fp.frame_names.push_back("I" + std::to_string(i + 1));

    std::vector<int> axis_of_var;
    for (const auto& v : A.vars()) {
        int a = box.axis(v);
        if (a < 0) throw data_error("box has no axis for variable '" + v + "'");
        axis_of_var.push_back(a);
    }

    const int m = config.samples;
    std::vector<SampledRow> rows(static_cast<std::size_t>(m));
    std::vector<int> rejections(static_cast<std::size_t>(m), 0);
    auto compute = [&](int r, int skip) {
        rows[static_cast<std::size_t>(r)] = sample_row(box, axis_of_var, funcs, config.seed, r, skip,
                                                       &rejections[static_cast<std::size_t>(r)]);
    };
    const int jobs = std::max(config.jobs, 1);
    if (jobs == 1) {
        for (int r = 0; r < m; ++r) compute(r, 0);
    } else {
        std::vector<std::future<void>> futs;
        for (int w = 0; w < jobs; ++w)
            futs.push_back(std::async(std::launch::async, [&, w] {
                for (int r = w; r < m; r += jobs) compute(r, 0);
            }));
        for (auto& f : futs) f.get();
    }

    // keep base coordinates pairwise distinct: redraw the later row
    const int n_base = static_cast<int>(values.size());
    const int dim = A.dim();
    for (int round = 0; round < 100; ++round) {
        bool collision = false;
        for (int i = 0; i < m && !collision; ++i) {
            for (int j = i + 1; j < m && !collision; ++j) {
                bool same = true;
                for (int c = 0; c < n_base; ++c) {
                    double a = rows[static_cast<std::size_t>(i)].values[static_cast<std::size_t>(dim + c)];
                    double b = rows[static_cast<std::size_t>(j)].values[static_cast<std::size_t>(dim + c)];
                    if (!detail::values_match(a, b, config)) {
                        same = false;
                        break;
                    }
                }
                if (same) {
                    collision = true;
                    rejections[static_cast<std::size_t>(j)]++;
                    compute(j, rows[static_cast<std::size_t>(j)].attempts_used);
                }
            }
        }
        if (!collision) break;
        if (round == 99)
            throw degenerate_error("could not draw pairwise-distinct base coordinates (frame nearly constant?)");
    }

    for (int r = 0; r < m; ++r) {
        fp.rows.push_back(std::move(rows[static_cast<std::size_t>(r)].values));
        fp.rejections += rejections[static_cast<std::size_t>(r)];
    }
    return fp;
}

EquivalenceVerdict equivalence_check(const LinearDiffOp& A1, const Box& box1,
                                     const LinearDiffOp& A2, const Box& box2,
                                     const std::vector<ExprPtr>& frame, const ModelConfig& config) {
    EquivalenceVerdict v;
    v.samples = config.samples;
    auto cert1 = general_position_check(frame, A1, box1, config.grid_per_axis);
    if (!cert1.ok) {
        v.reason = "general position fails for operator 1: " +
                   (cert1.detail.empty() ? to_string(cert1.failure) : cert1.detail);
        return v;
    }
    auto cert2 = general_position_check(frame, A2, box2, config.grid_per_axis);
    if (!cert2.ok) {
        v.reason = "general position fails for operator 2: " +
                   (cert2.detail.empty() ? to_string(cert2.failure) : cert2.detail);
        return v;
    }
    if (A1.dim() != A2.dim() || A1.order() != A2.order()) {
        v.reason = "operators have different shape (n, k)";
        return v;
    }
    if (static_cast<int>(A1.vars().size()) != A1.dim())
        throw dimension_error("equivalence_check handles parameter-free operators; use the extended checker");
    const int n = A1.dim();
    std::vector<RationalFunction> i1 = eval_frame(frame, A1);
    std::vector<RationalFunction> i2 = eval_frame(frame, A2);
    auto alphas = detail::fingerprint_alphas(n, A1.order());
    std::vector<RationalFunction> y1, y2;
    for (const auto& a : alphas) {
        y1.push_back(j_alpha(A1, i1, a));
        y2.push_back(j_alpha(A2, i2, a));
    }
    detail::NewtonFuncs nf;
    nf.funcs = &i2;
    nf.free_dims = n;
    for (const auto& f : i2) {
        std::vector<RationalFunction> row;
        for (int j = 0; j < n; ++j) row.push_back(f.derive(j));
        nf.jac.push_back(std::move(row));
    }

    std::vector<int> axis1;
    for (const auto& var : A1.vars()) {
        int a = box1.axis(var);
        if (a < 0) throw data_error("box1 has no axis for variable '" + var + "'");
        axis1.push_back(a);
    }
    std::vector<double> lo2, hi2;
    for (const auto& var : A2.vars()) {
        int a = box2.axis(var);
        if (a < 0) throw data_error("box2 has no axis for variable '" + var + "'");
        lo2.push_back(rat_to_double(box2.lo[static_cast<std::size_t>(a)]));
        hi2.push_back(rat_to_double(box2.hi[static_cast<std::size_t>(a)]));
    }
    // Newton seed grid: per-axis midpoints of a uniform subdivision of box2
    const int spa = std::max(config.newton_seeds_per_axis, 1);
    std::vector<std::vector<double>> seeds;
    {
        std::vector<int> idx(static_cast<std::size_t>(n), 0);
        for (;;) {
            std::vector<double> s(static_cast<std::size_t>(n));
            for (int d = 0; d < n; ++d)
                s[static_cast<std::size_t>(d)] =
                    lo2[static_cast<std::size_t>(d)] +
                    (hi2[static_cast<std::size_t>(d)] - lo2[static_cast<std::size_t>(d)]) *
                        ((idx[static_cast<std::size_t>(d)] + 0.5) / spa);
            seeds.push_back(std::move(s));
            int d = 0;
            while (d < n) {
                if (++idx[static_cast<std::size_t>(d)] < spa) break;
                idx[static_cast<std::size_t>(d)] = 0;
                ++d;
            }
            if (d == n) break;
        }
    }

    std::vector<RationalFunction> sample_funcs = i1;
    for (const auto& f : y1) sample_funcs.push_back(f);

    for (int s = 0; s < config.samples; ++s) {
        SampledRow row = sample_row(box1, axis1, sample_funcs, config.seed,
                                    s, 0, &v.rejections);
        std::vector<Rat> target;
        std::vector<double> x_dbl(row.values.begin(), row.values.begin() + n);
        for (int i = 0; i < n; ++i)
            target.push_back(sample_funcs[static_cast<std::size_t>(i)].eval(row.coords));

        bool matched = false;
        bool any_root = false;
        bool found_mismatch = false;
        std::vector<std::vector<double>> roots;
        EquivalenceVerdict::Separator sep;
        for (const auto& seed : seeds) {
            double residual = 0;
            auto yopt = detail::newton_solve(nf, {}, target, seed, lo2, hi2, config, &residual);
            if (!yopt) continue;
            // dedupe
            bool dup = false;
            for (const auto& r : roots) {
                double d = 0;
                for (int i = 0; i < n; ++i)
                    d = std::max(d, std::fabs(r[static_cast<std::size_t>(i)] - (*yopt)[static_cast<std::size_t>(i)]));
                if (d < 1e-7 * (1 + std::fabs((*yopt)[0]))) {
                    dup = true;
                    break;
                }
            }
            if (dup) continue;
            roots.push_back(*yopt);
            any_root = true;
            std::vector<Rat> ypt;
            for (double c : *yopt) ypt.push_back(rat_from_double(c));
            bool all_ok = true;
            for (std::size_t a = 0; a < alphas.size(); ++a) {
                double lhs = row.values[static_cast<std::size_t>(n + static_cast<int>(i1.size()) +
                                                                 static_cast<int>(a))];
                double rhs;
                try {
                    rhs = rat_to_double(y2[a].eval(ypt));
                } catch (const pole_error&) {
                    all_ok = false;
                    break;
                }
                if (!detail::values_match(lhs, rhs, config)) {
                    all_ok = false;
                    if (!found_mismatch) {
                        std::string key;
                        for (int i = 0; i < alphas[a].size(); ++i)
                            key += (i ? "," : "") + std::to_string(alphas[a][i]);
                        sep = {x_dbl, *yopt, key, lhs, rhs};
                        found_mismatch = true;
                    }
                    break;
                }
            }
            if (all_ok) {
                matched = true;
                v.witnesses.push_back({x_dbl, *yopt, residual});
                break;
            }
        }
        if (matched) {
            ++v.matched;
        } else if (any_root && found_mismatch) {
            ++v.separators;
            if (!v.separator) v.separator = sep;
        } else {
            ++v.no_root;
        }
    }

    if (v.separators > 0) {
        v.kind = EquivalenceVerdict::Kind::Distinct;
        v.reason = "base-matched preimage with mismatching Y_" + v.separator->alpha;
    } else if (v.matched >= config.match_threshold * config.samples) {
        v.kind = EquivalenceVerdict::Kind::Equivalent;
        v.reason = "matched " + std::to_string(v.matched) + " of " + std::to_string(v.samples) + " samples";
    } else {
        v.kind = EquivalenceVerdict::Kind::Inconclusive;
        if (v.matched == 0 && v.no_root == v.samples)
            v.reason = "range mismatch: no base-coordinate preimages found in box2";
        else
            v.reason = "only " + std::to_string(v.matched) + " of " + std::to_string(v.samples) +
                       " samples matched (Newton failures or partial overlap)";
    }
    return v;
}

} // namespace tresse
