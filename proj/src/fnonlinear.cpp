#include "tresse/fnonlinear.hpp"

#include "tresse/errors.hpp"

#include <algorithm>

namespace tresse {

FOperator::FOperator(LinearDiffOp op) : op_(std::move(op)) {
    if (static_cast<int>(op_.vars().size()) != op_.dim() + 1 ||
        op_.vars().back() != "u")
        throw dimension_error("an F-operator has exactly one parameter variable, named 'u', last");
}

LinearDiffOp restrict_at_function(const FOperator& A, const RationalFunction& f) {
    std::vector<std::string> xvars(A.vars().begin(), A.vars().end() - 1);
    if (f.vars() != xvars)
        throw dimension_error("restriction function must live over the x variables");
    SubstMap m;
    for (int i = 0; i < A.n(); ++i) m.emplace(xvars[static_cast<std::size_t>(i)], RationalFunction::variable(xvars, i));
    m.emplace("u", f);
    std::map<MultiIndex, RationalFunction> coeffs;
    for (const auto& [a, c] : A.as_linear().coeffs())
        coeffs.emplace(a, substitute(c, xvars, m));
    return LinearDiffOp(xvars, A.n(), A.order(), std::move(coeffs));
}

RationalFunction nonlinear_apply(const FOperator& A, const RationalFunction& f) {
    return apply_op(restrict_at_function(A, f), f);
}

RationalFunction vertical_derivative(const ExprPtr& e, const FOperator& A,
                                     const RationalFunction& f) {
    std::vector<std::string> xvars(A.vars().begin(), A.vars().end() - 1);
    if (f.vars() != xvars)
        throw dimension_error("vertical derivative function must live over the x variables");
    std::vector<std::string> evars = xvars;
    evars.push_back("_eps");
    // A_{f+eps}: substitute u := f + eps, keeping eps symbolic
    SubstMap m;
    for (int i = 0; i < A.n(); ++i)
        m.emplace(xvars[static_cast<std::size_t>(i)], RationalFunction::variable(evars, i));
    RationalFunction shifted = RationalFunction(f.num().extended(evars), f.den().extended(evars)) +
                               RationalFunction::variable(evars, A.n());
    m.emplace("u", shifted);
    std::map<MultiIndex, RationalFunction> coeffs;
    for (const auto& [a, c] : A.as_linear().coeffs())
        coeffs.emplace(a, substitute(c, evars, m));
    LinearDiffOp shifted_op(evars, A.n(), A.order(), std::move(coeffs));

    RationalFunction value = eval_invariant(e, shifted_op);
    RationalFunction d = value.derive(A.n()); // d/d eps
    SubstMap back;
    for (int i = 0; i < A.n(); ++i)
        back.emplace(xvars[static_cast<std::size_t>(i)], RationalFunction::variable(xvars, i));
    back.emplace("_eps", RationalFunction::constant(xvars, Rat(0)));
    return substitute(d, xvars, back);
}

FOperator pushforward0(const FOperator& A, const DiffMap& phi) {
    return FOperator(pushforward(A.as_linear(), phi));
}

AdjustedCertificate verify_adjusted(const AdjustedTriple& triple, int grid_per_axis) {
    AdjustedCertificate cert;
    const LinearDiffOp& A = triple.op.as_linear();
    const int n = triple.op.n();
    if (static_cast<int>(triple.frame.size()) != n) {
        cert.detail = "frame must provide exactly n invariant expressions";
        return cert;
    }
    std::vector<RationalFunction> values;
    try {
        values = eval_frame(triple.frame, A);
    } catch (const degenerate_error& e) {
        cert.detail = std::string("degenerate frame ingredient: ") + e.what();
        return cert;
    }
    // (adj ext): d I_i(A) / du == 0
    for (int i = 0; i < n; ++i) {
        if (!values[static_cast<std::size_t>(i)].derive(triple.op.u_index()).is_zero()) {
            cert.detail = "frame invariant I" + std::to_string(i + 1) + " depends on u (adj ext fails)";
            return cert;
        }
    }
    // Jacobian of (u, I_1..I_n) in (x_1..x_n, u)
    const auto& vars = A.vars();
    RFMatrix m;
    {
        std::vector<RationalFunction> row;
        for (int j = 0; j <= n; ++j)
            row.push_back(RationalFunction::constant(vars, Rat(j == n ? 1 : 0)));
        m.push_back(std::move(row));
    }
    for (int i = 0; i < n; ++i) {
        std::vector<RationalFunction> row;
        for (int j = 0; j <= n; ++j) row.push_back(values[static_cast<std::size_t>(i)].derive(j));
        m.push_back(std::move(row));
    }
    cert.det = det(m);
    cert.has_det = true;
    if (cert.det.is_zero()) {
        cert.detail = "Jacobian of (u, I_1..I_n) vanishes identically";
        return cert;
    }
    std::vector<int> axis_of_var;
    for (const auto& var : vars) {
        int a = triple.box.axis(var);
        if (a < 0) throw data_error("box has no axis for variable '" + var + "'");
        axis_of_var.push_back(a);
    }
    std::vector<std::vector<Rat>> levels;
    for (int v = 0; v <= n; ++v) {
        std::vector<Rat> lv;
        const Rat& lo = triple.box.lo[static_cast<std::size_t>(axis_of_var[static_cast<std::size_t>(v)])];
        const Rat& hi = triple.box.hi[static_cast<std::size_t>(axis_of_var[static_cast<std::size_t>(v)])];
        for (int t = 0; t < grid_per_axis; ++t) {
            Rat s(t, grid_per_axis - 1);
            s.canonicalize();
            lv.push_back(lo + (hi - lo) * s);
        }
        levels.push_back(std::move(lv));
    }
    std::vector<int> idx(static_cast<std::size_t>(n) + 1, 0);
    for (;;) {
        std::vector<Rat> p;
        for (int v = 0; v <= n; ++v) p.push_back(levels[static_cast<std::size_t>(v)][static_cast<std::size_t>(idx[static_cast<std::size_t>(v)])]);
        ++cert.grid_points;
        try {
            if (cert.det.eval(p) == 0) {
                cert.detail = "Jacobian of (u, I_1..I_n) vanishes at a grid point";
                cert.witness = p;
                return cert;
            }
        } catch (const pole_error&) {
            cert.detail = "Jacobian of (u, I_1..I_n) has a pole at a grid point";
            cert.witness = p;
            return cert;
        }
        std::size_t v = 0;
        while (v <= static_cast<std::size_t>(n)) {
            if (++idx[v] < grid_per_axis) break;
            idx[v] = 0;
            ++v;
        }
        if (v > static_cast<std::size_t>(n)) break;
    }
    cert.ok = true;
    return cert;
}

ModelFingerprint extended_model_map(const AdjustedTriple& triple, const ModelConfig& config) {
    auto cert = verify_adjusted(triple, config.grid_per_axis);
    if (!cert.ok) throw degenerate_error("triple is not adjusted: " + cert.detail);
    const LinearDiffOp& A = triple.op.as_linear();
    const int n = triple.op.n();
    std::vector<RationalFunction> values = eval_frame(triple.frame, A);

    ModelFingerprint fp;
    fp.config = config;
    fp.frame_src = triple.frame_src;
    fp.box_src = triple.box.str();
    fp.certificate.ok = cert.ok;
    fp.certificate.has_det = cert.has_det;
    fp.certificate.det = cert.det;
    fp.certificate.grid_points = cert.grid_points;
    fp.alphas = detail::fingerprint_alphas(n, A.order());

    // columns: x.., u, then u again as base coordinate y0? keep y0 == the u
    // column itself; base columns are (u, I_1..I_n) with u shared with the
    // sample coordinates.
    fp.x_names = A.vars();
    fp.frame_names.push_back("u");
    for (int i = 0; i < n; ++i) fp.frame_names.push_back("I" + std::to_string(i + 1));

    std::vector<RationalFunction> funcs;
    funcs.push_back(RationalFunction::variable(A.vars(), triple.op.u_index()));
    for (const auto& f : values) funcs.push_back(f);
    for (const auto& a : fp.alphas) funcs.push_back(j_alpha(A, values, a));

    std::vector<int> axis_of_var;
    for (const auto& var : A.vars()) {
        int a = triple.box.axis(var);
        if (a < 0) throw data_error("box has no axis for variable '" + var + "'");
        axis_of_var.push_back(a);
    }
    const Box& box = triple.box;
    const int m = config.samples;
    const int dim = static_cast<int>(A.vars().size());
    const int n_base = n + 1;
    std::vector<std::vector<double>> rows(static_cast<std::size_t>(m));
    std::vector<int> attempts_used(static_cast<std::size_t>(m), 0);
    auto compute = [&](int r, int skip) {
        RowRng rng(config.seed, static_cast<std::uint64_t>(r));
        for (int a = 0; a < skip; ++a)
            for (int ax = 0; ax < box.dim(); ++ax) rng.uniform01();
        for (int attempt = skip; attempt < skip + 100; ++attempt) {
            std::vector<Rat> by_axis;
            for (int ax = 0; ax < box.dim(); ++ax)
                by_axis.push_back(rng.rat_between(box.lo[static_cast<std::size_t>(ax)],
                                                  box.hi[static_cast<std::size_t>(ax)]));
            std::vector<Rat> coords;
            for (std::size_t v = 0; v < A.vars().size(); ++v)
                coords.push_back(by_axis[static_cast<std::size_t>(axis_of_var[v])]);
            try {
                std::vector<double> row;
                for (const auto& c : coords) row.push_back(rat_to_double(c));
                for (const auto& f : funcs) row.push_back(rat_to_double(f.eval(coords)));
                rows[static_cast<std::size_t>(r)] = std::move(row);
                attempts_used[static_cast<std::size_t>(r)] = attempt + 1;
                return;
            } catch (const pole_error&) {
                ++fp.rejections;
            }
        }
        throw degenerate_error("sampling failed: 100 consecutive pole rejections in the box");
    };
    for (int r = 0; r < m; ++r) compute(r, 0);
    for (int round = 0; round < 100; ++round) {
        bool collision = false;
        for (int i = 0; i < m && !collision; ++i) {
            for (int j = i + 1; j < m && !collision; ++j) {
                bool same = true;
                for (int c = 0; c < n_base; ++c) {
                    if (!detail::values_match(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(dim + c)],
                                              rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(dim + c)],
                                              config)) {
                        same = false;
                        break;
                    }
                }
                if (same) {
                    collision = true;
                    ++fp.rejections;
                    compute(j, attempts_used[static_cast<std::size_t>(j)]);
                }
            }
        }
        if (!collision) break;
        if (round == 99)
            throw degenerate_error("could not draw pairwise-distinct base coordinates (frame nearly constant?)");
    }
    fp.rows = std::move(rows);
    return fp;
}

EquivalenceVerdict extended_equivalence_check(const AdjustedTriple& t1, const AdjustedTriple& t2,
                                              const ModelConfig& config) {
    if (t1.frame_src != t2.frame_src)
        throw data_error("extended equivalence requires identical frame expressions for both triples");
    EquivalenceVerdict v;
    v.samples = config.samples;
    auto cert1 = verify_adjusted(t1, config.grid_per_axis);
    if (!cert1.ok) {
        v.reason = "triple 1 is not adjusted: " + cert1.detail;
        return v;
    }
    auto cert2 = verify_adjusted(t2, config.grid_per_axis);
    if (!cert2.ok) {
        v.reason = "triple 2 is not adjusted: " + cert2.detail;
        return v;
    }
    const LinearDiffOp& A1 = t1.op.as_linear();
    const LinearDiffOp& A2 = t2.op.as_linear();
    if (A1.dim() != A2.dim() || A1.order() != A2.order()) {
        v.reason = "operators have different shape (n, k)";
        return v;
    }
    const int n = A1.dim();
    std::vector<RationalFunction> i1 = eval_frame(t1.frame, A1);
    std::vector<RationalFunction> i2 = eval_frame(t2.frame, A2);
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
        int a = t1.box.axis(var);
        if (a < 0) throw data_error("box1 has no axis for variable '" + var + "'");
        axis1.push_back(a);
    }
    std::vector<double> lo2, hi2;
    for (int d = 0; d < n; ++d) {
        int a = t2.box.axis(A2.vars()[static_cast<std::size_t>(d)]);
        if (a < 0) throw data_error("box2 has no axis for variable '" + A2.vars()[static_cast<std::size_t>(d)] + "'");
        lo2.push_back(rat_to_double(t2.box.lo[static_cast<std::size_t>(a)]));
        hi2.push_back(rat_to_double(t2.box.hi[static_cast<std::size_t>(a)]));
    }
    int u_axis2 = t2.box.axis("u");
    if (u_axis2 < 0) throw data_error("box2 has no axis for variable 'u'");
    const Rat& u2_lo = t2.box.lo[static_cast<std::size_t>(u_axis2)];
    const Rat& u2_hi = t2.box.hi[static_cast<std::size_t>(u_axis2)];

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

    for (int s = 0; s < config.samples; ++s) {
        // sample (x, u) in box1
        RowRng rng(config.seed, static_cast<std::uint64_t>(s));
        std::vector<Rat> coords;
        bool have = false;
        std::vector<Rat> target;
        for (int attempt = 0; attempt < 100 && !have; ++attempt) {
            std::vector<Rat> by_axis;
            for (int a = 0; a < t1.box.dim(); ++a)
                by_axis.push_back(rng.rat_between(t1.box.lo[static_cast<std::size_t>(a)],
                                                  t1.box.hi[static_cast<std::size_t>(a)]));
            coords.clear();
            for (std::size_t vv = 0; vv < A1.vars().size(); ++vv)
                coords.push_back(by_axis[static_cast<std::size_t>(axis1[vv])]);
            try {
                target.clear();
                for (const auto& f : i1) target.push_back(f.eval(coords));
                have = true;
            } catch (const pole_error&) {
                ++v.rejections;
            }
        }
        if (!have) throw degenerate_error("sampling failed: 100 consecutive pole rejections in box1");
        const Rat u0 = coords.back();
        std::vector<double> x_dbl;
        for (const auto& c : coords) x_dbl.push_back(rat_to_double(c));

        if (u0 < u2_lo || u0 > u2_hi) {
            ++v.no_root; // u is matched exactly; this slice is outside box2
            continue;
        }

        bool matched = false;
        bool any_root = false;
        bool found_mismatch = false;
        std::vector<std::vector<double>> roots;
        EquivalenceVerdict::Separator sep;
        for (const auto& seed : seeds) {
            double residual = 0;
            auto yopt = detail::newton_solve(nf, {u0}, target, seed, lo2, hi2, config, &residual);
            if (!yopt) continue;
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
            ypt.push_back(u0);
            bool all_ok = true;
            for (std::size_t a = 0; a < alphas.size(); ++a) {
                double lhs, rhs;
                try {
                    lhs = rat_to_double(y1[a].eval(coords));
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
                        std::vector<double> y_dbl = *yopt;
                        y_dbl.push_back(rat_to_double(u0));
                        sep = {x_dbl, y_dbl, key, lhs, rhs};
                        found_mismatch = true;
                    }
                    break;
                }
            }
            if (all_ok) {
                matched = true;
                std::vector<double> y_dbl = *yopt;
                y_dbl.push_back(rat_to_double(u0));
                v.witnesses.push_back({x_dbl, y_dbl, residual});
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
