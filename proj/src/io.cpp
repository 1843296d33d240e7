#include "tresse/io.hpp"

#include "tresse/errors.hpp"
#include "tresse/parse.hpp"

#include <fstream>
#include <sstream>

namespace tresse {

using nlohmann::json;

namespace {

json parse_json(const std::string& text, const std::string& what) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw data_error("invalid JSON in " + what);
    return j;
}

std::vector<std::string> string_list(const json& j, const char* key, const std::string& what) {
    if (!j.contains(key) || !j[key].is_array())
        throw data_error(what + ": missing or non-array \"" + key + "\"");
    std::vector<std::string> out;
    for (const auto& e : j[key]) {
        if (!e.is_string()) throw data_error(what + ": \"" + std::string(key) + "\" entries must be strings");
        out.push_back(e.get<std::string>());
    }
    return out;
}

} // namespace

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw data_error("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw data_error("cannot write file: " + path);
    out << text;
}

NAryForm load_form(const json& j) {
    auto vars = string_list(j, "variables", "form");
    if (!j.contains("degree") || !j["degree"].is_number_integer())
        throw data_error("form: missing integer \"degree\"");
    int degree = j["degree"].get<int>();
    if (!j.contains("polynomial") || !j["polynomial"].is_string())
        throw data_error("form: missing string \"polynomial\"");
    Polynomial p;
    try {
        p = parse_polynomial(j["polynomial"].get<std::string>(), vars);
    } catch (const parse_error& e) {
        throw data_error(std::string("form polynomial: ") + e.what());
    }
    try {
        return NAryForm(static_cast<int>(vars.size()), degree, std::move(p));
    } catch (const dimension_error& e) {
        throw data_error(std::string("form: ") + e.what());
    }
}

NAryForm load_form_file(const std::string& path) {
    return load_form(parse_json(read_file(path), path));
}

json form_to_json(const NAryForm& f) {
    json j;
    j["variables"] = f.poly().vars();
    j["degree"] = f.degree();
    j["polynomial"] = f.poly().str();
    return j;
}

LinearDiffOp load_operator(const json& j, bool allow_u) {
    auto vars = string_list(j, "variables", "operator");
    const int dim = static_cast<int>(vars.size());
    for (const auto& v : vars)
        if (v == "u" && allow_u) throw data_error("operator: \"u\" is reserved, list only base variables");
    if (allow_u) vars.push_back("u");
    if (!j.contains("order") || !j["order"].is_number_integer())
        throw data_error("operator: missing integer \"order\"");
    int order = j["order"].get<int>();
    if (order < 0) throw data_error("operator: order must be >= 0");
    if (!j.contains("coefficients") || !j["coefficients"].is_object())
        throw data_error("operator: missing object \"coefficients\"");
    std::map<MultiIndex, RationalFunction> coeffs;
    for (const auto& [key, val] : j["coefficients"].items()) {
        MultiIndex a = MultiIndex::parse_key(key, dim);
        if (a.total() > order)
            throw data_error("operator: coefficient key \"" + key + "\" exceeds the declared order");
        if (!val.is_string()) throw data_error("operator: coefficient \"" + key + "\" must be a string expression");
        RationalFunction c;
        try {
            c = parse_expr(val.get<std::string>(), vars);
        } catch (const parse_error& e) {
            throw data_error("operator coefficient \"" + key + "\": " + e.what());
        }
        if (!c.is_zero()) coeffs.emplace(a, std::move(c));
    }
    bool has_top = false;
    for (const auto& [a, c] : coeffs)
        if (a.total() == order) has_top = true;
    if (order > 0 && !has_top)
        throw data_error("operator: declared order " + std::to_string(order) +
                         " but no nonzero top-order coefficient");
    return LinearDiffOp(std::move(vars), dim, order, std::move(coeffs));
}

LinearDiffOp load_operator_file(const std::string& path, bool allow_u) {
    return load_operator(parse_json(read_file(path), path), allow_u);
}

json operator_to_json(const LinearDiffOp& a) {
    json j;
    std::vector<std::string> base(a.vars().begin(), a.vars().begin() + a.dim());
    j["variables"] = base;
    j["order"] = a.order();
    json c = json::object();
    for (const auto& [k, v] : a.coeffs()) c[k.key()] = v.str();
    j["coefficients"] = c;
    return j;
}

FOperator load_foperator(const json& j) {
    return FOperator(load_operator(j, true));
}

FOperator load_foperator_file(const std::string& path) {
    return load_foperator(parse_json(read_file(path), path));
}

AdjustedTriple load_triple(const json& j) {
    if (!j.contains("operator")) throw data_error("triple: missing \"operator\"");
    FOperator op = load_foperator(j["operator"]);
    if (!j.contains("box") || !j["box"].is_string()) throw data_error("triple: missing string \"box\"");
    Box box = Box::parse(j["box"].get<std::string>());
    if (!j.contains("frame") || !j["frame"].is_string()) throw data_error("triple: missing string \"frame\"");
    std::string frame_src = j["frame"].get<std::string>();
    std::vector<ExprPtr> frame;
    try {
        frame = parse_frame(frame_src, op.vars());
    } catch (const parse_error& e) {
        throw data_error(std::string("triple frame: ") + e.what());
    }
    if (static_cast<int>(frame.size()) != op.n())
        throw data_error("triple frame must provide exactly n expressions (the u slot is implicit)");
    return AdjustedTriple{std::move(op), std::move(box), std::move(frame), std::move(frame_src)};
}

AdjustedTriple load_triple_file(const std::string& path) {
    return load_triple(parse_json(read_file(path), path));
}

json certificate_to_json(const GeneralPositionCertificate& c) {
    json j;
    j["ok"] = c.ok;
    j["failure"] = to_string(c.failure);
    if (!c.detail.empty()) j["detail"] = c.detail;
    j["grid_points"] = c.grid_points;
    if (!c.witness.empty()) {
        json w = json::array();
        for (const auto& r : c.witness) w.push_back(rat_to_string(r));
        j[c.ok ? "witness_point" : "failure_point"] = w;
    }
    if (c.has_det) j["jacobian_det"] = c.det.str();
    return j;
}

json config_to_json(const ModelConfig& c) {
    json j;
    j["samples"] = c.samples;
    j["seed"] = c.seed;
    j["tol_root"] = c.tol_root;
    j["tol_match"] = c.tol_match;
    j["abs_floor"] = c.abs_floor;
    j["max_newton_iter"] = c.max_newton_iter;
    j["newton_seeds_per_axis"] = c.newton_seeds_per_axis;
    j["grid_per_axis"] = c.grid_per_axis;
    j["match_threshold"] = c.match_threshold;
    j["jobs"] = c.jobs;
    j["prng"] = "mt19937_64; row r seeded with splitmix64(seed xor golden*(r+1)); "
                "uniforms from the top 53 bits";
    return j;
}

json fingerprint_metadata(const ModelFingerprint& fp) {
    json j;
    j["frame"] = fp.frame_src;
    j["box"] = fp.box_src;
    j["config"] = config_to_json(fp.config);
    j["rejections"] = fp.rejections;
    j["certificate"] = certificate_to_json(fp.certificate);
    json cols = json::array();
    for (const auto& n : fp.x_names) cols.push_back(n);
    for (const auto& n : fp.frame_names) cols.push_back(n);
    for (const auto& a : fp.alphas) {
        std::string key = "Y";
        for (int i = 0; i < a.size(); ++i) key += "_" + std::to_string(a[i]);
        cols.push_back(key);
    }
    j["columns"] = cols;
    j["rows"] = fp.rows.size();
    return j;
}

json verdict_to_json(const EquivalenceVerdict& v, const ModelConfig& cfg) {
    json j;
    switch (v.kind) {
        case EquivalenceVerdict::Kind::Equivalent: j["verdict"] = "Equivalent"; break;
        case EquivalenceVerdict::Kind::Distinct: j["verdict"] = "Distinct"; break;
        case EquivalenceVerdict::Kind::Inconclusive: j["verdict"] = "Inconclusive"; break;
    }
    j["reason"] = v.reason;
    j["samples"] = v.samples;
    j["matched"] = v.matched;
    j["separators"] = v.separators;
    j["unmatched_without_root"] = v.no_root;
    j["rejections"] = v.rejections;
    j["config"] = config_to_json(cfg);
    json ws = json::array();
    for (const auto& w : v.witnesses) {
        json e;
        e["x"] = w.x;
        e["y"] = w.y;
        e["residual"] = w.residual;
        ws.push_back(e);
    }
    j["witnesses"] = ws;
    if (v.separator) {
        json s;
        s["x"] = v.separator->x;
        s["y"] = v.separator->y;
        s["separating_coordinate"] = "Y_" + v.separator->alpha;
        s["lhs"] = v.separator->lhs;
        s["rhs"] = v.separator->rhs;
        j["separator"] = s;
    }
    return j;
}

json invariant_reports_to_json(const std::vector<InvariantReport>& rows) {
    json arr = json::array();
    for (const auto& r : rows) {
        json e;
        e["name"] = r.name;
        e["value"] = r.value;
        e["path"] = r.path;
        e["defined"] = r.defined;
        if (r.regular.has_value()) e["regular"] = *r.regular;
        if (!r.note.empty()) e["note"] = r.note;
        arr.push_back(e);
    }
    return arr;
}

} // namespace tresse
