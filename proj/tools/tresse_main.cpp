#include "tresse/errors.hpp"
#include "tresse/io.hpp"
#include "tresse/parse.hpp"
#include "tresse/transvectant.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>

namespace {

constexpr int kExitEquivalent = 0;
constexpr int kExitDistinct = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 64;
constexpr int kExitData = 65;
constexpr int kExitInternal = 70;

void emit(const std::string& text, const std::string& output) {
    if (output.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
    } else {
        tresse::write_file(output, text);
    }
}

struct CommonOpts {
    std::string input, input2, input3;
    std::string frame, box, box2;
    std::string output;
    std::string format = "json";
    tresse::ModelConfig cfg;
};

int verdict_exit(const tresse::EquivalenceVerdict& v) {
    switch (v.kind) {
        case tresse::EquivalenceVerdict::Kind::Equivalent: return kExitEquivalent;
        case tresse::EquivalenceVerdict::Kind::Distinct: return kExitDistinct;
        case tresse::EquivalenceVerdict::Kind::Inconclusive: return kExitInconclusive;
    }
    return kExitInternal;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Transvectant invariants of forms and natural invariants of differential operators"};
    app.require_subcommand(1);

    CommonOpts o;
    std::string catalog;
    unsigned transvect_order = 0;

    auto add_tolerances = [&](CLI::App* cmd) {
        cmd->add_option("--samples", o.cfg.samples, "Sample count");
        cmd->add_option("--seed", o.cfg.seed, "PRNG seed");
        cmd->add_option("--tol-root", o.cfg.tol_root, "Newton residual tolerance");
        cmd->add_option("--tol-match", o.cfg.tol_match, "Relative Y-coordinate match tolerance");
        cmd->add_option("--jobs", o.cfg.jobs, "Parallel sampling jobs");
    };

    CLI::App* inv = app.add_subcommand("invariants", "Catalog invariants of a form");
    inv->add_option("--input", o.input, "Form JSON file")->required();
    inv->add_option("--catalog", catalog, "quartic|quintic|ternary-cubic")->required();
    inv->add_option("--output", o.output, "Output path (stdout if omitted)");
    inv->add_option("--format", o.format, "json");

    CLI::App* tv = app.add_subcommand("transvect", "Transvectant of forms");
    tv->add_option("--input", o.input, "First form JSON file")->required();
    tv->add_option("--input2", o.input2, "Second form (defaults to the first)");
    tv->add_option("--input3", o.input3, "Third form, for ternary transvectants");
    tv->add_option("--order", transvect_order, "Transvectant order l")->required();
    tv->add_option("--output", o.output, "Output path");

    CLI::App* model = app.add_subcommand("model", "Sampled model fingerprint of an operator");
    model->add_option("--input", o.input, "Operator JSON file")->required();
    model->add_option("--frame", o.frame, "Frame expressions, comma separated")->required();
    model->add_option("--box", o.box, "Domain box, e.g. \"x1:1:2,x2:0:1\"")->required();
    model->add_option("--output", o.output, "CSV output path (metadata sidecar <path>.meta.json)");
    add_tolerances(model);

    CLI::App* equiv = app.add_subcommand("equiv", "Decide equivalence of two linear operators");
    equiv->add_option("--input", o.input, "Operator 1 JSON file")->required();
    equiv->add_option("--box", o.box, "Domain box of operator 1")->required();
    equiv->add_option("--input2", o.input2, "Operator 2 JSON file")->required();
    equiv->add_option("--box2", o.box2, "Domain box of operator 2")->required();
    equiv->add_option("--frame", o.frame, "Frame expressions")->required();
    equiv->add_option("--output", o.output, "Report output path");
    add_tolerances(equiv);

    CLI::App* fequiv = app.add_subcommand("fequiv", "Decide equivalence of two adjusted F-operator triples");
    fequiv->add_option("--input", o.input, "Triple 1 JSON file")->required();
    fequiv->add_option("--input2", o.input2, "Triple 2 JSON file")->required();
    fequiv->add_option("--output", o.output, "Report output path");
    add_tolerances(fequiv);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (inv->parsed()) {
            tresse::NAryForm f = tresse::load_form_file(o.input);
            auto rows = tresse::catalog_report(f, catalog);
            nlohmann::json j;
            j["catalog"] = catalog;
            j["form"] = tresse::form_to_json(f);
            j["invariants"] = tresse::invariant_reports_to_json(rows);
            emit(j.dump(2), o.output);
            return 0;
        }
        if (tv->parsed()) {
            tresse::NAryForm f1 = tresse::load_form_file(o.input);
            std::vector<tresse::NAryForm> fs;
            fs.push_back(f1);
            if (!o.input2.empty()) fs.push_back(tresse::load_form_file(o.input2));
            if (!o.input3.empty()) fs.push_back(tresse::load_form_file(o.input3));
            while (static_cast<int>(fs.size()) < f1.n()) fs.push_back(fs.back());
            if (static_cast<int>(fs.size()) != f1.n())
                throw tresse::data_error("transvectant needs exactly n = " + std::to_string(f1.n()) + " forms");
            tresse::NAryForm r = tresse::transvectant(fs, transvect_order);
            emit(tresse::form_to_json(r).dump(2), o.output);
            return 0;
        }
        if (model->parsed()) {
            tresse::LinearDiffOp a = tresse::load_operator_file(o.input);
            auto frame = tresse::parse_frame(o.frame, a.vars());
            tresse::Box box = tresse::Box::parse(o.box);
            tresse::ModelFingerprint fp;
            try {
                fp = tresse::model_map(a, frame, box, o.cfg, o.frame);
            } catch (const tresse::degenerate_error& e) {
                std::cerr << "degenerate: " << e.what() << "\n";
                return kExitInconclusive;
            }
            if (o.output.empty()) {
                std::cout << fp.to_csv();
                std::cout << "# metadata: " << tresse::fingerprint_metadata(fp).dump() << "\n";
            } else {
                tresse::write_file(o.output, fp.to_csv());
                tresse::write_file(o.output + ".meta.json", tresse::fingerprint_metadata(fp).dump(2) + "\n");
            }
            return 0;
        }
        if (equiv->parsed()) {
            tresse::LinearDiffOp a1 = tresse::load_operator_file(o.input);
            tresse::LinearDiffOp a2 = tresse::load_operator_file(o.input2);
            auto frame = tresse::parse_frame(o.frame, a1.vars());
            tresse::Box b1 = tresse::Box::parse(o.box);
            tresse::Box b2 = tresse::Box::parse(o.box2);
            auto v = tresse::equivalence_check(a1, b1, a2, b2, frame, o.cfg);
            emit(tresse::verdict_to_json(v, o.cfg).dump(2), o.output);
            return verdict_exit(v);
        }
        if (fequiv->parsed()) {
            tresse::AdjustedTriple t1 = tresse::load_triple_file(o.input);
            tresse::AdjustedTriple t2 = tresse::load_triple_file(o.input2);
            auto v = tresse::extended_equivalence_check(t1, t2, o.cfg);
            emit(tresse::verdict_to_json(v, o.cfg).dump(2), o.output);
            return verdict_exit(v);
        }
    } catch (const tresse::degenerate_error& e) {
        std::cerr << "degenerate: " << e.what() << "\n";
        return kExitInconclusive;
    } catch (const tresse::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}
