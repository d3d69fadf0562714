#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "germlab/constructions.hpp"
#include "germlab/errors.hpp"
#include "germlab/knots.hpp"
#include "germlab/model_io.hpp"
#include "germlab/verify.hpp"
#include "germlab/version.hpp"

namespace {

using germlab::GermModel;
using germlab::InvalidInput;
using germlab::Rational;
using json = nlohmann::ordered_json;

struct Options {
    std::string build_id;
    std::string model_file;
    std::string suite;
    std::string k = "5";
    int i = 0;
    std::string q = "3";
    std::string beta = "2";
    std::string p = "5/2";
    double t = 0.125;
    int resolution = 256;
    std::uint64_t seed = 0;
    std::string out;
    std::string format = "json";
    std::string surgery;
    std::string knot_table;
};

// "dir/name.json" -> "dir/name.X1.json"
std::string member_path(const std::string& path, const std::string& member,
                        const std::string& ext) {
    std::string stem = path;
    std::size_t slash = stem.find_last_of('/');
    std::size_t dot = stem.find_last_of('.');
    if (dot != std::string::npos && (slash == std::string::npos || dot > slash))
        stem = stem.substr(0, dot);
    return stem + "." + member + "." + ext;
}

std::string replace_ext(const std::string& path, const std::string& ext) {
    std::string stem = path;
    std::size_t slash = stem.find_last_of('/');
    std::size_t dot = stem.find_last_of('.');
    if (dot != std::string::npos && (slash == std::string::npos || dot > slash))
        stem = stem.substr(0, dot);
    return stem + "." + ext;
}

std::vector<std::pair<std::string, GermModel>> build_models(const Options& o) {
    auto pair_of = [](std::pair<GermModel, GermModel> p) {
        std::vector<std::pair<std::string, GermModel>> out;
        out.emplace_back("X1", std::move(p.first));
        out.emplace_back("X2", std::move(p.second));
        return out;
    };
    if (o.build_id == "example1")
        return pair_of(germlab::build_example1(germlab::parse_rational(o.k)));
    if (o.build_id == "example3") return pair_of(germlab::build_example3());
    if (o.build_id == "example4") return pair_of(germlab::build_example4());
    if (o.build_id == "family") return {{"", germlab::build_family(o.i)}};
    if (o.build_id == "family-knot")
        return {{"", germlab::attach_connected_sum(germlab::build_family(o.i),
                                                   germlab::knot_by_name("trefoil").points,
                                                   "trefoil")}};
    if (o.build_id == "family-segment")
        return {{"", germlab::remove_holder_triangle(germlab::build_family(o.i),
                                                     germlab::parse_rational(o.beta))}};
    if (o.build_id == "bridge")
        return {{"", germlab::build_bridge(germlab::parse_rational(o.q),
                                           germlab::parse_rational(o.beta))}};
    throw InvalidInput("unknown example id '" + o.build_id +
                       "'; expected example1, example3, example4, family, family-knot, "
                       "family-segment or bridge");
}

void apply_surgery(GermModel& model, const Options& o) {
    if (o.surgery.empty()) return;
    if (o.surgery != "break-bridge")
        throw InvalidInput("unknown surgery '" + o.surgery + "'; expected break-bridge");
    model = germlab::break_bridge(model, 0, germlab::parse_rational(o.p));
}

int run_build(const Options& o) {
    auto models = build_models(o);
    for (auto& [member, model] : models) apply_surgery(model, o);

    std::string base = o.out.empty() ? o.build_id + "." + o.format : o.out;
    germlab::SectionOptions opts;
    opts.resolution = o.resolution;
    for (auto& [member, model] : models) {
        std::string path = member.empty() ? replace_ext(base, o.format)
                                          : member_path(base, member, o.format);
        if (o.format == "json") {
            germlab::save_model(model, path);
        } else {
            germlab::PolyLink link = germlab::section_at(model, o.t, opts);
            germlab::write_text_file(path, o.format == "obj" ? germlab::link_to_obj(link)
                                                             : germlab::link_to_csv(link));
        }
        std::cout << o.build_id << (member.empty() ? "" : " " + member) << ": wrote " << path
                  << " (" << model.sheets.size() << " sheets, " << model.arcs.size()
                  << " arcs, " << model.bridges.size() << " bridges)\n";
    }
    return 0;
}

// Names of report entries the invariant pass could not compute.
std::vector<std::string> degenerate_entries(const json& report) {
    std::vector<std::string> bad;
    if (report.contains("alexander") && report["alexander"].is_string())
        bad.push_back("alexander");
    if (report.contains("linking"))
        for (const auto& entry : report["linking"])
            if (entry.contains("lk") && entry["lk"].is_null()) bad.push_back("linking");
    if (report.contains("tangent_cone") && report["tangent_cone"].is_string())
        bad.push_back("tangent_cone");
    return bad;
}

int run_invariants(const Options& o) {
    GermModel model = germlab::load_model(o.model_file);
    apply_surgery(model, o);
    germlab::SectionOptions opts;
    opts.resolution = o.resolution;
    json report = germlab::invariants_report(model, o.t, o.seed, opts);

    std::string path = o.out.empty() ? replace_ext(o.model_file, "report.json") : o.out;
    germlab::write_text_file(path, report.dump(2) + "\n");

    std::vector<std::string> bad = degenerate_entries(report);
    if (!bad.empty()) {
        std::cerr << "invariants: degenerate entries:";
        for (const std::string& name : bad) std::cerr << " " << name;
        std::cerr << " (see " << path << ")\n";
        return 1;
    }
    std::cout << "invariants: wrote " << path;
    if (report.contains("link"))
        std::cout << " (" << report["link"]["components"] << " components)";
    std::cout << "\n";
    return 0;
}

int run_verify(const Options& o) {
    germlab::SectionOptions opts;
    opts.resolution = o.resolution;
    germlab::VerificationReport rep = germlab::run_suite(o.suite, o.seed, o.knot_table, opts);

    int failed = 0;
    for (const germlab::CheckResult& c : rep.checks) {
        if (!c.pass) ++failed;
        std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << "  expected " << c.expected
                  << "  observed " << c.observed << "  tol " << c.tolerance << "\n";
    }
    std::string path = o.out.empty() ? "verify-" + o.suite + ".json" : o.out;
    germlab::write_text_file(path, rep.to_json().dump(2) + "\n");
    std::cout << "suite " << o.suite << ": " << (rep.checks.size() - failed) << "/"
              << rep.checks.size() << " checks passed, report " << path << " ("
              << rep.runtime_seconds << "s)\n";
    return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    Options o;
    CLI::App app{std::string(germlab::kToolName) + " " + germlab::kToolVersion +
                 ": surface-germ models and their link invariants"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--t", o.t, "section scale");
        cmd->add_option("--resolution", o.resolution, "grid cells per unit of t");
        cmd->add_option("--seed", o.seed, "random seed for projections");
        cmd->add_option("--out", o.out, "output path");
        cmd->add_option("--surgery", o.surgery, "surgery to apply (break-bridge)");
        cmd->add_option("--p", o.p, "bridge-breaking exponent");
    };

    CLI::App* build = app.add_subcommand("build", "construct a model and write it to disk");
    build->add_option("id", o.build_id, "example id")->required();
    build->add_option("--k", o.k, "tangency parameter");
    build->add_option("--i", o.i, "number of twists");
    build->add_option("--q", o.q, "bridge tip exponent");
    build->add_option("--beta", o.beta, "bridge width exponent");
    build->add_option("--format", o.format, "json (model), obj or csv (section at --t)")
        ->check(CLI::IsMember({"json", "obj", "csv"}));
    add_common(build);

    CLI::App* invariants =
        app.add_subcommand("invariants", "compute link invariants of a model file");
    invariants->add_option("model", o.model_file, "model file")->required();
    add_common(invariants);

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", o.suite, "suite name")->required();
    verify->add_option("--knot-table", o.knot_table, "extra knot table file to validate");
    add_common(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (const char* env_seed = std::getenv("GERMLAB_SEED")) {
        try {
            o.seed = std::stoull(env_seed);
        } catch (const std::exception&) {
            std::cerr << "error: GERMLAB_SEED must be an unsigned integer\n";
            return 2;
        }
    }

    try {
        if (build->parsed()) return run_build(o);
        if (invariants->parsed()) return run_invariants(o);
        return run_verify(o);
    } catch (const germlab::InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const germlab::ComputationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
