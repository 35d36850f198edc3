#include "ingham/commands.hpp"

#include "ingham/catalog.hpp"
#include "ingham/error.hpp"
#include "ingham/format.hpp"
#include "ingham/geometry.hpp"
#include "ingham/reproduce.hpp"
#include "ingham/search.hpp"
#include "ingham/spec_io.hpp"
#include "ingham/two_square.hpp"
#include "ingham/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace ingham {

namespace {

using ordered_json = nlohmann::ordered_json;

struct TilingArgs {
    std::string tiling;
    std::string spec_file;
    std::string r;
    std::string big_r;
};

void add_tiling_options(CLI::App* cmd, TilingArgs& a, bool required = true) {
    auto* t = cmd->add_option("--tiling,-t", a.tiling, "catalog name (see `catalog list`)");
    auto* f = cmd->add_option("--spec-file", a.spec_file, "custom tiling JSON, overrides --tiling");
    if (required) t->excludes(f);
    cmd->add_option("--r", a.r, "small square side for two_square, e.g. 1 or 1/2");
    cmd->add_option("--R", a.big_r, "large square side for two_square");
}

// Resolves --tiling/--spec-file/--r/--R into a catalog entry. Custom specs
// get an entry with no configs or expectations.
CatalogEntry resolve(const TilingArgs& a) {
    if (!a.spec_file.empty()) {
        CatalogEntry e;
        e.spec = load_spec_file(a.spec_file);
        e.description = "custom tiling from " + a.spec_file;
        for (std::size_t j = 0; j < e.spec.m(); ++j) e.minimality_witnesses.push_back(exact_point(e.spec, {j, {0, 0}}));
        return e;
    }
    if (a.tiling.empty()) throw Error(ErrorCode::UnknownTiling, "no tiling given (use --tiling or --spec-file)");
    if (a.tiling == "two_square" && (!a.r.empty() || !a.big_r.empty())) {
        const Rational r = Rational::parse(a.r.empty() ? "1" : a.r);
        const Rational big_r = Rational::parse(a.big_r.empty() ? "3" : a.big_r);
        return get("two_square_r" + r.str() + "_R" + big_r.str());
    }
    return get(a.tiling);
}

double tolerance_from_env() {
    const char* env = std::getenv("INGHAM_TOL");
    if (env == nullptr || *env == '\0') return kDefaultA2Tolerance;
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0) || !(v < 1))
        throw Error(ErrorCode::ParseError, std::string("INGHAM_TOL must be a number in (0, 1), got '") + env + "'");
    return v;
}

TranslationConfig config_or_default(const std::string& text, const CatalogEntry& e) {
    if (!text.empty()) return parse_config(text);
    if (e.default_configs.empty())
        throw Error(ErrorCode::InvalidConfig, "tiling '" + e.spec.name + "' has no default config; pass --config");
    return e.default_configs.front().config;
}

BBox parse_box(const std::string& text) {
    std::vector<double> v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            v.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw Error(ErrorCode::ParseError, "bad box '" + text + "', want x0,y0,x1,y1");
        }
    }
    if (v.size() != 4) throw Error(ErrorCode::ParseError, "bad box '" + text + "', want x0,y0,x1,y1");
    return BBox{v[0], v[1], v[2], v[3]};
}

double json_number(double x) { return std::stod(fixed(x)); }

std::string matrix_text(const LatticeSpec& s) {
    std::ostringstream os;
    os << "[[" << s.l_star[0][0].str() << ", " << s.l_star[0][1].str() << "], [" << s.l_star[1][0].str() << ", "
       << s.l_star[1][1].str() << "]]";
    return os.str();
}

int cmd_catalog_list(std::ostream& out, bool json) {
    if (json) {
        ordered_json list = ordered_json::array();
        for (const std::string& name : catalog_names()) {
            const CatalogEntry e = get(name);
            list.push_back({{"name", name},
                            {"m", e.spec.m()},
                            {"d", e.spec.field()},
                            {"parametric", name == "two_square"},
                            {"description", e.description}});
        }
        out << list.dump(2) << '\n';
        return kExitOk;
    }
    out << std::left << std::setw(24) << "name" << std::setw(4) << "M" << std::setw(4) << "d" << "description\n";
    for (const std::string& name : catalog_names()) {
        const CatalogEntry e = get(name);
        std::string desc = e.description;
        if (name == "two_square") desc = "tiling by squares of sides r < R (parametric: --r, --R; default r=1, R=3)";
        out << std::setw(24) << name << std::setw(4) << e.spec.m() << std::setw(4) << e.spec.field() << desc << '\n';
    }
    return kExitOk;
}

int cmd_catalog_show(std::ostream& out, const CatalogEntry& e, bool json) {
    if (json) {
        out << entry_to_json(e).dump(2) << '\n';
        return kExitOk;
    }
    const LatticeSpec& s = e.spec;
    out << "name: " << s.name << '\n' << "description: " << e.description << '\n';
    out << "M = " << s.m() << ", field Q(sqrt(" << s.field() << "))\n";
    out << "L* = " << matrix_text(s) << '\n';
    if (s.scale != 1.0) out << "scale = " << fixed(s.scale, 12) << '\n';
    for (std::size_t j = 0; j < s.m(); ++j)
        out << "u_" << j + 1 << " = (" << s.us[j][0].str() << ", " << s.us[j][1].str() << ")\n";
    out << "|det L| = " << fixed(s.abs_det_l(), 12) << '\n';
    out << "minimality certificate: "
        << (minimality_certificate(s, e.minimality_witnesses) ? "holds" : "not established") << '\n';
    for (const NamedConfig& c : e.default_configs) out << "config " << c.label << ": " << format_config(c.config) << '\n';
    for (const ExpectedRecord& r : e.expected) {
        out << "expected " << r.label << " (" << to_string(r.kind) << "):";
        for (double v : r.values) out << ' ' << v;
        out << (r.known_discrepancy ? "  [known discrepancy]" : "") << '\n';
    }
    return kExitOk;
}

int cmd_constants(std::ostream& out, const CatalogEntry& e, const TranslationConfig& config, double tol) {
    const SpectralResult s = ingham_constants(e.spec, config, tol);
    ordered_json j;
    j["tiling"] = e.spec.name;
    j["config"] = format_config(config);
    j["a2"] = s.satisfies_a2;
    j["kappa1"] = json_number(s.kappa1);
    j["kappa2"] = json_number(s.kappa2);
    j["c1_full"] = json_number(s.satisfies_a2 ? s.c1_full : 0.0);
    j["c2_full"] = json_number(s.c2_full);
    j["connected"] = is_connected(config.ns);
    j["rel_tol"] = tol;
    out << j.dump(2) << '\n';
    return kExitOk;
}

int cmd_survey(std::ostream& out, const CatalogEntry& e, int grid, bool connected_only, const std::string& csv_path,
               double tol, unsigned threads) {
    const int m = static_cast<int>(e.spec.m());
    const SurveyResult result = connected_only ? connected_survey(e.spec, m, tol) : classify_all(e.spec, grid, m, tol, threads);
    if (!csv_path.empty()) {
        std::ofstream csv(csv_path);
        if (!csv) throw Error(ErrorCode::ParseError, "cannot write '" + csv_path + "'");
        write_survey_csv(csv, result);
    }
    ordered_json j;
    j["tiling"] = e.spec.name;
    j["scope"] = connected_only ? "connected" : "grid";
    if (!connected_only) j["grid"] = grid;
    const ordered_json summary = survey_summary_json(result);
    for (auto it = summary.begin(); it != summary.end(); ++it) j[it.key()] = it.value();
    out << j.dump(2) << '\n';
    return kExitOk;
}

int cmd_verify(std::ostream& out, const CatalogEntry& e, const TranslationConfig& config, int radius,
               const std::string& hole_text, const std::string& csv_path, double tol) {
    if (radius < 0) throw Error(ErrorCode::InvalidConfig, "--support-radius must be >= 0");
    ordered_json j;
    j["tiling"] = e.spec.name;
    j["config"] = format_config(config);
    const SupportSet support = centered_support(e.spec.m(), radius);
    const FrameCheck fc = frame_bound_check(e.spec, config, support, tol);
    j["support_size"] = support.size();
    j["lambda_min"] = json_number(fc.lambda_min);
    j["lambda_max"] = json_number(fc.lambda_max);
    j["c1_full"] = json_number(fc.c1_full);
    j["c2_full"] = json_number(fc.c2_full);
    j["a2"] = fc.a2;
    j["pass"] = fc.pass;
    if (!hole_text.empty()) {
        const BBox hole = parse_box(hole_text);
        std::vector<SupportSet> supports;
        for (int side = 1; side <= radius + 1; ++side) supports.push_back(box_support(e.spec.m(), side));
        const std::vector<double> lambdas = removal_witness(e.spec, config, hole, supports);
        ordered_json w = ordered_json::array();
        for (std::size_t i = 0; i < supports.size(); ++i)
            w.push_back({{"support_size", supports[i].size()}, {"lambda_min", json_number(lambdas[i])}});
        j["hole"] = {hole.x0, hole.y0, hole.x1, hole.y1};
        j["witness"] = w;
        if (!csv_path.empty()) {
            std::ofstream csv(csv_path);
            if (!csv) throw Error(ErrorCode::ParseError, "cannot write '" + csv_path + "'");
            write_witness_csv(csv, supports, lambdas);
        }
    }
    out << j.dump(2) << '\n';
    return fc.pass ? kExitOk : kExitMismatch;
}

int cmd_reproduce(std::ostream& out, std::ostream& err, const std::string& dir, double tol, unsigned threads) {
    ReproductionOptions options;
    options.rel_tol = tol;
    options.threads = threads;
    if (!dir.empty()) options.out_dir = dir;
    const auto start = std::chrono::steady_clock::now();
    const ReproductionReport report = run_reproduction(reproduction_catalog(), options);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    for (const ReproductionEntry& e : report.entries) {
        out << std::left << std::setw(12) << to_string(e.status) << std::setw(24) << e.tiling << std::setw(36)
            << e.expected.label << "expected";
        for (double v : e.expected.values) out << ' ' << v;
        out << "  computed";
        for (double v : e.computed) out << ' ' << fixed(v, 6);
        out << '\n';
    }
    out << "summary: " << report.passed << " pass, " << report.failed << " fail, " << report.discrepancies
        << " documented discrepancies\n";
    err << "reproduce finished in " << fixed(seconds, 2) << " s\n";
    return report.ok() ? kExitOk : kExitMismatch;
}

int cmd_export(std::ostream& out, const CatalogEntry& e, const std::string& what, const std::string& box_text,
               const std::string& config_text) {
    if (what == "points") {
        const BBox box = parse_box(box_text.empty() ? "0,0,4,4" : box_text);
        out << "j,m1,m2,x,y\n";
        for (const RealizedPoint& p : realize_points(e.spec, box))
            out << p.tag.j << ',' << p.tag.m[0] << ',' << p.tag.m[1] << ',' << fixed(p.position[0], 12) << ','
                << fixed(p.position[1], 12) << '\n';
        return kExitOk;
    }
    if (what == "domain") {
        write_polygons_csv(out, omega_cells(e.spec, config_or_default(config_text, e)));
        return kExitOk;
    }
    throw Error(ErrorCode::ParseError, "--what must be points or domain");
}

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::UnknownTiling:
        case ErrorCode::ParseError:
        case ErrorCode::InvalidConfig:
        case ErrorCode::SizeMismatch:
        case ErrorCode::DegenerateTiling:
        case ErrorCode::HoleOutsideDomain:
        case ErrorCode::EmptySupport:
        case ErrorCode::SizeTooLarge:
        case ErrorCode::InvalidSpec:
        case ErrorCode::SingularL:
        case ErrorCode::DuplicateTranslate:
        case ErrorCode::FieldMismatch: return kExitUsage;
        default: return kExitMismatch;
    }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Ingham-type estimates for exponentials on lattice tilings"};
    app.require_subcommand(1);
    unsigned threads = 0;
    app.add_option("--threads", threads, "worker threads for surveys (0 = hardware)");

    auto* catalog = app.add_subcommand("catalog", "list or show built-in tilings");
    catalog->require_subcommand(1);
    bool list_json = false;
    auto* list = catalog->add_subcommand("list", "list tiling names");
    list->add_flag("--json", list_json, "JSON output");
    bool show_json = false;
    std::string show_name;
    auto* show = catalog->add_subcommand("show", "print exact data, configs and expected values");
    show->add_option("name", show_name, "tiling name")->required();
    show->add_flag("--json", show_json, "JSON output");

    TilingArgs tiling;
    std::string config_text;

    auto* constants = app.add_subcommand("constants", "(A2) verdict and Ingham constants for one config");
    add_tiling_options(constants, tiling);
    constants->add_option("--config,-c", config_text, "grid points \"a,b;a,b;...\" (default: first catalog config)");

    int grid = 3;
    bool connected_only = false;
    std::string csv_path;
    auto* survey = app.add_subcommand("survey", "classify every M-subset of {0..grid}^2");
    add_tiling_options(survey, tiling);
    survey->add_option("--grid,-g", grid, "grid bound g (points in {0..g}^2)")->check(CLI::Range(0, 6));
    survey->add_flag("--connected-only", connected_only, "only fixed polyominoes with M cells");
    survey->add_option("--csv", csv_path, "write one row per config to this file");

    int radius = 1;
    std::string hole_text;
    auto* verify = app.add_subcommand("verify", "Gram-matrix spectra on finite supports");
    add_tiling_options(verify, tiling);
    verify->add_option("--config,-c", config_text, "grid points \"a,b;a,b;...\"");
    verify->add_option("--support-radius,-k", radius, "support {|m|_inf <= k} for the frame check")->check(CLI::Range(0, 6));
    verify->add_option("--hole", hole_text, "rectangle x0,y0,x1,y1 removed from the domain");
    verify->add_option("--csv", csv_path, "witness CSV (with --hole)");

    std::string out_dir;
    auto* reproduce = app.add_subcommand("reproduce", "recompute every published value and write a report");
    reproduce->add_option("--out,-o", out_dir, "directory for report.json and CSVs");

    std::string what;
    std::string box_text;
    auto* exp = app.add_subcommand("export", "CSV figure data");
    add_tiling_options(exp, tiling);
    exp->add_option("--what", what, "points or domain")->required()->check(CLI::IsMember({"points", "domain"}));
    exp->add_option("--bbox", box_text, "x0,y0,x1,y1 for points (default 0,0,4,4)");
    exp->add_option("--config,-c", config_text, "grid points for the domain");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        const double tol = tolerance_from_env();
        if (list->parsed()) return cmd_catalog_list(out, list_json);
        if (show->parsed()) return cmd_catalog_show(out, get(show_name), show_json);
        if (constants->parsed()) {
            const CatalogEntry e = resolve(tiling);
            return cmd_constants(out, e, config_or_default(config_text, e), tol);
        }
        if (survey->parsed()) return cmd_survey(out, resolve(tiling), grid, connected_only, csv_path, tol, threads);
        if (verify->parsed()) {
            const CatalogEntry e = resolve(tiling);
            return cmd_verify(out, e, config_or_default(config_text, e), radius, hole_text, csv_path, tol);
        }
        if (reproduce->parsed()) return cmd_reproduce(out, err, out_dir, tol, threads);
        if (exp->parsed()) return cmd_export(out, resolve(tiling), what, box_text, config_text);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitMismatch;
    }
    return kExitUsage;
}

}  // namespace ingham
