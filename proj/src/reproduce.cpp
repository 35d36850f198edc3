#include "ingham/reproduce.hpp"

#include "ingham/error.hpp"
#include "ingham/format.hpp"
#include "ingham/geometry.hpp"
#include "ingham/polyomino.hpp"
#include "ingham/search.hpp"
#include "ingham/verify.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>

namespace ingham {

namespace {

bool passes_at(const SurveyRecord& r, double tol) { return r.kappa2 > 0 && r.gap() > tol; }

class Evaluator {
public:
    explicit Evaluator(const ReproductionOptions& options) : options_(options) {}

    std::vector<double> evaluate(const CatalogEntry& entry, const ExpectedRecord& rec) {
        const LatticeSpec& spec = entry.spec;
        const std::string& q = rec.quantity;
        auto need_config = [&]() -> const TranslationConfig& {
            if (!rec.config) throw Error(ErrorCode::InvalidConfig, "record '" + rec.label + "' needs a config");
            return *rec.config;
        };
        if (q == "a2") return {ingham_constants(spec, need_config(), options_.rel_tol).satisfies_a2 ? 1.0 : 0.0};
        if (q == "pair") {
            const SpectralResult s = ingham_constants(spec, need_config(), options_.rel_tol);
            return {s.kappa1, s.kappa2};
        }
        if (q == "survey_passing_pairs") {
            // The passing pair farthest from the expected one.
            const SurveyResult& s = survey(spec, rec.grid);
            std::vector<double> worst;
            double worst_dev = -1;
            for (const SurveyRecord& r : s.records) {
                if (!r.a2) continue;
                const double dev = std::max(std::abs(r.kappa1 - rec.values.at(0)), std::abs(r.kappa2 - rec.values.at(1)));
                if (dev > worst_dev) {
                    worst_dev = dev;
                    worst = {r.kappa1, r.kappa2};
                }
            }
            return worst;
        }
        if (q == "failing") return {static_cast<double>(survey(spec, rec.grid).failing)};
        if (q == "passing") return {static_cast<double>(survey(spec, rec.grid).passing)};
        if (q == "connected_passing")
            return {static_cast<double>(connected_survey(spec, static_cast<int>(spec.m()), options_.rel_tol).passing)};
        if (q == "sweep_unstable") {
            std::size_t unstable = 0;
            for (const SurveyRecord& r : survey(spec, rec.grid).records) {
                const bool first = passes_at(r, kToleranceSweep[0]);
                for (double t : kToleranceSweep)
                    if (passes_at(r, t) != first) {
                        ++unstable;
                        break;
                    }
            }
            return {static_cast<double>(unstable)};
        }
        if (q == "area") {
            const DomainGeometry g = omega_cells(spec, need_config());
            return {area_check(g, spec)};
        }
        if (q == "half_diameter") return {0.5 * omega_cells(spec, need_config()).diameter};
        if (q == "r_necessary") return {disk_bounds(omega_cells(spec, need_config())).r_necessary};
        if (q == "r_bessel") return {disk_bounds(omega_cells(spec, need_config())).r_bessel};
        if (q == "density_ratio") {
            const CatalogEntry tri = get("triangular");
            const CatalogEntry hex = get("honeycomb");
            const double a = omega_cells(tri.spec, tri.default_configs.front().config).area;
            const double b = omega_cells(hex.spec, hex.default_configs.front().config).area;
            return {a / b};
        }
        if (q == "fixed_polyominoes") return {static_cast<double>(fixed_polyominoes(rec.size).size())};
        throw Error(ErrorCode::InvalidSpec, "unknown quantity '" + q + "' in record '" + rec.label + "'");
    }

    const std::map<std::pair<std::string, int>, SurveyResult>& surveys() const { return surveys_; }

private:
    const SurveyResult& survey(const LatticeSpec& spec, int grid) {
        auto key = std::make_pair(spec.name, grid);
        auto it = surveys_.find(key);
        if (it == surveys_.end())
            it = surveys_
                     .emplace(key, classify_all(spec, grid, static_cast<int>(spec.m()), options_.rel_tol, options_.threads))
                     .first;
        return it->second;
    }

    const ReproductionOptions& options_;
    std::map<std::pair<std::string, int>, SurveyResult> surveys_;
};

bool within(const ExpectedRecord& rec, const std::vector<double>& computed) {
    if (computed.size() != rec.values.size()) return false;
    for (std::size_t i = 0; i < computed.size(); ++i)
        if (!(std::abs(computed[i] - rec.values[i]) <= rec.tolerance)) return false;
    return true;
}

double rounded(double x) { return std::stod(fixed(x)); }

void write_honeycomb_witness(const std::filesystem::path& dir) {
    const CatalogEntry hex = get("honeycomb");
    const TranslationConfig& config = hex.default_configs.front().config;
    const BBox hole = central_hole(omega_cells(hex.spec, config).cells.front());
    std::vector<SupportSet> supports;
    for (int side = 1; side <= 4; ++side) supports.push_back(box_support(hex.spec.m(), side));
    std::ofstream out(dir / "honeycomb_witness.csv");
    write_witness_csv(out, supports, removal_witness(hex.spec, config, hole, supports));
}

}  // namespace

std::string to_string(EntryStatus status) {
    switch (status) {
        case EntryStatus::Pass: return "pass";
        case EntryStatus::Fail: return "fail";
        case EntryStatus::Discrepancy: return "discrepancy";
    }
    return "fail";
}

ReproductionReport run_reproduction(const std::vector<CatalogEntry>& catalog, const ReproductionOptions& options) {
    ReproductionReport report;
    report.rel_tol = options.rel_tol;
    Evaluator evaluator(options);
    for (const CatalogEntry& entry : catalog) {
        for (const ExpectedRecord& rec : entry.expected) {
            ReproductionEntry e;
            e.tiling = entry.spec.name;
            e.expected = rec;
            e.computed = evaluator.evaluate(entry, rec);
            if (within(rec, e.computed))
                e.status = EntryStatus::Pass;
            else
                e.status = rec.known_discrepancy ? EntryStatus::Discrepancy : EntryStatus::Fail;
            switch (e.status) {
                case EntryStatus::Pass: ++report.passed; break;
                case EntryStatus::Fail: ++report.failed; break;
                case EntryStatus::Discrepancy: ++report.discrepancies; break;
            }
            report.entries.push_back(std::move(e));
        }
    }

    if (options.out_dir) {
        const std::filesystem::path dir(*options.out_dir);
        std::filesystem::create_directories(dir / "surveys");
        for (const auto& [key, result] : evaluator.surveys()) {
            std::ofstream csv(dir / "surveys" / (key.first + "_grid" + std::to_string(key.second) + ".csv"));
            write_survey_csv(csv, result);
        }
        write_honeycomb_witness(dir);
        std::ofstream json(dir / "report.json");
        json << report_to_json(report).dump(2) << '\n';
    }
    return report;
}

nlohmann::ordered_json report_to_json(const ReproductionReport& report) {
    nlohmann::ordered_json j;
    j["tool"] = "ingham reproduce";
    j["version"] = "1.0.0";
    j["rel_tol"] = report.rel_tol;
    j["tolerance_sweep"] = kToleranceSweep;
    j["randomness"] = "none";
    j["summary"] = {{"total", report.entries.size()},
                    {"pass", report.passed},
                    {"fail", report.failed},
                    {"discrepancy", report.discrepancies},
                    {"ok", report.ok()}};
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (const ReproductionEntry& e : report.entries) {
        nlohmann::ordered_json item;
        item["tiling"] = e.tiling;
        item["status"] = to_string(e.status);
        nlohmann::ordered_json expected = record_to_json(e.expected);
        for (auto it = expected.begin(); it != expected.end(); ++it) item[it.key()] = it.value();
        std::vector<double> computed;
        for (double x : e.computed) computed.push_back(rounded(x));
        item["computed"] = computed;
        entries.push_back(item);
    }
    j["entries"] = entries;
    return j;
}

}  // namespace ingham
