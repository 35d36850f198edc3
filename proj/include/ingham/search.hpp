#pragma once

#include "ingham/spectral.hpp"

#include <json.hpp>

#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

namespace ingham {

struct SurveyRecord {
    TranslationConfig config;
    bool connected = false;
    bool a2 = false;
    double kappa1 = 0;
    double kappa2 = 0;
    /// κ₂/κ₁, present only when the configuration passes (A2).
    std::optional<double> ratio;

    /// κ₁/κ₂, the quantity the (A2) tolerance is compared against.
    double gap() const noexcept { return kappa2 > 0 ? kappa1 / kappa2 : 0.0; }
};

struct SurveyResult {
    std::size_t total = 0;
    std::size_t passing = 0;
    std::size_t failing = 0;
    double rel_tol = kDefaultA2Tolerance;
    std::vector<SurveyRecord> records;  ///< sorted lexicographically by config
};

struct TranslationClass {
    TranslationConfig representative;  ///< min-translated, points sorted
    std::size_t members = 0;
};

/// C(n, k), exact for the sizes used here.
std::uint64_t binomial(unsigned n, unsigned k);

/// Visits every m-subset of {0..grid_max}² in lexicographic order of point
/// indices (point (a,b) has index a·(grid_max+1)+b).
void enumerate_configs(int grid_max, int m, const std::function<void(const TranslationConfig&)>& visit);
std::vector<TranslationConfig> all_configs(int grid_max, int m);

/// Evaluates every config in parallel; output order does not depend on scheduling.
SurveyResult classify_configs(const LatticeSpec& spec, std::span<const TranslationConfig> configs,
                              double rel_tol = kDefaultA2Tolerance, unsigned threads = 0);

SurveyResult classify_all(const LatticeSpec& spec, int grid_max, int m, double rel_tol = kDefaultA2Tolerance,
                          unsigned threads = 0);

/// Survey over the fixed polyominoes with spec.M cells.
SurveyResult connected_survey(const LatticeSpec& spec, int m, double rel_tol = kDefaultA2Tolerance);

/// Number of records failing (A2) at another tolerance, reusing stored spectra.
std::size_t count_failing(const SurveyResult& result, double rel_tol);

/// Passing records, ascending by κ₂/κ₁, ties broken by config.
std::vector<SurveyRecord> rank_by_conditioning(const SurveyResult& result);

std::vector<TranslationClass> translation_classes(std::span<const TranslationConfig> configs);

/// Min-translated, sorted copy of a config.
TranslationConfig canonical_config(const TranslationConfig& config);

/// "a,b;a,b;…"
std::string format_config(const TranslationConfig& config);
TranslationConfig parse_config(std::string_view text);

/// One row per config: cells, connected, a2, kappa1, kappa2, ratio.
void write_survey_csv(std::ostream& os, const SurveyResult& result);
nlohmann::ordered_json survey_summary_json(const SurveyResult& result);

bool config_less(const TranslationConfig& a, const TranslationConfig& b);

}  // namespace ingham
