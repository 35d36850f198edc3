#pragma once

// Built-in tilings with exact lattice data, the configurations studied for
// each, and the published values the reproduction run checks against.

#include "ingham/spectral.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace ingham {

enum class ExpectedKind { A2Verdict, KappaPair, SurveyCount, Area, Diameter, RadiusBound, PolyominoCount };

std::string to_string(ExpectedKind kind);

/// One published value and how to recompute it.
///
/// `quantity` selects the computation:
///   a2                    verdict for `config` (values {1} or {0})
///   pair                  (κ₁, κ₂) for `config`
///   survey_passing_pairs  every passing κ-pair of the grid survey equals `values`
///   failing / passing     survey counts over {0..grid}², M points
///   connected_passing     passing fixed polyominoes with M cells
///   sweep_unstable        configs whose verdict changes over rel_tol ∈ {1e-12, …, 1e-4}
///   area, half_diameter, r_necessary, r_bessel   geometry of Ω for `config`
///   density_ratio         |Ω_triangular| / |Ω_honeycomb| for the default configs
///   fixed_polyominoes     number of fixed polyominoes with `size` cells
struct ExpectedRecord {
    ExpectedKind kind = ExpectedKind::KappaPair;
    std::string label;
    std::string quantity;
    std::optional<TranslationConfig> config;
    int grid = 3;
    int size = 0;
    std::vector<double> values;
    double tolerance = 0;  ///< absolute, per value
    std::string source;
    /// Set when the published value cannot be reproduced from the published data;
    /// the text states why.
    std::optional<std::string> known_discrepancy;
};

struct NamedConfig {
    std::string label;
    TranslationConfig config;
};

struct CatalogEntry {
    LatticeSpec spec;
    std::string description;
    std::vector<NamedConfig> default_configs;
    std::vector<ExpectedRecord> expected;
    /// Points fed to minimality_certificate (the images L*u_j, unscaled).
    std::vector<QVec2> minimality_witnesses;
};

/// Fixed names in display order; the parametric family is listed as "two_square".
const std::vector<std::string>& catalog_names();

/// Accepts every fixed name, "two_square" (r=1, R=3) and "two_square_r<r>_R<R>"
/// with rational r, R. Throws UnknownTiling.
CatalogEntry get(const std::string& name);

std::vector<ExpectedRecord> expected_results(const std::string& name);

/// Every entry the reproduction run covers, including the four two-square surveys.
std::vector<CatalogEntry> reproduction_catalog();

nlohmann::ordered_json record_to_json(const ExpectedRecord& record);
nlohmann::ordered_json entry_to_json(const CatalogEntry& entry);

}  // namespace ingham
