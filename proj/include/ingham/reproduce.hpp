#pragma once

// Recomputes every expected record of a catalog and compares.

#include "ingham/catalog.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace ingham {

/// Tolerances swept by the `sweep_unstable` quantity.
inline constexpr double kToleranceSweep[] = {1e-12, 1e-10, 1e-8, 1e-6, 1e-4};

enum class EntryStatus { Pass, Fail, Discrepancy };

std::string to_string(EntryStatus status);

struct ReproductionEntry {
    std::string tiling;
    ExpectedRecord expected;
    std::vector<double> computed;
    EntryStatus status = EntryStatus::Fail;
};

struct ReproductionReport {
    double rel_tol = kDefaultA2Tolerance;
    std::vector<ReproductionEntry> entries;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t discrepancies = 0;

    /// No entry failed. Documented discrepancies do not count against this.
    bool ok() const noexcept { return failed == 0; }
};

struct ReproductionOptions {
    double rel_tol = kDefaultA2Tolerance;
    unsigned threads = 0;
    /// When set, survey CSVs and report.json are written here.
    std::optional<std::string> out_dir;
};

ReproductionReport run_reproduction(const std::vector<CatalogEntry>& catalog, const ReproductionOptions& options);

/// Byte-deterministic for identical inputs: no timestamps, values rounded to 10 decimals.
nlohmann::ordered_json report_to_json(const ReproductionReport& report);

}  // namespace ingham
