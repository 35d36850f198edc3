#include "ingham/search.hpp"

#include "ingham/error.hpp"
#include "ingham/format.hpp"
#include "ingham/geometry.hpp"
#include "ingham/polyomino.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <map>
#include <ostream>
#include <thread>

namespace ingham {

std::uint64_t binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

void enumerate_configs(int grid_max, int m, const std::function<void(const TranslationConfig&)>& visit) {
    const int side = grid_max + 1;
    const int n = side * side;
    if (m < 1 || m > n) throw Error(ErrorCode::InvalidConfig, "need 1 <= m <= (grid_max+1)^2");
    std::vector<int> idx(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) idx[static_cast<std::size_t>(i)] = i;
    TranslationConfig config;
    config.ns.resize(static_cast<std::size_t>(m));
    while (true) {
        for (std::size_t i = 0; i < idx.size(); ++i) config.ns[i] = IVec2{idx[i] / side, idx[i] % side};
        visit(config);
        int pos = m - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - m + pos) --pos;
        if (pos < 0) break;
        ++idx[static_cast<std::size_t>(pos)];
        for (int i = pos + 1; i < m; ++i) idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
    }
}

std::vector<TranslationConfig> all_configs(int grid_max, int m) {
    std::vector<TranslationConfig> out;
    enumerate_configs(grid_max, m, [&](const TranslationConfig& c) { out.push_back(c); });
    return out;
}

bool config_less(const TranslationConfig& a, const TranslationConfig& b) { return a.ns < b.ns; }

SurveyResult classify_configs(const LatticeSpec& spec, std::span<const TranslationConfig> configs, double rel_tol,
                              unsigned threads) {
    validate_spec(spec);
    SurveyResult result;
    result.rel_tol = rel_tol;
    result.records.resize(configs.size());
    const double det_l = spec.abs_det_l();
    for (const TranslationConfig& c : configs) {
        validate_config(c);
        if (c.m() != spec.m()) throw Error(ErrorCode::SizeMismatch, "config size differs from translate count");
    }

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < configs.size(); i = next++) {
            const TranslationConfig& c = configs[i];
            SpectralResult s = constants_from_e(build_e(spec, c), det_l, rel_tol);
            SurveyRecord& rec = result.records[i];
            rec.config = c;
            rec.connected = is_connected(c.ns);
            rec.a2 = s.satisfies_a2;
            rec.kappa1 = s.kappa1;
            rec.kappa2 = s.kappa2;
            if (rec.a2) rec.ratio = s.ratio();
        }
    };
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, configs.size() / 64)));
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    pool.clear();

    std::stable_sort(result.records.begin(), result.records.end(),
                     [](const SurveyRecord& a, const SurveyRecord& b) { return config_less(a.config, b.config); });
    result.total = result.records.size();
    result.passing = static_cast<std::size_t>(
        std::count_if(result.records.begin(), result.records.end(), [](const SurveyRecord& r) { return r.a2; }));
    result.failing = result.total - result.passing;
    return result;
}

SurveyResult classify_all(const LatticeSpec& spec, int grid_max, int m, double rel_tol, unsigned threads) {
    if (static_cast<std::size_t>(m) != spec.m())
        throw Error(ErrorCode::SizeMismatch, "survey size must equal the number of translates");
    std::vector<TranslationConfig> configs = all_configs(grid_max, m);
    return classify_configs(spec, configs, rel_tol, threads);
}

SurveyResult connected_survey(const LatticeSpec& spec, int m, double rel_tol) {
    if (static_cast<std::size_t>(m) != spec.m())
        throw Error(ErrorCode::SizeMismatch, "survey size must equal the number of translates");
    std::vector<TranslationConfig> configs;
    for (const PolyominoShape& shape : fixed_polyominoes(m)) configs.push_back(TranslationConfig{shape.cells});
    return classify_configs(spec, configs, rel_tol, 1);
}

std::size_t count_failing(const SurveyResult& result, double rel_tol) {
    return static_cast<std::size_t>(std::count_if(result.records.begin(), result.records.end(), [&](const SurveyRecord& r) {
        return !(r.kappa2 > 0 && r.gap() > rel_tol);
    }));
}

std::vector<SurveyRecord> rank_by_conditioning(const SurveyResult& result) {
    std::vector<SurveyRecord> passing;
    std::copy_if(result.records.begin(), result.records.end(), std::back_inserter(passing),
                 [](const SurveyRecord& r) { return r.ratio.has_value(); });
    std::stable_sort(passing.begin(), passing.end(), [](const SurveyRecord& a, const SurveyRecord& b) {
        if (*a.ratio != *b.ratio) return *a.ratio < *b.ratio;
        return config_less(a.config, b.config);
    });
    return passing;
}

TranslationConfig canonical_config(const TranslationConfig& config) {
    return TranslationConfig{canonicalize(config.ns).cells};
}

std::vector<TranslationClass> translation_classes(std::span<const TranslationConfig> configs) {
    std::map<std::vector<IVec2>, std::size_t> classes;
    for (const TranslationConfig& c : configs) ++classes[canonical_config(c).ns];
    std::vector<TranslationClass> out;
    out.reserve(classes.size());
    for (const auto& [cells, count] : classes) out.push_back(TranslationClass{TranslationConfig{cells}, count});
    return out;
}

std::string format_config(const TranslationConfig& config) {
    std::string s;
    for (std::size_t i = 0; i < config.ns.size(); ++i) {
        if (i) s += ';';
        s += std::to_string(config.ns[i][0]) + ',' + std::to_string(config.ns[i][1]);
    }
    return s;
}

TranslationConfig parse_config(std::string_view text) {
    TranslationConfig config;
    auto bad = [&] { return Error(ErrorCode::ParseError, "bad config '" + std::string(text) + "', want \"a,b;a,b;...\""); };
    auto parse_int = [&](std::string_view s) {
        while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
        while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
        std::int64_t v = 0;
        auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || ec != std::errc{} || p != s.data() + s.size()) throw bad();
        return v;
    };
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(';', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view item = text.substr(start, end - start);
        std::size_t comma = item.find(',');
        if (comma == std::string_view::npos) throw bad();
        config.ns.push_back({parse_int(item.substr(0, comma)), parse_int(item.substr(comma + 1))});
        start = end + 1;
    }
    validate_config(config);
    return config;
}

void write_survey_csv(std::ostream& os, const SurveyResult& result) {
    os << "cells,connected,a2,kappa1,kappa2,ratio\n";
    for (const SurveyRecord& r : result.records) {
        os << '"' << format_config(r.config) << "\"," << (r.connected ? "true" : "false") << ','
           << (r.a2 ? "true" : "false") << ',' << fixed(r.kappa1) << ',' << fixed(r.kappa2) << ','
           << (r.ratio ? fixed(*r.ratio) : std::string()) << '\n';
    }
}

nlohmann::ordered_json survey_summary_json(const SurveyResult& result) {
    nlohmann::ordered_json j;
    j["total"] = result.total;
    j["passing"] = result.passing;
    j["failing"] = result.failing;
    j["rel_tol"] = result.rel_tol;
    std::size_t connected = 0;
    std::size_t connected_passing = 0;
    for (const SurveyRecord& r : result.records) {
        connected += r.connected;
        connected_passing += r.connected && r.a2;
    }
    j["connected"] = connected;
    j["connected_passing"] = connected_passing;
    auto ranked = rank_by_conditioning(result);
    if (!ranked.empty()) {
        const SurveyRecord& best = ranked.front();
        j["best"] = {{"cells", format_config(best.config)},
                     {"kappa1", std::stod(fixed(best.kappa1))},
                     {"kappa2", std::stod(fixed(best.kappa2))},
                     {"ratio", std::stod(fixed(*best.ratio))}};
    }
    return j;
}

}  // namespace ingham
