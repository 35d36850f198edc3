#include "ingham/catalog.hpp"

#include "ingham/error.hpp"
#include "ingham/search.hpp"
#include "ingham/spec_io.hpp"
#include "ingham/two_square.hpp"

#include <cmath>
#include <numbers>
#include <regex>

namespace ingham {

namespace {

constexpr double kPi = std::numbers::pi;
// Two-decimal published constants: rounding or truncation, unknown which.
constexpr double kPrintedPairTol = 0.015;
constexpr double kClosedFormRel = 1e-9;

Rational fr(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }
QuadNumber rat(std::int64_t n, std::int64_t d = 1) { return QuadNumber(fr(n, d)); }
// a + b√3
QuadNumber s3(Rational a, Rational b) { return QuadNumber(a, b, 3); }
// a + b√2
QuadNumber s2(Rational a, Rational b) { return QuadNumber(a, b, 2); }

TranslationConfig cfg(std::vector<IVec2> ns) { return TranslationConfig{std::move(ns)}; }

TranslationConfig column(int length) {
    TranslationConfig c;
    for (int k = 0; k < length; ++k) c.ns.push_back({0, k});
    return c;
}

const TranslationConfig kBent6 = cfg({{0, 0}, {0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 4}});
const TranslationConfig kStair6 = cfg({{0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 3}, {1, 4}});

ExpectedRecord pair(std::string label, TranslationConfig config, double k1, double k2, std::string source,
                    double tol = kPrintedPairTol) {
    ExpectedRecord r;
    r.kind = ExpectedKind::KappaPair;
    r.label = std::move(label);
    r.quantity = "pair";
    r.config = std::move(config);
    r.values = {k1, k2};
    r.tolerance = tol;
    r.source = std::move(source);
    return r;
}

ExpectedRecord verdict(std::string label, TranslationConfig config, bool a2, std::string source) {
    ExpectedRecord r;
    r.kind = ExpectedKind::A2Verdict;
    r.label = std::move(label);
    r.quantity = "a2";
    r.config = std::move(config);
    r.values = {a2 ? 1.0 : 0.0};
    r.source = std::move(source);
    return r;
}

ExpectedRecord count(std::string label, std::string quantity, int grid, double value, std::string source) {
    ExpectedRecord r;
    r.kind = ExpectedKind::SurveyCount;
    r.label = std::move(label);
    r.quantity = std::move(quantity);
    r.grid = grid;
    r.values = {value};
    r.source = std::move(source);
    return r;
}

ExpectedRecord measure(ExpectedKind kind, std::string label, std::string quantity, TranslationConfig config,
                       double value, double tol, std::string source) {
    ExpectedRecord r;
    r.kind = kind;
    r.label = std::move(label);
    r.quantity = std::move(quantity);
    r.config = std::move(config);
    r.values = {value};
    r.tolerance = tol;
    r.source = std::move(source);
    return r;
}

ExpectedRecord with_note(ExpectedRecord r, std::string note) {
    r.known_discrepancy = std::move(note);
    return r;
}

std::vector<QVec2> image_witnesses(const LatticeSpec& spec) {
    std::vector<QVec2> w;
    for (std::size_t j = 0; j < spec.m(); ++j) w.push_back(exact_point(spec, {j, {0, 0}}));
    return w;
}

CatalogEntry finish(CatalogEntry e) {
    validate_spec(e.spec);
    e.minimality_witnesses = image_witnesses(e.spec);
    return e;
}

CatalogEntry square() {
    CatalogEntry e;
    e.spec.name = "square";
    e.spec.l_star = QMat2{{{rat(1), rat(0)}, {rat(0), rat(1)}}};
    e.spec.us = {QVec2{rat(0), rat(0)}};
    e.description = "square lattice Z^2 (baseline, Parseval)";
    e.default_configs = {{"single", cfg({{0, 0}})}};
    e.expected = {pair("single", cfg({{0, 0}}), 1, 1, "orthonormal baseline", 1e-12)};
    return finish(std::move(e));
}

CatalogEntry triangular() {
    CatalogEntry e;
    e.spec.name = "triangular";
    e.spec.l_star = QMat2{{{rat(1), rat(1, 2)}, {rat(0), s3(0, fr(1, 2))}}};
    e.spec.us = {QVec2{rat(0), rat(0)}};
    e.description = "triangular lattice of unit side";
    const TranslationConfig c = cfg({{0, 0}});
    e.default_configs = {{"single", c}};
    const double area = 8 * kPi * kPi / std::sqrt(3.0);
    const double r_nec = 2 * std::sqrt(2 * kPi) / std::pow(3.0, 0.25);
    e.expected = {
        measure(ExpectedKind::Area, "area", "area", c, area, kClosedFormRel * area, "closed form 8π²/√3"),
        measure(ExpectedKind::Diameter, "half_diameter", "half_diameter", c, 2 * kPi, kClosedFormRel * 2 * kPi,
                "closed form 2π"),
        measure(ExpectedKind::Diameter, "half_diameter_printed", "half_diameter", c, 6.28, 0.01, "printed ≈6.28"),
        measure(ExpectedKind::RadiusBound, "r_necessary", "r_necessary", c, r_nec, kClosedFormRel * r_nec,
                "closed form 2√(2π)/3^(1/4)"),
        measure(ExpectedKind::RadiusBound, "r_necessary_printed", "r_necessary", c, 3.8, 0.1, "printed ≈3.8"),
        measure(ExpectedKind::RadiusBound, "r_bessel", "r_bessel", c, 4.8096, 5e-4,
                "printed 2ρ₂ ≈ 4.8096, ρ₂ the first zero of J0"),
        measure(ExpectedKind::Area, "density_ratio", "density_ratio", c, 1.5, kClosedFormRel * 1.5,
                "triangular domain is 1.5 times the honeycomb domain"),
    };
    return finish(std::move(e));
}

CatalogEntry honeycomb() {
    CatalogEntry e;
    e.spec.name = "honeycomb";
    e.spec.l_star = QMat2{{{rat(3, 2), rat(0)}, {s3(0, fr(1, 2)), s3(0, 1)}}};
    e.spec.us = {QVec2{rat(0), rat(0)}, QVec2{rat(2, 3), rat(-1, 3)}};
    e.description = "honeycomb lattice of unit side";
    const TranslationConfig horizontal = cfg({{0, 0}, {1, 0}});
    const TranslationConfig vertical = cfg({{0, 0}, {0, 1}});
    e.default_configs = {{"horizontal", horizontal}, {"vertical", vertical}};
    const double area = 16 * kPi * kPi / (3 * std::sqrt(3.0));
    const double half_diam = 2 * kPi * std::sqrt(7.0) / 3;
    const double r_nec = 4 * std::sqrt(kPi) / std::pow(3.0, 0.75);
    for (const auto& [label, c] : e.default_configs) {
        e.expected.push_back(verdict(label + "_a2", c, true, "det E = 1·e^{4πi/3} − 1 ≠ 0"));
        e.expected.push_back(
            measure(ExpectedKind::Area, label + "_area", "area", c, area, kClosedFormRel * area, "closed form 16π²/(3√3)"));
        e.expected.push_back(measure(ExpectedKind::Diameter, label + "_half_diameter", "half_diameter", c, half_diam,
                                     kClosedFormRel * half_diam, "closed form 2π√7/3"));
        e.expected.push_back(
            measure(ExpectedKind::Diameter, label + "_half_diameter_printed", "half_diameter", c, 5.54, 0.01, "printed ≈5.54"));
    }
    e.expected.push_back(measure(ExpectedKind::RadiusBound, "r_necessary", "r_necessary", horizontal, r_nec,
                                 kClosedFormRel * r_nec, "closed form 4√π/3^(3/4)"));
    e.expected.push_back(
        measure(ExpectedKind::RadiusBound, "r_necessary_printed", "r_necessary", horizontal, 3.11, 0.01, "printed ≈3.11"));
    e.expected.push_back(measure(ExpectedKind::RadiusBound, "r_bessel", "r_bessel", horizontal, 4.8096, 5e-4,
                                 "printed 2ρ₂ ≈ 4.8096"));
    return finish(std::move(e));
}

CatalogEntry two_square(const Rational& r, const Rational& big_r) {
    CatalogEntry e;
    e.spec = two_square_spec(r, big_r);
    e.description = "tiling by squares of sides r=" + r.str() + " < R=" + big_r.str();
    e.default_configs = {{"unit_block", two_square_canonical_config()}};
    const double side = 4 * kPi / e.spec.scale;
    e.expected.push_back(verdict("unit_block_a2", two_square_canonical_config(), true, "closed-form det E is nonzero"));
    e.expected.push_back(measure(ExpectedKind::Area, "unit_block_area", "area", two_square_canonical_config(), side * side,
                                 kClosedFormRel * side * side, "Ω is the square (0, 4π/√(R²+r²))²"));

    const std::string stability_note =
        "the smallest nonsingular kappa1/kappa2 in this survey is below 1e-4 (down to 1.5e-9 for R=4), so the "
        "verdict cannot be constant across the 1e-12..1e-4 sweep";
    auto survey_records = [&](int failing) {
        e.expected.push_back(count("failing", "failing", 3, failing, "failing count over the 1820 configs in {0..3}²"));
        e.expected.push_back(with_note(count("sweep_unstable", "sweep_unstable", 3, 0, "verdict stable under tolerance sweep"),
                                       stability_note));
    };
    if (r == Rational(1)) {
        if (big_r == Rational(2)) survey_records(9);
        if (big_r == Rational(3)) survey_records(28);
        if (big_r == Rational(4)) survey_records(0);
        if (big_r == Rational(5)) survey_records(4);
    }
    return finish(std::move(e));
}

CatalogEntry elongated_triangular() {
    CatalogEntry e;
    e.spec.name = "elongated_triangular";
    e.spec.l_star = QMat2{{{rat(1), rat(1, 2)}, {rat(0), s3(1, fr(1, 2))}}};
    e.spec.us = {QVec2{rat(0), rat(0)}, QVec2{s3(-1, 1), s3(4, -2)}};
    e.description = "elongated triangular tiling (3.3.3.4.4)";
    const TranslationConfig vertical = cfg({{0, 0}, {0, 1}});
    const TranslationConfig horizontal = cfg({{0, 0}, {1, 0}});
    const TranslationConfig anti = cfg({{0, 1}, {1, 0}});
    e.default_configs = {{"vertical", vertical}, {"horizontal", horizontal}, {"antidiagonal", anti}};
    e.expected = {
        pair("vertical", vertical, 1.77, 2.22, "best-conditioned pair inside [0,2]²"),
        pair("horizontal", horizontal, 0.66, 3.33, "second pair inside [0,2]²"),
        pair("antidiagonal", anti, 0.36, 3.63, "worst-conditioned pair inside [0,2]²"),
    };
    return finish(std::move(e));
}

CatalogEntry trihexagonal() {
    CatalogEntry e;
    e.spec.name = "trihexagonal";
    e.spec.l_star = QMat2{{{s3(0, 1), s3(0, 1)}, {rat(1), rat(-1)}}};
    e.spec.us = {QVec2{rat(0), rat(0)}, QVec2{rat(0), rat(1, 2)}, QVec2{rat(1, 2), rat(0)}};
    e.description = "trihexagonal (kagome) tiling (3.6.3.6)";
    e.default_configs = {{"corner", cfg({{0, 0}, {0, 1}, {1, 0}})}, {"column", column(3)}};
    ExpectedRecord all_pairs;
    all_pairs.kind = ExpectedKind::KappaPair;
    all_pairs.label = "grid2_passing_pairs";
    all_pairs.quantity = "survey_passing_pairs";
    all_pairs.grid = 2;
    all_pairs.values = {1, 4};
    all_pairs.tolerance = 1e-9;
    all_pairs.source = "every passing config in {0..2}² has constants exactly 1 and 4";
    e.expected = {
        count("grid2_passing", "passing", 2, 36, "36 of the 84 configs in {0..2}² pass"),
        all_pairs,
        count("grid2_sweep_unstable", "sweep_unstable", 2, 0, "verdict stable under tolerance sweep"),
    };
    return finish(std::move(e));
}

CatalogEntry snub_square() {
    CatalogEntry e;
    e.spec.name = "snub_square";
    e.spec.l_star = QMat2{{{s3(1, fr(1, 2)), rat(-1, 2)}, {rat(1, 2), s3(1, fr(1, 2))}}};
    e.spec.us = {QVec2{rat(0), rat(0)}, QVec2{s3(1, fr(-1, 2)), rat(1, 2)}, QVec2{s3(fr(3, 2), fr(-1, 2)), s3(fr(-1, 2), fr(1, 2))},
                 QVec2{rat(1, 2), s3(0, fr(1, 2))}};
    e.description = "snub square tiling (3.3.4.3.4)";
    const TranslationConfig t = cfg({{0, 0}, {0, 1}, {0, 2}, {1, 1}});
    const TranslationConfig l = cfg({{0, 0}, {0, 1}, {0, 2}, {1, 0}});
    const TranslationConfig i = column(4);
    const TranslationConfig s = cfg({{0, 0}, {0, 1}, {1, 1}, {1, 2}});
    const TranslationConfig o = cfg({{0, 0}, {0, 1}, {1, 0}, {1, 1}});
    e.default_configs = {{"T", t}, {"L", l}, {"I", i}, {"S", s}, {"O", o}};
    ExpectedRecord tetrominoes;
    tetrominoes.kind = ExpectedKind::PolyominoCount;
    tetrominoes.label = "fixed_tetrominoes";
    tetrominoes.quantity = "fixed_polyominoes";
    tetrominoes.size = 4;
    tetrominoes.values = {19};
    tetrominoes.source = "fixed tetrominoes";
    e.expected = {
        pair("T", t, 1.03, 6.66, "tetromino representative (A)"),
        pair("L", l, 0.16, 7.83, "tetromino representative (B)"),
        pair("I", i, 1.33, 6.66, "tetromino representative (C)"),
        pair("S", s, 1.12, 6.87, "tetromino representative (D)"),
        with_note(pair("O", o, 0.54, 2.16, "tetromino representative (E)"),
                  "trace(EE*) = M^2 = 16 forces kappa2 >= 4, so kappa2 = 2.16 is impossible; no 4-subset of "
                  "{0..3}^2 comes within 0.02 of the pair"),
        count("failing", "failing", 3, 76, "76 of 1820 configs in {0..3}² fail"),
        count("connected_passing", "connected_passing", 3, 19, "every connected config passes"),
        count("sweep_unstable", "sweep_unstable", 3, 0, "verdict stable under tolerance sweep"),
        tetrominoes,
    };
    return finish(std::move(e));
}

CatalogEntry truncated_square() {
    CatalogEntry e;
    e.spec.name = "truncated_square";
    e.spec.l_star = QMat2{{{s2(2, 1), s2(1, fr(1, 2))}, {rat(0), s2(1, fr(1, 2))}}};
    e.spec.us = {QVec2{rat(0), rat(0)}, QVec2{s2(1, fr(-1, 2)), rat(0)}, QVec2{rat(0), s2(2, -1)},
                 QVec2{s2(0, fr(1, 2)), s2(2, -1)}};
    e.description = "truncated square tiling (4.8.8)";
    const std::vector<std::pair<std::string, TranslationConfig>> shapes = {
        {"T_right", cfg({{0, 0}, {1, 0}, {1, 1}, {2, 0}})}, {"S_horizontal", cfg({{0, 0}, {0, 1}, {1, 1}, {2, 1}})},
        {"L_foot", cfg({{0, 0}, {0, 1}, {1, 0}, {2, 0}})},  {"Z_vertical", cfg({{0, 1}, {0, 2}, {1, 0}, {1, 1}})},
        {"O", cfg({{0, 0}, {0, 1}, {1, 0}, {1, 1}})},       {"T_up", cfg({{0, 1}, {1, 0}, {1, 1}, {2, 0}})},
    };
    const double printed[6][2] = {{1.02, 7.24}, {0.71, 6.23}, {0.83, 7.33}, {1.17, 8.02}, {1.24, 7.53}, {0.22, 7.92}};
    for (std::size_t k = 0; k < shapes.size(); ++k) {
        e.default_configs.push_back({shapes[k].first, shapes[k].second});
        e.expected.push_back(pair(shapes[k].first, shapes[k].second, printed[k][0], printed[k][1],
                                  "connected config panel " + std::to_string(k + 1)));
    }
    e.expected.push_back(with_note(
        count("failing", "failing", 3, 892, "892 of 1820 configs in {0..3}² fail"),
        "the survey has 278 structurally singular configs (kappa1/kappa2 <= 3.1e-16) and the next gap is 3.6e-5; "
        "892 would need a conditioning cut near 0.022, which would also reject the snub-square L tetromino that is "
        "stated to pass"));
    e.expected.push_back(with_note(count("connected_passing", "connected_passing", 3, 9, "connected configs that pass"),
                                   "10 fixed tetrominoes pass, giving six distinct kappa-pairs that all match the "
                                   "printed ones; the reference count of 9 omits one of them"));
    e.expected.push_back(with_note(count("sweep_unstable", "sweep_unstable", 3, 0, "verdict stable under tolerance sweep"),
                                   "four configs have kappa1/kappa2 between 3.6e-5 and 1e-4 and flip at rel_tol 1e-4"));
    return finish(std::move(e));
}

CatalogEntry snub_hexagonal() {
    CatalogEntry e;
    e.spec.name = "snub_hexagonal";
    e.spec.l_star = QMat2{{{s3(0, 1), s3(0, fr(1, 2))}, {rat(2), rat(-5, 2)}}};
    e.spec.us = {QVec2{rat(0), rat(0)},    QVec2{rat(3, 7), rat(1, 7)}, QVec2{rat(2, 7), rat(3, 7)},
                 QVec2{rat(5, 7), rat(4, 7)}, QVec2{rat(1, 7), rat(5, 7)}, QVec2{rat(4, 7), rat(6, 7)}};
    e.description = "snub hexagonal tiling (3.3.3.3.6)";
    e.default_configs = {{"column", column(6)}, {"bent", kBent6}};
    e.expected = {
        pair("column", column(6), 1, 7, "straight column of six cells"),
        verdict("bent_a2", kBent6, false, "column bent at the top fails (A2)"),
    };
    return finish(std::move(e));
}

CatalogEntry rhombitrihexagonal() {
    CatalogEntry e;
    e.spec.name = "rhombitrihexagonal";
    e.spec.l_star = QMat2{{{s3(1, 1), s3(fr(1, 2), fr(1, 2))}, {rat(0), s3(fr(3, 2), fr(1, 2))}}};
    e.spec.us = {
        QVec2{rat(0), rat(0)},
        QVec2{s3(fr(-1, 2), fr(1, 2)), rat(0)},
        QVec2{s3(-1, fr(2, 3)), s3(1, fr(-1, 3))},
        QVec2{s3(fr(-1, 2), fr(1, 2)), s3(fr(3, 2), fr(-1, 2))},
        QVec2{s3(fr(1, 2), fr(1, 6)), s3(1, fr(-1, 3))},
        QVec2{s3(fr(1, 2), fr(1, 6)), s3(fr(1, 2), fr(1, 6))},
    };
    e.description = "rhombitrihexagonal tiling (3.4.6.4)";
    e.default_configs = {{"column", column(6)}, {"bent", kBent6}, {"staircase", kStair6}};
    e.expected = {
        verdict("column_a2", column(6), false, "straight column fails (A2)"),
        verdict("bent_a2", kBent6, false, "bent column fails (A2)"),
        pair("staircase", kStair6, 0.47, 11.92, "staircase of six cells"),
    };
    return finish(std::move(e));
}

CatalogEntry truncated_hexagonal() {
    CatalogEntry e;
    e.spec.name = "truncated_hexagonal";
    e.spec.l_star = QMat2{{{s3(1, fr(1, 2)), rat(1, 2)}, {rat(1, 2), s3(1, fr(1, 2))}}};
    const QuadNumber a = s3(0, fr(1, 3));         // √3/3
    const QuadNumber b = s3(1, fr(-1, 3));        // 1 − √3/3
    const QuadNumber c = s3(-1, fr(2, 3));        // −1 + 2√3/3
    const QuadNumber d = s3(2, fr(-2, 3));        // 2 − 2√3/3
    e.spec.us = {QVec2{a, d}, QVec2{b, c}, QVec2{c, b}, QVec2{d, a}, QVec2{a, a}, QVec2{b, b}};
    e.description = "truncated hexagonal tiling (3.12.12)";
    e.default_configs = {{"column", column(6)}, {"bent", kBent6}, {"staircase", kStair6}};
    e.expected = {
        verdict("column_a2", column(6), false, "straight column fails (A2)"),
        verdict("bent_a2", kBent6, false, "bent column fails (A2)"),
        pair("staircase", kStair6, 0.15, 15.6, "staircase of six cells"),
    };
    return finish(std::move(e));
}

CatalogEntry truncated_trihexagonal() {
    CatalogEntry e;
    e.spec.name = "truncated_trihexagonal";
    e.spec.l_star = QMat2{{{s3(fr(3, 2), fr(1, 2)), s3(fr(3, 2), fr(-1, 2))}, {s3(fr(3, 2), fr(-1, 2)), s3(fr(3, 2), fr(1, 2))}}};
    // The offsets are read as coordinates in the L* frame, Λ = ∪ L*(u_j + Z²).
    // Read instead as ambient offsets (u_j + L*Z²) the points are not the
    // vertices of any tiling: nearest-neighbour distances split three ways.
    auto u6 = [](QuadNumber x, QuadNumber y) { return QVec2{x / rat(6), y / rat(6)}; };
    e.spec.us = {
        u6(rat(2), s3(5, -1)),  u6(s3(-1, 1), s3(5, -1)), u6(s3(-1, 1), rat(2)), u6(rat(2), s3(-1, 1)),
        u6(s3(5, -1), s3(-1, 1)), u6(s3(5, -1), rat(2)), u6(rat(4), s3(7, -1)),  u6(s3(1, 1), s3(7, -1)),
        u6(s3(1, 1), rat(4)),   u6(rat(4), s3(1, 1)),     u6(s3(7, -1), s3(1, 1)), u6(s3(7, -1), rat(4)),
    };
    e.description = "truncated trihexagonal tiling (4.6.12)";
    TranslationConfig wide;
    for (int x = 0; x < 6; ++x)
        for (int y = 0; y < 2; ++y) wide.ns.push_back({x, y});
    TranslationConfig block;
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 4; ++y) block.ns.push_back({x, y});
    e.default_configs = {{"six_by_two", wide}, {"three_by_four", block}};
    e.expected = {
        with_note(pair("six_by_two", wide, 2.71, 28.02, "6×2 block of cells"),
                  "with the vertex set verified as a 4.6.12 tiling (three equidistant neighbours per vertex) the "
                  "6x2 block gives (0.3443, 29.535); no 12-subset of the 4x4, 3x5, 5x3, 7x2, 2x7 or 8x2 grids and "
                  "no reading of the offsets reproduces (2.71, 28.02)"),
        verdict("three_by_four_a2", block, false, "3×4 block fails (A2)"),
    };
    return finish(std::move(e));
}

Rational parse_rational_token(const std::string& s) {
    std::string t = s;
    for (char& ch : t)
        if (ch == '_' || ch == 'd') ch = '/';
    return Rational::parse(t);
}

}  // namespace

std::string to_string(ExpectedKind kind) {
    switch (kind) {
        case ExpectedKind::A2Verdict: return "a2_verdict";
        case ExpectedKind::KappaPair: return "kappa_pair";
        case ExpectedKind::SurveyCount: return "survey_count";
        case ExpectedKind::Area: return "area";
        case ExpectedKind::Diameter: return "diameter";
        case ExpectedKind::RadiusBound: return "radius_bound";
        case ExpectedKind::PolyominoCount: return "polyomino_count";
    }
    return "unknown";
}

const std::vector<std::string>& catalog_names() {
    static const std::vector<std::string> names = {
        "square",           "triangular",         "honeycomb",           "two_square",
        "elongated_triangular", "trihexagonal",   "snub_square",         "truncated_square",
        "snub_hexagonal",   "rhombitrihexagonal", "truncated_hexagonal", "truncated_trihexagonal",
    };
    return names;
}

CatalogEntry get(const std::string& name) {
    if (name == "square") return square();
    if (name == "triangular") return triangular();
    if (name == "honeycomb") return honeycomb();
    if (name == "two_square") return two_square(Rational(1), Rational(3));
    if (name == "elongated_triangular") return elongated_triangular();
    if (name == "trihexagonal") return trihexagonal();
    if (name == "snub_square") return snub_square();
    if (name == "truncated_square") return truncated_square();
    if (name == "snub_hexagonal") return snub_hexagonal();
    if (name == "rhombitrihexagonal") return rhombitrihexagonal();
    if (name == "truncated_hexagonal") return truncated_hexagonal();
    if (name == "truncated_trihexagonal") return truncated_trihexagonal();
    // two_square_r<r>_R<R>; a fraction p/q may be written p/q or pdq.
    static const std::regex family(R"(two_square_r([0-9/d]+)_R([0-9/d]+))");
    std::smatch m;
    if (std::regex_match(name, m, family)) {
        try {
            return two_square(parse_rational_token(m[1]), parse_rational_token(m[2]));
        } catch (const Error& err) {
            if (err.code() != ErrorCode::ParseError) throw;
        }
    }
    throw Error(ErrorCode::UnknownTiling, "unknown tiling '" + name + "'");
}

std::vector<ExpectedRecord> expected_results(const std::string& name) { return get(name).expected; }

std::vector<CatalogEntry> reproduction_catalog() {
    std::vector<CatalogEntry> out;
    for (const std::string& name : catalog_names()) {
        if (name == "two_square") {
            for (int big_r = 2; big_r <= 5; ++big_r) out.push_back(two_square(Rational(1), Rational(big_r)));
            continue;
        }
        out.push_back(get(name));
    }
    return out;
}

nlohmann::ordered_json record_to_json(const ExpectedRecord& r) {
    nlohmann::ordered_json j;
    j["kind"] = to_string(r.kind);
    j["label"] = r.label;
    j["quantity"] = r.quantity;
    if (r.config) j["config"] = format_config(*r.config);
    if (r.kind == ExpectedKind::SurveyCount || r.quantity == "survey_passing_pairs") j["grid"] = r.grid;
    if (r.kind == ExpectedKind::PolyominoCount) j["size"] = r.size;
    j["values"] = r.values;
    j["tolerance"] = r.tolerance;
    j["source"] = r.source;
    if (r.known_discrepancy) j["known_discrepancy"] = *r.known_discrepancy;
    return j;
}

nlohmann::ordered_json entry_to_json(const CatalogEntry& e) {
    nlohmann::ordered_json j;
    j["name"] = e.spec.name;
    j["description"] = e.description;
    j["spec"] = spec_to_json(e.spec);
    j["minimal"] = minimality_certificate(e.spec, e.minimality_witnesses);
    nlohmann::ordered_json configs = nlohmann::ordered_json::array();
    for (const NamedConfig& c : e.default_configs) configs.push_back({{"label", c.label}, {"config", format_config(c.config)}});
    j["default_configs"] = configs;
    nlohmann::ordered_json expected = nlohmann::ordered_json::array();
    for (const ExpectedRecord& r : e.expected) expected.push_back(record_to_json(r));
    j["expected"] = expected;
    return j;
}

}  // namespace ingham
