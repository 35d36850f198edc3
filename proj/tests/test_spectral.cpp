#include "ingham/catalog.hpp"
#include "ingham/error.hpp"
#include "ingham/spectral.hpp"
#include "ingham/two_square.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

using namespace ingham;

TEST_CASE("unit_phase reduces exactly") {
    CHECK(std::abs(unit_phase(QuadNumber(Rational(1000000001, 2))) - std::complex<double>(-1, 0)) < 1e-15);
    CHECK(std::abs(unit_phase(QuadNumber(7)) - 1.0) == 0.0);
    const QuadNumber t(Rational(1, 3), Rational(1, 2), 3);
    CHECK(std::abs(unit_phase(t) - std::polar(1.0, 2 * std::numbers::pi * t.to_double())) < 1e-13);
}

TEST_CASE("E for the honeycomb matches the closed form") {
    const LatticeSpec spec = get("honeycomb").spec;
    const CMatrix e = build_e(spec, TranslationConfig{{{0, 0}, {1, 0}}});
    CHECK(std::abs(e(0, 0) - 1.0) < 1e-15);
    CHECK(std::abs(e(1, 0) - 1.0) < 1e-15);
    CHECK(std::abs(e(1, 1) - std::polar(1.0, 4 * std::numbers::pi / 3)) < 1e-14);
    const SpectralResult r = ingham_constants(spec, TranslationConfig{{{0, 0}, {1, 0}}});
    CHECK(r.kappa1 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.kappa2 == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(r.det_abs == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
}

TEST_CASE("square lattice is Parseval") {
    const SpectralResult r = ingham_constants(get("square").spec, TranslationConfig{{{0, 0}}});
    CHECK(r.kappa1 == 1.0);
    CHECK(r.kappa2 == 1.0);
    CHECK(r.satisfies_a2);
    CHECK(r.c1_full == doctest::Approx(4 * std::numbers::pi * std::numbers::pi).epsilon(1e-14));
}

TEST_CASE("config and size errors") {
    const LatticeSpec spec = get("trihexagonal").spec;
    try {
        (void)ingham_constants(spec, TranslationConfig{{{0, 0}, {0, 0}, {1, 0}}});
        FAIL("no throw");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InvalidConfig);
    }
    try {
        (void)ingham_constants(spec, TranslationConfig{{{0, 0}, {1, 0}}});
        FAIL("no throw");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::SizeMismatch);
    }
    CMatrix h(2, 2);
    h << 1, std::complex<double>(0, 1), std::complex<double>(0, 1), 1;
    try {
        (void)hermitian_eigenvalues(h);
        FAIL("no throw");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotHermitian);
    }
}

TEST_CASE("eigensolver agrees with a Jacobi oracle") {
    std::mt19937_64 rng(7);
    std::normal_distribution<double> g;
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 2 + trial % 11;
        CMatrix a(n, n);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) a(i, k) = {g(rng), g(rng)};
        const CMatrix h = a * a.adjoint();
        const Eigen::VectorXd ev = hermitian_eigenvalues(h);
        const std::vector<double> ref = oracle::jacobi_eigenvalues(h);
        for (int i = 0; i < n; ++i) CHECK(ev(i) == doctest::Approx(ref[static_cast<std::size_t>(i)]).epsilon(1e-10).scale(ev(n - 1)));
    }
}

TEST_CASE("trace law and determinant consistency on catalog configs") {
    for (const std::string& name : catalog_names()) {
        const CatalogEntry entry = get(name);
        for (const NamedConfig& c : entry.default_configs) {
            CAPTURE(name);
            CAPTURE(c.label);
            const CMatrix e = build_e(entry.spec, c.config);
            const SpectralResult r = ingham_constants(entry.spec, c.config);
            const double m = static_cast<double>(entry.spec.m());
            CHECK(r.eigenvalues.sum() == doctest::Approx(m * m).epsilon(1e-9));
            if (entry.spec.m() <= 8) {
                const double cof = std::abs(oracle::cofactor_det(e));
                CHECK(r.det_abs == doctest::Approx(cof).epsilon(1e-9).scale(1.0));
            }
            if (!r.satisfies_a2) continue;
            double prod = 1;
            for (double v : r.eigenvalues) prod *= std::max(v, 0.0);
            CHECK(r.det_abs * r.det_abs == doctest::Approx(prod).epsilon(1e-7).scale(1e-12));
        }
    }
}

TEST_CASE("snub square constants are invariant under the grid symmetries") {
    const LatticeSpec spec = get("snub_square").spec;
    const TranslationConfig base{{{0, 0}, {0, 1}, {0, 2}, {1, 1}}};
    const SpectralResult ref = ingham_constants(spec, base);
    for (int sym = 0; sym < 8; ++sym) {
        TranslationConfig c;
        for (const IVec2& n : base.ns) {
            IVec2 t = n;
            if (sym & 1) t = {t[1], t[0]};
            if (sym & 2) t[0] = -t[0];
            if (sym & 4) t[1] = -t[1];
            c.ns.push_back(t);
        }
        const SpectralResult r = ingham_constants(spec, c);
        CHECK(r.kappa1 == doctest::Approx(ref.kappa1).epsilon(1e-9));
        CHECK(r.kappa2 == doctest::Approx(ref.kappa2).epsilon(1e-9));
    }
}

TEST_CASE("known verdicts") {
    CHECK_FALSE(check_a2(get("rhombitrihexagonal").spec, TranslationConfig{{{0, 0}, {0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}}}));
    CHECK(check_a2(get("snub_hexagonal").spec, TranslationConfig{{{0, 0}, {0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}}}));
    const LatticeSpec r4 = two_square_spec(Rational(1), Rational(4));
    const TranslationConfig tight{{{0, 0}, {0, 3}, {1, 1}, {2, 2}}};
    const SpectralResult s = ingham_constants(r4, tight);
    CHECK(s.satisfies_a2 == (s.kappa1 / s.kappa2 > kDefaultA2Tolerance));
}

TEST_CASE("two-square closed form") {
    for (auto [r, big_r] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 5}}) {
        const LatticeSpec spec = two_square_spec(Rational(r), Rational(big_r));
        const CMatrix e = build_e(spec, two_square_canonical_config());
        CHECK(std::abs(e.determinant()) == doctest::Approx(std::abs(two_square_delta(r, big_r))).epsilon(1e-10));
    }
    CHECK(trig_identity_residual(0.3, 1.1) < 1e-14);
    try {
        (void)two_square_spec(Rational(2), Rational(2));
        FAIL("no throw");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DegenerateTiling);
    }
}
