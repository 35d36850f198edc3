#include "ingham/catalog.hpp"
#include "ingham/error.hpp"
#include "ingham/lattice.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace ingham;

namespace {

QVec2 q(Rational a, Rational b) { return QVec2{QuadNumber(a), QuadNumber(b)}; }

LatticeSpec square_as_two_cosets() {
    LatticeSpec s;
    s.name = "square_two_cosets";
    s.l_star = QMat2{{{QuadNumber(1), QuadNumber(0)}, {QuadNumber(0), QuadNumber(1)}}};
    s.us = {q(0, 0), q(Rational(1, 2), 0)};
    return s;
}

}  // namespace

TEST_CASE("validate_spec rejects degenerate data") {
    LatticeSpec s = square_as_two_cosets();
    CHECK_NOTHROW(validate_spec(s));
    s.us.push_back(q(Rational(3, 2), 1));
    try {
        validate_spec(s);
        FAIL("no throw");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DuplicateTranslate);
    }
    s = square_as_two_cosets();
    s.l_star = QMat2{{{QuadNumber(1), QuadNumber(2)}, {QuadNumber(2), QuadNumber(4)}}};
    try {
        validate_spec(s);
        FAIL("no throw");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::SingularL);
    }
}

TEST_CASE("membership is exact for every catalog spec") {
    for (const std::string& name : catalog_names()) {
        const LatticeSpec spec = get(name).spec;
        for (std::size_t j = 0; j < spec.m(); ++j)
            for (std::int64_t a = -10; a <= 10; a += 5)
                for (std::int64_t b = -10; b <= 10; b += 4) {
                    const LatticePoint p{j, {a, b}};
                    const auto found = contains(spec, exact_point(spec, p));
                    REQUIRE(found.has_value());
                    CHECK(*found == p);
                }
        // A generic rational point is not a lattice point.
        CHECK_FALSE(contains(spec, exact_point(spec, {0, {0, 0}}) + q(Rational(1, 97), Rational(1, 89))).has_value());
    }
}

TEST_CASE("realize_points covers the honeycomb with unit spacing") {
    const LatticeSpec spec = get("honeycomb").spec;
    const auto pts = realize_points(spec, BBox{0, 0, 4, 4});
    REQUIRE(pts.size() > 10);
    double nearest = 1e9;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t k = i + 1; k < pts.size(); ++k)
            nearest = std::min(nearest, std::hypot(pts[i].position[0] - pts[k].position[0],
                                                   pts[i].position[1] - pts[k].position[1]));
    CHECK(nearest == doctest::Approx(1.0).epsilon(1e-12));
    for (const RealizedPoint& p : pts) {
        CHECK(p.position[0] >= -1e-12);
        CHECK(p.position[1] <= 4 + 1e-12);
    }
    CHECK(std::is_sorted(pts.begin(), pts.end(),
                         [](const RealizedPoint& a, const RealizedPoint& b) { return a.tag < b.tag; }));
    CHECK(realize_points(spec, BBox{1, 1, 1, 3}).empty());
}

TEST_CASE("minimality certificate") {
    const CatalogEntry hex = get("honeycomb");
    CHECK(minimality_certificate(hex.spec, hex.minimality_witnesses));
    const LatticeSpec two = square_as_two_cosets();
    const std::vector<QVec2> w = {q(0, 0), q(Rational(1, 2), 0)};
    CHECK_FALSE(minimality_certificate(two, w));
    CHECK(line_lattice_subset(two, w[0], w[1]));
    try {
        (void)line_lattice_subset(two, w[0], w[0]);
        FAIL("no throw");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InvalidConfig);
    }
    try {
        (void)line_lattice_subset(two, w[0], q(Rational(1, 3), 0));
        FAIL("no throw");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotInLattice);
    }
}

TEST_CASE("semi-regular vertex sets have equal edges and the right degree") {
    // Vertex degree of the uniform tiling: the number of nearest neighbours.
    const std::vector<std::pair<std::string, int>> degrees = {
        {"elongated_triangular", 5}, {"trihexagonal", 4}, {"snub_square", 5},         {"truncated_square", 3},
        {"snub_hexagonal", 5},       {"rhombitrihexagonal", 4}, {"truncated_hexagonal", 3}, {"truncated_trihexagonal", 3},
    };
    for (const auto& [name, degree] : degrees) {
        CAPTURE(name);
        const LatticeSpec spec = get(name).spec;
        const auto pts = realize_points(spec, BBox{-8, -8, 8, 8});
        double edge = 1e9;
        for (const RealizedPoint& a : pts) {
            if (std::hypot(a.position[0], a.position[1]) > 3) continue;
            for (const RealizedPoint& b : pts)
                if (&a != &b)
                    edge = std::min(edge, std::hypot(a.position[0] - b.position[0], a.position[1] - b.position[1]));
        }
        for (const RealizedPoint& a : pts) {
            if (std::hypot(a.position[0], a.position[1]) > 3) continue;
            int near = 0;
            double next = 1e9;
            for (const RealizedPoint& b : pts) {
                if (&a == &b) continue;
                const double d = std::hypot(a.position[0] - b.position[0], a.position[1] - b.position[1]);
                if (std::abs(d - edge) < 1e-9)
                    ++near;
                else
                    next = std::min(next, d);
            }
            CHECK(near == degree);
            CHECK(next > edge * 1.01);
        }
    }
}
