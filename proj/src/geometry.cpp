#include "ingham/geometry.hpp"

#include "ingham/format.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <queue>
#include <set>

namespace ingham {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double cross(const Vec2& o, const Vec2& a, const Vec2& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

std::vector<Vec2> ccw(std::span<const Vec2> poly) {
    std::vector<Vec2> out(poly.begin(), poly.end());
    double signed_area = 0;
    for (std::size_t i = 0; i < out.size(); ++i) {
        const Vec2& p = out[i];
        const Vec2& q = out[(i + 1) % out.size()];
        signed_area += p[0] * q[1] - q[0] * p[1];
    }
    if (signed_area < 0) std::reverse(out.begin(), out.end());
    return out;
}

}  // namespace

double polygon_area(std::span<const Vec2> polygon) {
    double s = 0;
    for (std::size_t i = 0; i < polygon.size(); ++i) {
        const Vec2& p = polygon[i];
        const Vec2& q = polygon[(i + 1) % polygon.size()];
        s += p[0] * q[1] - q[0] * p[1];
    }
    return 0.5 * std::abs(s);
}

double convex_intersection_area(std::span<const Vec2> a, std::span<const Vec2> b) {
    std::vector<Vec2> subject = ccw(a);
    std::vector<Vec2> clip = ccw(b);
    for (std::size_t e = 0; e < clip.size() && !subject.empty(); ++e) {
        const Vec2& c0 = clip[e];
        const Vec2& c1 = clip[(e + 1) % clip.size()];
        std::vector<Vec2> next;
        for (std::size_t i = 0; i < subject.size(); ++i) {
            const Vec2& p = subject[i];
            const Vec2& q = subject[(i + 1) % subject.size()];
            double sp = cross(c0, c1, p);
            double sq = cross(c0, c1, q);
            if (sp >= 0) next.push_back(p);
            if ((sp >= 0) != (sq >= 0)) {
                double t = sp / (sp - sq);
                next.push_back(Vec2{p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])});
            }
        }
        subject = std::move(next);
    }
    return subject.size() < 3 ? 0.0 : polygon_area(subject);
}

DomainGeometry omega_cells(const LatticeSpec& spec, const TranslationConfig& config) {
    validate_config(config);
    const Mat2 l_inv = spec.l_inverse_numeric();
    DomainGeometry g;
    for (const IVec2& n : config.ns) {
        const double x = kTwoPi * static_cast<double>(n[0]);
        const double y = kTwoPi * static_cast<double>(n[1]);
        Quad cell{mat_vec(l_inv, {x, y}), mat_vec(l_inv, {x + kTwoPi, y}), mat_vec(l_inv, {x + kTwoPi, y + kTwoPi}),
                  mat_vec(l_inv, {x, y + kTwoPi})};
        if (det(l_inv) < 0) std::reverse(cell.begin(), cell.end());
        g.area += polygon_area(cell);
        g.cells.push_back(cell);
    }
    for (std::size_t i = 0; i < g.cells.size(); ++i)
        for (std::size_t k = i; k < g.cells.size(); ++k)
            for (const Vec2& p : g.cells[i])
                for (const Vec2& q : g.cells[k])
                    g.diameter = std::max(g.diameter, std::hypot(p[0] - q[0], p[1] - q[1]));
    g.connected = is_connected(config.ns);
    return g;
}

double pairwise_overlap_area(const DomainGeometry& geometry) {
    double overlap = 0;
    for (std::size_t i = 0; i < geometry.cells.size(); ++i)
        for (std::size_t k = i + 1; k < geometry.cells.size(); ++k)
            overlap += convex_intersection_area(geometry.cells[i], geometry.cells[k]);
    return overlap;
}

double area_check(const DomainGeometry& geometry, const LatticeSpec&) {
    double total = 0;
    for (const Quad& c : geometry.cells) total += polygon_area(c);
    return total - pairwise_overlap_area(geometry);
}

double expected_domain_area(const LatticeSpec& spec) {
    return static_cast<double>(spec.m()) * kTwoPi * kTwoPi / spec.abs_det_l();
}

DiskBounds disk_bounds(const DomainGeometry& geometry) {
    return DiskBounds{geometry.diameter / 2.0, std::sqrt(geometry.area / std::numbers::pi), 2.0 * bessel_j0_root()};
}

double bessel_j0(double x) {
    const double q = x * x / 4.0;
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k < 80; ++k) {
        term *= -q / (static_cast<double>(k) * static_cast<double>(k));
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return sum;
}

double bessel_j0_root() {
    double lo = 2.0;
    double hi = 3.0;  // J0(2) > 0 > J0(3)
    for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
        double mid = 0.5 * (lo + hi);
        if (bessel_j0(mid) > 0) lo = mid;
        else hi = mid;
    }
    return 0.5 * (lo + hi);
}

bool is_connected(std::span<const IVec2> cells) {
    if (cells.empty()) return false;
    std::set<IVec2> all(cells.begin(), cells.end());
    std::set<IVec2> seen{cells.front()};
    std::queue<IVec2> todo;
    todo.push(cells.front());
    constexpr std::array<IVec2, 4> steps{{{1, 0}, {-1, 0}, {0, 1}, {0, -1}}};
    while (!todo.empty()) {
        IVec2 c = todo.front();
        todo.pop();
        for (const IVec2& s : steps) {
            IVec2 nb{c[0] + s[0], c[1] + s[1]};
            if (all.contains(nb) && seen.insert(nb).second) todo.push(nb);
        }
    }
    return seen.size() == all.size();
}

void write_polygons_csv(std::ostream& os, const DomainGeometry& geometry) {
    os << "cell_index,vertex_index,x,y\n";
    for (std::size_t i = 0; i < geometry.cells.size(); ++i)
        for (std::size_t v = 0; v < 4; ++v)
            os << i << ',' << v << ',' << fixed(geometry.cells[i][v][0], 12) << ','
               << fixed(geometry.cells[i][v][1], 12) << '\n';
}

}  // namespace ingham
