#include "ingham/verify.hpp"

#include "ingham/error.hpp"
#include "ingham/format.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>
#include <set>
#include <tuple>

namespace ingham {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// ∫_0^{2π} e^{iμt} dt; exact at integer μ.
std::complex<double> cell_factor(const QuadNumber& mu) {
    if (mu.is_zero()) return kTwoPi;
    if (mu.is_integer()) return 0.0;
    const double t = mu.to_double();
    return (unit_phase(mu) - 1.0) / std::complex<double>(0.0, t);
}

// ∫_a^b e^{iδt} dt, written to avoid cancellation for small δ.
std::complex<double> interval_factor(double delta, bool exact_zero, double a, double b) {
    if (exact_zero) return b - a;
    const double half = 0.5 * delta * (b - a);
    return std::polar(2.0 * std::sin(half) / delta, 0.5 * delta * (a + b));
}

QVec2 offset(const LatticeSpec& spec, const LatticePoint& p, const LatticePoint& q) {
    QVec2 mp = spec.us[p.j] + QVec2{QuadNumber(p.m[0]), QuadNumber(p.m[1])};
    QVec2 mq = spec.us[q.j] + QVec2{QuadNumber(q.m[0]), QuadNumber(q.m[1])};
    return mp - mq;
}

bool strictly_inside(const Quad& cell, const Vec2& p) {
    for (std::size_t i = 0; i < cell.size(); ++i) {
        const Vec2& a = cell[i];
        const Vec2& b = cell[(i + 1) % cell.size()];
        if ((b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0]) <= 0) return false;
    }
    return true;
}

// x-range of the horizontal slice of a convex polygon at height y.
std::pair<double, double> slice(const Quad& cell, double y) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (std::size_t i = 0; i < cell.size(); ++i) {
        const Vec2& a = cell[i];
        const Vec2& b = cell[(i + 1) % cell.size()];
        if ((a[1] - y) * (b[1] - y) > 0 || a[1] == b[1]) continue;
        const double x = a[0] + (y - a[1]) / (b[1] - a[1]) * (b[0] - a[0]);
        lo = std::min(lo, x);
        hi = std::max(hi, x);
    }
    return {lo, hi};
}

}  // namespace

void validate_support(const LatticeSpec& spec, const SupportSet& support) {
    if (support.items.empty()) throw Error(ErrorCode::EmptySupport, "support is empty");
    std::set<LatticePoint> seen;
    for (const LatticePoint& p : support.items) {
        if (p.j >= spec.m())
            throw Error(ErrorCode::SizeMismatch, "support refers to translate " + std::to_string(p.j));
        if (!seen.insert(p).second) throw Error(ErrorCode::InvalidConfig, "support repeats a point");
    }
}

SupportSet centered_support(std::size_t translates, int radius) {
    SupportSet s;
    for (std::size_t j = 0; j < translates; ++j)
        for (int a = -radius; a <= radius; ++a)
            for (int b = -radius; b <= radius; ++b) s.items.push_back({j, {a, b}});
    return s;
}

SupportSet box_support(std::size_t translates, int side) {
    SupportSet s;
    for (std::size_t j = 0; j < translates; ++j)
        for (int a = 0; a < side; ++a)
            for (int b = 0; b < side; ++b) s.items.push_back({j, {a, b}});
    return s;
}

SupportSet shell_support(std::size_t translates, std::size_t count) {
    SupportSet s;
    for (std::int64_t r = 0; s.size() < count; ++r) {
        std::vector<LatticePoint> shell;
        for (std::int64_t a = -r; a <= r; ++a)
            for (std::int64_t b = -r; b <= r; ++b) {
                if (std::max(std::abs(a), std::abs(b)) != r) continue;
                for (std::size_t j = 0; j < translates; ++j) shell.push_back({j, {a, b}});
            }
        std::sort(shell.begin(), shell.end(),
                  [](const LatticePoint& x, const LatticePoint& y) { return std::tie(x.m, x.j) < std::tie(y.m, y.j); });
        for (const LatticePoint& p : shell) {
            if (s.size() == count) break;
            s.items.push_back(p);
        }
        if (translates == 0) break;
    }
    return s;
}

std::complex<double> inner_product(const LatticeSpec& spec, const TranslationConfig& config, const LatticePoint& p,
                                   const LatticePoint& q) {
    const QVec2 mu = offset(spec, p, q);
    const std::complex<double> f = cell_factor(mu[0]) * cell_factor(mu[1]);
    if (f == 0.0) return 0.0;
    std::complex<double> phases = 0.0;
    for (const IVec2& n : config.ns) phases += unit_phase(mu[0] * QuadNumber(n[0]) + mu[1] * QuadNumber(n[1]));
    return phases * f / spec.abs_det_l();
}

GramMatrix gram(const LatticeSpec& spec, const TranslationConfig& config, const SupportSet& support) {
    validate_spec(spec);
    validate_config(config);
    validate_support(spec, support);
    const auto n = static_cast<Eigen::Index>(support.size());
    GramMatrix g;
    g.support = support;
    g.domain_area = expected_domain_area(spec);
    g.entries.resize(n, n);
    for (Eigen::Index a = 0; a < n; ++a) {
        for (Eigen::Index b = a; b < n; ++b) {
            const std::complex<double> v = inner_product(spec, config, support.items[static_cast<std::size_t>(a)],
                                                         support.items[static_cast<std::size_t>(b)]);
            g.entries(a, b) = v;
            g.entries(b, a) = std::conj(v);
        }
        g.entries(a, a) = g.entries(a, a).real();
    }
    return g;
}

FrameCheck frame_bound_check(const LatticeSpec& spec, const TranslationConfig& config, const SupportSet& support,
                             double rel_tol) {
    const SpectralResult s = ingham_constants(spec, config, rel_tol);
    const SpectrumExtremes ext = hermitian_extremes(gram(spec, config, support).entries);
    FrameCheck r;
    r.lambda_min = ext.min;
    r.lambda_max = ext.max;
    r.a2 = s.satisfies_a2;
    r.c1_full = s.satisfies_a2 ? s.c1_full : 0.0;
    r.c2_full = s.c2_full;
    const double eps = 1e-6 * r.c2_full;
    r.pass = r.lambda_max <= r.c2_full + eps && (!r.a2 || r.c1_full - eps <= r.lambda_min);
    return r;
}

CMatrix hole_gram(const LatticeSpec& spec, const SupportSet& support, const BBox& hole) {
    validate_support(spec, support);
    const auto n = static_cast<Eigen::Index>(support.size());
    CMatrix g(n, n);
    for (Eigen::Index a = 0; a < n; ++a) {
        for (Eigen::Index b = a; b < n; ++b) {
            const QVec2 delta =
                spec.l_star * offset(spec, support.items[static_cast<std::size_t>(a)], support.items[static_cast<std::size_t>(b)]);
            const std::complex<double> v =
                interval_factor(spec.scale * delta[0].to_double(), delta[0].is_zero(), hole.x0, hole.x1) *
                interval_factor(spec.scale * delta[1].to_double(), delta[1].is_zero(), hole.y0, hole.y1);
            g(a, b) = v;
            g(b, a) = std::conj(v);
        }
        g(a, a) = g(a, a).real();
    }
    return g;
}

std::vector<double> removal_witness(const LatticeSpec& spec, const TranslationConfig& config, const BBox& hole,
                                    const std::vector<SupportSet>& supports) {
    if (!hole.has_area()) throw Error(ErrorCode::HoleOutsideDomain, "hole has no area");
    const DomainGeometry geometry = omega_cells(spec, config);
    const std::array<Vec2, 4> corners{Vec2{hole.x0, hole.y0}, Vec2{hole.x1, hole.y0}, Vec2{hole.x1, hole.y1},
                                      Vec2{hole.x0, hole.y1}};
    const bool inside = std::any_of(geometry.cells.begin(), geometry.cells.end(), [&](const Quad& cell) {
        return std::all_of(corners.begin(), corners.end(), [&](const Vec2& c) { return strictly_inside(cell, c); });
    });
    if (!inside) throw Error(ErrorCode::HoleOutsideDomain, "hole is not strictly inside one cell of the domain");

    std::vector<double> out;
    out.reserve(supports.size());
    for (const SupportSet& s : supports) {
        const CMatrix diff = gram(spec, config, s).entries - hole_gram(spec, s, hole);
        out.push_back(hermitian_extremes(diff).min);
    }
    return out;
}

BBox central_hole(const Quad& cell) {
    Vec2 centroid{0, 0};
    for (const Vec2& v : cell) {
        centroid[0] += 0.25 * v[0];
        centroid[1] += 0.25 * v[1];
    }
    // Vertical extent of the cell through the centroid.
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (std::size_t i = 0; i < cell.size(); ++i) {
        const Vec2& a = cell[i];
        const Vec2& b = cell[(i + 1) % cell.size()];
        if ((a[0] - centroid[0]) * (b[0] - centroid[0]) > 0 || a[0] == b[0]) continue;
        const double y = a[1] + (centroid[0] - a[0]) / (b[0] - a[0]) * (b[1] - a[1]);
        lo = std::min(lo, y);
        hi = std::max(hi, y);
    }
    const double half_height = 0.25 * (hi - lo);
    const double y0 = centroid[1] - half_height;
    const double y1 = centroid[1] + half_height;
    // Slices of a convex polygon: the common x-range over [y0, y1] is set by the ends.
    auto [l0, r0] = slice(cell, y0);
    auto [l1, r1] = slice(cell, y1);
    const double left = std::max(l0, l1);
    const double right = std::min(r0, r1);
    const double mid = 0.5 * (left + right);
    const double half_width = 0.25 * (right - left);
    return BBox{mid - half_width, y0, mid + half_width, y1};
}

void write_witness_csv(std::ostream& os, const std::vector<SupportSet>& supports, const std::vector<double>& lambdas) {
    if (supports.size() != lambdas.size()) throw Error(ErrorCode::SizeMismatch, "one value per support expected");
    os << "support_size,lambda_min\n";
    for (std::size_t i = 0; i < supports.size(); ++i) os << supports[i].size() << ',' << fixed(lambdas[i]) << '\n';
}

}  // namespace ingham
