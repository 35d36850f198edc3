#include "ingham/lattice.hpp"

#include "ingham/error.hpp"

#include <algorithm>
#include <cmath>

namespace ingham {

namespace {

constexpr std::int64_t kMaxPeriod = 1'000'000;
constexpr double kBoxTol = 1e-12;

bool congruent_mod_z2(const QVec2& a, const QVec2& b) {
    QVec2 d = a - b;
    return d[0].is_integer() && d[1].is_integer();
}

IVec2 to_integer(const QVec2& v) {
    return IVec2{v[0].rational_part().num(), v[1].rational_part().num()};
}

}  // namespace

int LatticeSpec::field() const {
    int d = 1;
    auto absorb = [&](const QuadNumber& q) {
        int qd = q.radicand();
        if (qd == 1) return;
        if (d != 1 && d != qd) throw Error(ErrorCode::FieldMismatch, "spec '" + name + "' mixes radicals");
        d = qd;
    };
    for (const auto& row : l_star)
        for (const auto& x : row) absorb(x);
    for (const auto& u : us)
        for (const auto& x : u) absorb(x);
    return d;
}

Mat2 LatticeSpec::l_star_numeric() const {
    Mat2 out{};
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) out[r][c] = scale * l_star[r][c].to_double();
    return out;
}

Mat2 LatticeSpec::l_numeric() const {
    Mat2 ls = l_star_numeric();
    return Mat2{{{ls[0][0], ls[1][0]}, {ls[0][1], ls[1][1]}}};
}

Mat2 LatticeSpec::l_inverse_numeric() const { return inverse(l_numeric()); }

double LatticeSpec::abs_det_l() const { return std::abs(ingham::det(l_star).to_double()) * scale * scale; }

const LatticeSpec& validate_spec(const LatticeSpec& spec) {
    if (spec.us.empty()) throw Error(ErrorCode::InvalidSpec, "spec '" + spec.name + "' has no translates");
    if (!(spec.scale > 0) || !std::isfinite(spec.scale))
        throw Error(ErrorCode::InvalidSpec, "spec '" + spec.name + "' has a non-positive scale");
    (void)spec.field();
    if (det(spec.l_star).is_zero()) throw Error(ErrorCode::SingularL, "det(L*) = 0 in spec '" + spec.name + "'");
    for (std::size_t i = 0; i < spec.us.size(); ++i)
        for (std::size_t k = i + 1; k < spec.us.size(); ++k)
            if (congruent_mod_z2(spec.us[i], spec.us[k]))
                throw Error(ErrorCode::DuplicateTranslate, "u_" + std::to_string(i + 1) + " = u_" +
                                                               std::to_string(k + 1) + " mod Z^2 in spec '" +
                                                               spec.name + "'");
    return spec;
}

QVec2 exact_point(const LatticeSpec& spec, const LatticePoint& p) {
    QVec2 y = spec.us.at(p.j) + QVec2{QuadNumber(p.m[0]), QuadNumber(p.m[1])};
    return spec.l_star * y;
}

Vec2 realize(const LatticeSpec& spec, const LatticePoint& p) {
    const QVec2& u = spec.us.at(p.j);
    Vec2 y{u[0].to_double() + static_cast<double>(p.m[0]), u[1].to_double() + static_cast<double>(p.m[1])};
    return mat_vec(spec.l_star_numeric(), y);
}

std::vector<RealizedPoint> realize_points(const LatticeSpec& spec, const BBox& box) {
    std::vector<RealizedPoint> out;
    if (!box.has_area()) return out;
    Mat2 ls_inv = inverse(spec.l_star_numeric());
    // Range of lattice coordinates covering the box.
    double lo[2] = {INFINITY, INFINITY};
    double hi[2] = {-INFINITY, -INFINITY};
    for (double x : {box.x0, box.x1})
        for (double y : {box.y0, box.y1}) {
            Vec2 c = mat_vec(ls_inv, Vec2{x, y});
            for (int d = 0; d < 2; ++d) {
                lo[d] = std::min(lo[d], c[d]);
                hi[d] = std::max(hi[d], c[d]);
            }
        }
    for (std::size_t j = 0; j < spec.us.size(); ++j) {
        double u0 = spec.us[j][0].to_double();
        double u1 = spec.us[j][1].to_double();
        auto m0_lo = static_cast<std::int64_t>(std::floor(lo[0] - u0)) - 1;
        auto m0_hi = static_cast<std::int64_t>(std::ceil(hi[0] - u0)) + 1;
        auto m1_lo = static_cast<std::int64_t>(std::floor(lo[1] - u1)) - 1;
        auto m1_hi = static_cast<std::int64_t>(std::ceil(hi[1] - u1)) + 1;
        for (std::int64_t a = m0_lo; a <= m0_hi; ++a)
            for (std::int64_t b = m1_lo; b <= m1_hi; ++b) {
                LatticePoint tag{j, {a, b}};
                Vec2 p = realize(spec, tag);
                if (p[0] >= box.x0 - kBoxTol && p[0] <= box.x1 + kBoxTol && p[1] >= box.y0 - kBoxTol &&
                    p[1] <= box.y1 + kBoxTol)
                    out.push_back({tag, p});
            }
    }
    return out;
}

std::optional<LatticePoint> contains(const LatticeSpec& spec, const QVec2& p) {
    int field = spec.field();
    for (const auto& x : p) {
        int d = x.radicand();
        if (d != 1 && d != field)
            throw Error(ErrorCode::FieldMismatch, "point lies outside Q(sqrt " + std::to_string(field) + ")");
    }
    QVec2 y = inverse(spec.l_star) * p;
    for (std::size_t j = 0; j < spec.us.size(); ++j) {
        QVec2 m = y - spec.us[j];
        if (m[0].is_integer() && m[1].is_integer()) return LatticePoint{j, to_integer(m)};
    }
    return std::nullopt;
}

bool line_lattice_subset(const LatticeSpec& spec, const QVec2& a, const QVec2& b) {
    if (a == b) throw Error(ErrorCode::InvalidConfig, "progression needs two distinct points");
    if (!contains(spec, a) || !contains(spec, b))
        throw Error(ErrorCode::NotInLattice, "progression endpoints must lie in the lattice");
    QMat2 inv = inverse(spec.l_star);
    QVec2 x0 = inv * a;
    QVec2 delta = inv * (b - a);
    // An irrational step component moves the irrational part of x0 + kδ for
    // every k, so at most one k can land on a translate.
    if (!delta[0].is_rational() || !delta[1].is_rational()) return false;
    std::int64_t period = lcm_checked(delta[0].rational_part().den(), delta[1].rational_part().den());
    if (period > kMaxPeriod)
        throw Error(ErrorCode::PeriodTooLarge, "progression period " + std::to_string(period) + " exceeds 1e6");
    for (std::int64_t k = 0; k < period; ++k) {
        QVec2 x = x0 + QuadNumber(k) * delta;
        bool hit = std::any_of(spec.us.begin(), spec.us.end(), [&](const QVec2& u) {
            QVec2 r = x - u;
            return r[0].is_integer() && r[1].is_integer();
        });
        if (!hit) return false;
    }
    return true;
}

bool minimality_certificate(const LatticeSpec& spec, std::span<const QVec2> witnesses) {
    for (std::size_t i = 0; i < witnesses.size(); ++i)
        for (std::size_t k = i + 1; k < witnesses.size(); ++k)
            if (line_lattice_subset(spec, witnesses[i], witnesses[k])) return false;
    return true;
}

Vec2 mat_vec(const Mat2& m, const Vec2& v) noexcept {
    return Vec2{m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1]};
}

double det(const Mat2& m) noexcept { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

Mat2 inverse(const Mat2& m) noexcept {
    double d = det(m);
    return Mat2{{{m[1][1] / d, -m[0][1] / d}, {-m[1][0] / d, m[0][0] / d}}};
}

}  // namespace ingham
