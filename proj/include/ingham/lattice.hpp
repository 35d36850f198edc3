#pragma once

#include "ingham/quad_number.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ingham {

using IVec2 = std::array<std::int64_t, 2>;
using Vec2 = std::array<double, 2>;
using Mat2 = std::array<std::array<double, 2>, 2>;

/// Λ = scale · L*(u_1 + Z²) ∪ … ∪ scale · L*(u_M + Z²).
///
/// l_star and the translates are exact over one quadratic field. `scale` is
/// a real homothety factor for tilings whose size is not expressible in that
/// field (two-square tilings with L* = √(R²+r²)·I); it never enters exact
/// membership tests, which run in the unscaled frame.
struct LatticeSpec {
    std::string name;
    QMat2 l_star{};
    std::vector<QVec2> us;
    double scale = 1.0;

    std::size_t m() const noexcept { return us.size(); }
    static constexpr int dim() noexcept { return 2; }

    /// Radicand shared by every exact entry (1 if all rational).
    int field() const;

    /// scale · L* as doubles.
    Mat2 l_star_numeric() const;
    /// L = (L*)ᵀ, scaled, as doubles.
    Mat2 l_numeric() const;
    /// L⁻¹ as doubles.
    Mat2 l_inverse_numeric() const;
    /// |det L| including the scale factor.
    double abs_det_l() const;
};

/// λ = L*(u_j + m); j is zero-based.
struct LatticePoint {
    std::size_t j = 0;
    IVec2 m{};

    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

struct RealizedPoint {
    LatticePoint tag;
    Vec2 position{};
};

struct BBox {
    double x0 = 0, y0 = 0, x1 = 0, y1 = 0;

    bool has_area() const noexcept { return x1 > x0 && y1 > y0; }
};

/// Throws SingularL, DuplicateTranslate or InvalidSpec; returns the spec unchanged otherwise.
const LatticeSpec& validate_spec(const LatticeSpec& spec);

/// Exact position L*(u_j + m) in the unscaled frame.
QVec2 exact_point(const LatticeSpec& spec, const LatticePoint& p);
/// Numeric position scale · L*(u_j + m).
Vec2 realize(const LatticeSpec& spec, const LatticePoint& p);

/// All points of Λ inside the closed box, ordered by (j, m₁, m₂).
std::vector<RealizedPoint> realize_points(const LatticeSpec& spec, const BBox& box);

/// Exact membership test in the unscaled frame.
std::optional<LatticePoint> contains(const LatticeSpec& spec, const QVec2& p);

/// Whether the progression {a + k(b − a) : k ∈ Z} lies entirely inside Λ.
bool line_lattice_subset(const LatticeSpec& spec, const QVec2& a, const QVec2& b);

/// Sufficient condition for M being minimal: no progression through two
/// distinct witnesses stays inside Λ.
bool minimality_certificate(const LatticeSpec& spec, std::span<const QVec2> witnesses);

/// Numeric helpers for 2×2 real matrices.
Vec2 mat_vec(const Mat2& m, const Vec2& v) noexcept;
double det(const Mat2& m) noexcept;
Mat2 inverse(const Mat2& m) noexcept;

}  // namespace ingham
