#include "ingham/two_square.hpp"

#include "ingham/error.hpp"

#include <cmath>
#include <numbers>

namespace ingham {

LatticeSpec two_square_spec(Rational r, Rational big_r) {
    if (!(Rational(0) < r) || !(r < big_r))
        throw Error(ErrorCode::DegenerateTiling, "two-square tiling needs 0 < r < R (got r=" + r.str() +
                                                     ", R=" + big_r.str() + ")");
    Rational hyp2 = big_r * big_r + r * r;
    // A cos α and A sin α, as coefficients of √2.
    QuadNumber c(Rational(0), r * big_r / (Rational(2) * hyp2), 2);
    QuadNumber s(Rational(0), r * r / (Rational(2) * hyp2), 2);

    LatticeSpec spec;
    spec.name = "two_square_r" + r.str() + "_R" + big_r.str();
    spec.l_star = QMat2{{{QuadNumber(1), QuadNumber(0)}, {QuadNumber(0), QuadNumber(1)}}};
    spec.scale = std::sqrt(hyp2.to_double());
    // θ_j = −α + jπ/2 for j = 1..4
    spec.us = {QVec2{s, c}, QVec2{-c, s}, QVec2{-s, -c}, QVec2{c, -s}};
    validate_spec(spec);
    return spec;
}

TranslationConfig two_square_canonical_config() { return TranslationConfig{{{0, 0}, {1, 0}, {0, 1}, {1, 1}}}; }

std::complex<double> two_square_delta_at_angle(double alpha) {
    const double a = std::sin(alpha) / std::numbers::sqrt2;
    const double two_pi = 2.0 * std::numbers::pi;
    const std::complex<double> c = std::polar(1.0, two_pi * a * std::cos(alpha));
    const std::complex<double> d = std::polar(1.0, two_pi * a * std::sin(alpha));
    return (c * c - 1.0) * (d * d - 1.0) * (c * c * d * d - 4.0 * c * d + c * c + d * d + 1.0);
}

std::complex<double> two_square_delta(double r, double big_r) {
    if (!(r > 0) || !(r < big_r))
        throw Error(ErrorCode::DegenerateTiling, "two-square tiling needs 0 < r < R");
    return two_square_delta_at_angle(std::atan(r / big_r));
}

double trig_identity_residual(double beta, double gamma) {
    double lhs = std::sin(2 * beta + 2 * gamma) - 4 * std::sin(beta + gamma) + std::sin(2 * beta) +
                 std::sin(2 * gamma);
    double rhs = 4 * std::sin(beta + gamma) * (std::cos(beta) * std::cos(gamma) - 1);
    return std::abs(lhs - rhs);
}

}  // namespace ingham
