#pragma once

// Pythagorean tiling by squares of sides r < R.
//
// After rotating by α = arctan(r/R) the centres of the small squares sit on
// √(R²+r²)·Z², and the tiling's vertices split into four translates
//   u_j = A(cos θ_j, sin θ_j),  θ_j = −α + jπ/2,  A = r / √(2(R²+r²)).
// For rational r, R the components ±A cos α = ±rR√2 / (2(R²+r²)) and
// ±A sin α = ±r²√2 / (2(R²+r²)) are exact in Q(√2).

#include "ingham/spectral.hpp"

#include <complex>

namespace ingham {

/// Throws DegenerateTiling unless 0 < r < R.
LatticeSpec two_square_spec(Rational r, Rational big_r);

/// n ∈ {(0,0), (1,0), (0,1), (1,1)}.
TranslationConfig two_square_canonical_config();

/// Closed-form det E for the canonical config:
///   Δ = (C²−1)(D²−1)(C²D² − 4CD + C² + D² + 1),
/// with C = exp(2πi·A cos α), D = exp(2πi·A sin α). |Δ| equals |det E|;
/// the phase can differ by the row/column ordering of E.
std::complex<double> two_square_delta(double r, double big_r);

/// Δ depends on r/R only, through α (A = sin α / √2). Defined on [0, π/2];
/// α = π/4 is the r = R limit.
std::complex<double> two_square_delta_at_angle(double alpha);

/// |sin(2β+2γ) − 4 sin(β+γ) + sin 2β + sin 2γ − 4 sin(β+γ)(cos β cos γ − 1)|,
/// i.e. the residual of the identity that proves Im(C²D² − 4CD + C² + D² + 1) ≠ 0.
double trig_identity_residual(double beta, double gamma);

}  // namespace ingham
