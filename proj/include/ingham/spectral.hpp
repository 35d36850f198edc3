#pragma once

#include "ingham/lattice.hpp"

#include <Eigen/Dense>

#include <complex>
#include <vector>

namespace ingham {

using CMatrix = Eigen::MatrixXcd;

/// Integer grid points n_k; the translation vectors are v_k = 2π·n_k, so
/// every coordinate of v_k is a multiple of 2π by construction.
struct TranslationConfig {
    std::vector<IVec2> ns;

    std::size_t m() const noexcept { return ns.size(); }
};

/// Throws InvalidConfig on repeated points.
void validate_config(const TranslationConfig& config);

/// Relative gap κ₁/κ₂ above which E counts as invertible. Structurally
/// singular catalog configurations sit near 1e-16; the smallest genuine gap
/// in the catalog surveys is 1.5e-9 (two squares, r=1, R=4).
inline constexpr double kDefaultA2Tolerance = 1e-12;

/// exp(2πi·t) for exact t, with the rational part reduced mod 1 before
/// leaving exact arithmetic.
std::complex<double> unit_phase(const QuadNumber& t);

/// E[j][k] = exp(2πi⟨u_j, n_k⟩); rows are translates, columns translations.
CMatrix build_e(const LatticeSpec& spec, const TranslationConfig& config);

struct SpectrumExtremes {
    double min = 0;
    double max = 0;
};

/// Ascending eigenvalues of a Hermitian matrix (symmetrized first).
/// Throws NotHermitian if ‖h − h*‖_max exceeds 1e-10·max(1, ‖h‖_max).
Eigen::VectorXd hermitian_eigenvalues(const CMatrix& h);
SpectrumExtremes hermitian_extremes(const CMatrix& h);

struct SpectralResult {
    double kappa1 = 0;  ///< λ_min(EE*), clamped at 0
    double kappa2 = 0;  ///< λ_max(EE*)
    double det_abs = 0;
    bool satisfies_a2 = false;
    double c1_full = 0;  ///< κ₁·(2π)²/|det L|
    double c2_full = 0;  ///< κ₂·(2π)²/|det L|
    Eigen::VectorXd eigenvalues;

    double ratio() const noexcept { return kappa2 / kappa1; }
};

SpectralResult ingham_constants(const LatticeSpec& spec, const TranslationConfig& config,
                                double rel_tol = kDefaultA2Tolerance);

/// Same verdict logic as ingham_constants, starting from an already built E.
SpectralResult constants_from_e(const CMatrix& e, double abs_det_l, double rel_tol = kDefaultA2Tolerance);

bool check_a2(const LatticeSpec& spec, const TranslationConfig& config, double rel_tol = kDefaultA2Tolerance);

}  // namespace ingham
