#include "ingham/spectral.hpp"

#include "ingham/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

namespace ingham {

void validate_config(const TranslationConfig& config) {
    std::set<IVec2> seen(config.ns.begin(), config.ns.end());
    if (seen.size() != config.ns.size()) throw Error(ErrorCode::InvalidConfig, "translation points must be distinct");
    if (config.ns.empty()) throw Error(ErrorCode::InvalidConfig, "empty translation config");
}

std::complex<double> unit_phase(const QuadNumber& t) {
    double turns = t.rational_part().frac().to_double();
    if (!t.is_rational()) {
        double irr = t.radical_coeff().to_double() * std::sqrt(static_cast<double>(t.radicand()));
        turns += irr - std::floor(irr);
    }
    return std::polar(1.0, 2.0 * std::numbers::pi * turns);
}

CMatrix build_e(const LatticeSpec& spec, const TranslationConfig& config) {
    if (config.m() != spec.m())
        throw Error(ErrorCode::SizeMismatch, "config has " + std::to_string(config.m()) + " points, spec has " +
                                                 std::to_string(spec.m()) + " translates");
    const auto m = static_cast<Eigen::Index>(spec.m());
    CMatrix e(m, m);
    for (Eigen::Index j = 0; j < m; ++j) {
        const QVec2& u = spec.us[static_cast<std::size_t>(j)];
        for (Eigen::Index k = 0; k < m; ++k) {
            const IVec2& n = config.ns[static_cast<std::size_t>(k)];
            QuadNumber dot = u[0] * QuadNumber(n[0]) + u[1] * QuadNumber(n[1]);
            e(j, k) = unit_phase(dot);
        }
    }
    return e;
}

Eigen::VectorXd hermitian_eigenvalues(const CMatrix& h) {
    if (h.rows() != h.cols()) throw Error(ErrorCode::NotHermitian, "matrix is not square");
    double scale = std::max(1.0, h.cwiseAbs().maxCoeff());
    double asym = (h - h.adjoint()).cwiseAbs().maxCoeff();
    if (asym > 1e-10 * scale) throw Error(ErrorCode::NotHermitian, "asymmetry " + std::to_string(asym));
    CMatrix sym = 0.5 * (h + h.adjoint());
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(sym, Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

SpectrumExtremes hermitian_extremes(const CMatrix& h) {
    Eigen::VectorXd w = hermitian_eigenvalues(h);
    return {w.minCoeff(), w.maxCoeff()};
}

SpectralResult constants_from_e(const CMatrix& e, double abs_det_l, double rel_tol) {
    SpectralResult r;
    r.eigenvalues = hermitian_eigenvalues(e * e.adjoint());
    r.kappa1 = std::max(0.0, r.eigenvalues.minCoeff());
    r.kappa2 = r.eigenvalues.maxCoeff();
    r.det_abs = std::abs(e.partialPivLu().determinant());
    r.satisfies_a2 = r.kappa2 > 0 && r.kappa1 / r.kappa2 > rel_tol;
    const double cube = 4.0 * std::numbers::pi * std::numbers::pi;
    r.c1_full = r.kappa1 * cube / abs_det_l;
    r.c2_full = r.kappa2 * cube / abs_det_l;
    return r;
}

SpectralResult ingham_constants(const LatticeSpec& spec, const TranslationConfig& config, double rel_tol) {
    validate_config(config);
    return constants_from_e(build_e(spec, config), spec.abs_det_l(), rel_tol);
}

bool check_a2(const LatticeSpec& spec, const TranslationConfig& config, double rel_tol) {
    return ingham_constants(spec, config, rel_tol).satisfies_a2;
}

}  // namespace ingham
