#pragma once

// Finite-support certificates for the two-sided estimate
//   c₁ Σ|a_λ|² ≤ ∫_Ω |Σ a_λ e^{i(λ,x)}|² dx ≤ c₂ Σ|a_λ|².
// For a finite support S the middle term is a*Ga with G the Gram matrix of
// the exponentials over Ω, so the estimate holds on S iff spec(G) ⊂ [c₁, c₂].

#include "ingham/geometry.hpp"
#include "ingham/spectral.hpp"

#include <complex>
#include <iosfwd>
#include <vector>

namespace ingham {

struct SupportSet {
    std::vector<LatticePoint> items;

    std::size_t size() const noexcept { return items.size(); }
};

/// Throws EmptySupport / InvalidConfig (duplicates) / SizeMismatch (bad translate index).
void validate_support(const LatticeSpec& spec, const SupportSet& support);

/// {(j, m) : |m|∞ ≤ radius, all j}, ordered by (j, m).
SupportSet centered_support(std::size_t translates, int radius);

/// {(j, m) : m ∈ [0, side)², all j}; nested in `side`.
SupportSet box_support(std::size_t translates, int side);

/// First `count` points when ordered by |m|∞ shell, then m, then j.
/// Prefixes of this ordering are nested.
SupportSet shell_support(std::size_t translates, std::size_t count);

/// ∫_Ω e^{i(λ_p − λ_q, x)} dx in closed form.
std::complex<double> inner_product(const LatticeSpec& spec, const TranslationConfig& config, const LatticePoint& p,
                                   const LatticePoint& q);

struct GramMatrix {
    CMatrix entries;
    SupportSet support;
    double domain_area = 0;
};

GramMatrix gram(const LatticeSpec& spec, const TranslationConfig& config, const SupportSet& support);

struct FrameCheck {
    double lambda_min = 0;
    double lambda_max = 0;
    double c1_full = 0;  ///< 0 when (A2) fails
    double c2_full = 0;
    bool a2 = false;
    bool pass = false;
};

/// pass ⟺ c1_full − ε ≤ λ_min(G) and λ_max(G) ≤ c2_full + ε, ε = 1e-6·c2_full.
/// When (A2) fails only the upper bound is checked.
FrameCheck frame_bound_check(const LatticeSpec& spec, const TranslationConfig& config, const SupportSet& support,
                             double rel_tol = kDefaultA2Tolerance);

/// ∫_ω e^{i(λ_p − λ_q, x)} dx over an axis-aligned rectangle ω.
CMatrix hole_gram(const LatticeSpec& spec, const SupportSet& support, const BBox& hole);

/// λ_min of G_{Ω∖ω} = G_Ω − G_ω for each support. The hole must lie strictly
/// inside one cell of Ω (HoleOutsideDomain otherwise).
std::vector<double> removal_witness(const LatticeSpec& spec, const TranslationConfig& config, const BBox& hole,
                                    const std::vector<SupportSet>& supports);

/// Axis-aligned rectangle centred at the centroid of `cell`, half as tall as
/// the cell and half as wide as the horizontal band available at that height.
BBox central_hole(const Quad& cell);

/// CSV rows "support_size,lambda_min".
void write_witness_csv(std::ostream& os, const std::vector<SupportSet>& supports, const std::vector<double>& lambdas);

}  // namespace ingham
