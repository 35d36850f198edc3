#pragma once

#include "ingham/spectral.hpp"

#include <array>
#include <iosfwd>
#include <span>
#include <vector>

namespace ingham {

/// Four vertices, counter-clockwise.
using Quad = std::array<Vec2, 4>;

/// The integration domain Ω = L⁻¹(∪_k (2πn_k + (0,2π)²)) as its cells.
struct DomainGeometry {
    std::vector<Quad> cells;
    double area = 0;      ///< sum of cell areas (cells never overlap)
    double diameter = 0;  ///< max distance between cell vertices
    bool connected = false;
};

DomainGeometry omega_cells(const LatticeSpec& spec, const TranslationConfig& config);

double polygon_area(std::span<const Vec2> polygon);

/// Area of the intersection of two convex polygons (Sutherland–Hodgman).
double convex_intersection_area(std::span<const Vec2> a, std::span<const Vec2> b);

/// Σ_{i<k} |cell_i ∩ cell_k|; zero for every valid configuration.
double pairwise_overlap_area(const DomainGeometry& geometry);

/// Union area: cell areas minus pairwise overlaps. Equals M(2π)²/|det L|.
double area_check(const DomainGeometry& geometry, const LatticeSpec& spec);

/// M(2π)²/|det L|.
double expected_domain_area(const LatticeSpec& spec);

struct DiskBounds {
    double r_sufficient = 0;  ///< half the diameter: a larger disk contains a translate of Ω
    double r_necessary = 0;   ///< √(area/π): a disk with the estimates has at least Ω's area
    double r_bessel = 0;      ///< 2ρ₂, the uniform-gap radius for the hexagonal family
};

DiskBounds disk_bounds(const DomainGeometry& geometry);

/// J₀ by its power series; accurate for |x| ≤ 10.
double bessel_j0(double x);

/// Smallest positive zero ρ₂ of J₀, bisected on [2, 3].
double bessel_j0_root();

/// Edge-connectivity (4-neighbourhood) of unit cells at the given grid points.
bool is_connected(std::span<const IVec2> cells);

/// CSV rows "cell_index,vertex_index,x,y" with a header line.
void write_polygons_csv(std::ostream& os, const DomainGeometry& geometry);

}  // namespace ingham
