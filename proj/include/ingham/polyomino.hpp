#pragma once

#include "ingham/lattice.hpp"

#include <compare>
#include <span>
#include <vector>

namespace ingham {

/// Cells translated so both minimum coordinates are 0, sorted lexicographically.
struct PolyominoShape {
    std::vector<IVec2> cells;

    std::size_t size() const noexcept { return cells.size(); }
    friend auto operator<=>(const PolyominoShape&, const PolyominoShape&) = default;
};

PolyominoShape canonicalize(std::span<const IVec2> cells);

/// All fixed (translation-only) edge-connected polyominoes with `size` cells,
/// sorted. 1 ≤ size ≤ 8; larger sizes throw SizeTooLarge.
std::vector<PolyominoShape> fixed_polyominoes(int size);

}  // namespace ingham
