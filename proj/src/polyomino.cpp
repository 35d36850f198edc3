#include "ingham/polyomino.hpp"

#include "ingham/error.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace ingham {

PolyominoShape canonicalize(std::span<const IVec2> cells) {
    PolyominoShape s;
    if (cells.empty()) return s;
    std::int64_t mx = std::numeric_limits<std::int64_t>::max();
    std::int64_t my = mx;
    for (const IVec2& c : cells) {
        mx = std::min(mx, c[0]);
        my = std::min(my, c[1]);
    }
    s.cells.reserve(cells.size());
    for (const IVec2& c : cells) s.cells.push_back({c[0] - mx, c[1] - my});
    std::sort(s.cells.begin(), s.cells.end());
    return s;
}

std::vector<PolyominoShape> fixed_polyominoes(int size) {
    if (size > 8) throw Error(ErrorCode::SizeTooLarge, "polyomino size " + std::to_string(size) + " > 8");
    if (size < 1) throw Error(ErrorCode::InvalidConfig, "polyomino size must be positive");

    // Grow every shape of size k by one edge-adjacent cell, deduplicating canonical forms.
    std::set<PolyominoShape> layer{PolyominoShape{{{0, 0}}}};
    for (int k = 1; k < size; ++k) {
        std::set<PolyominoShape> next;
        for (const PolyominoShape& shape : layer) {
            std::set<IVec2> occupied(shape.cells.begin(), shape.cells.end());
            for (const IVec2& c : shape.cells)
                for (IVec2 step : {IVec2{1, 0}, IVec2{-1, 0}, IVec2{0, 1}, IVec2{0, -1}}) {
                    IVec2 nb{c[0] + step[0], c[1] + step[1]};
                    if (occupied.contains(nb)) continue;
                    std::vector<IVec2> grown = shape.cells;
                    grown.push_back(nb);
                    next.insert(canonicalize(grown));
                }
        }
        layer = std::move(next);
    }
    return {layer.begin(), layer.end()};
}

}  // namespace ingham
