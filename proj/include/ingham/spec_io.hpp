#pragma once

// Custom tilings as JSON:
//   {"name": "...", "d": 3,
//    "l_star": [[{"a": "1", "b": "0"}, {"a": "1/2", "b": "0"}], [...]],
//    "us": [[{"a": "0", "b": "0"}, {"a": "0", "b": "0"}], ...]}
// Each {a, b} is a + b√d with a, b exact rationals "p/q". An optional
// numeric "scale" multiplies L*.

#include "ingham/lattice.hpp"

#include <json.hpp>

#include <string>

namespace ingham {

nlohmann::ordered_json spec_to_json(const LatticeSpec& spec);

/// Throws ParseError on schema violations, then validates the spec.
LatticeSpec spec_from_json(const nlohmann::json& j);

LatticeSpec load_spec_file(const std::string& path);

}  // namespace ingham
