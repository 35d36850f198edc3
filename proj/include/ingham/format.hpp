#pragma once

#include <cmath>
#include <cstdio>
#include <string>

namespace ingham {

/// Fixed-point text for deterministic reports; values that round to zero
/// print without a sign.
inline std::string fixed(double x, int precision = 10) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", precision, x);
    std::string s(buf);
    if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
    return s;
}

}  // namespace ingham
