#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace ingham {

/// Exact rational p/q over 64-bit integers, always reduced with q > 0.
/// Arithmetic is overflow-checked (128-bit intermediates) and throws
/// Error{Overflow} rather than wrapping.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t num);  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t num, std::int64_t den);

    /// Parses "p", "-p", or "p/q".
    static Rational parse(std::string_view text);

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_ == 0; }
    bool is_integer() const noexcept { return den_ == 1; }

    /// Largest integer <= value.
    std::int64_t floor() const noexcept;
    /// value - floor(value), in [0, 1).
    Rational frac() const;

    double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
    std::string str() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    Rational inverse() const;

private:
    static Rational from_wide(__int128 num, __int128 den);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

std::int64_t lcm_checked(std::int64_t a, std::int64_t b);

}  // namespace ingham
