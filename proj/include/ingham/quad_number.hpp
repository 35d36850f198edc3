#pragma once

#include "ingham/rational.hpp"

#include <array>
#include <iosfwd>
#include <string>

namespace ingham {

/// Exact element a + b·√d of the quadratic field Q(√d), d square-free.
///
/// d = 1 denotes plain rationals; the radical part is folded into a.
/// A number with b = 0 is compatible with every field, so rationals mix
/// freely with √2- or √3-numbers. Combining two genuinely irrational
/// numbers of different fields throws Error{FieldMismatch}.
class QuadNumber {
public:
    QuadNumber() = default;
    QuadNumber(Rational a);  // NOLINT(google-explicit-constructor)
    QuadNumber(std::int64_t a) : QuadNumber(Rational(a)) {}  // NOLINT(google-explicit-constructor)
    QuadNumber(Rational a, Rational b, int d);

    const Rational& rational_part() const noexcept { return a_; }
    const Rational& radical_coeff() const noexcept { return b_; }
    /// The radicand; 1 when the number is rational.
    int radicand() const noexcept { return b_.is_zero() ? 1 : d_; }

    bool is_zero() const noexcept { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const noexcept { return b_.is_zero(); }
    bool is_integer() const noexcept { return b_.is_zero() && a_.is_integer(); }

    double to_double() const noexcept;
    std::string str() const;

    QuadNumber operator-() const;
    QuadNumber& operator+=(const QuadNumber& o);
    QuadNumber& operator-=(const QuadNumber& o);
    QuadNumber& operator*=(const QuadNumber& o);
    QuadNumber& operator/=(const QuadNumber& o);

    friend QuadNumber operator+(QuadNumber a, const QuadNumber& b) { return a += b; }
    friend QuadNumber operator-(QuadNumber a, const QuadNumber& b) { return a -= b; }
    friend QuadNumber operator*(QuadNumber a, const QuadNumber& b) { return a *= b; }
    friend QuadNumber operator/(QuadNumber a, const QuadNumber& b) { return a /= b; }

    friend bool operator==(const QuadNumber& x, const QuadNumber& y) noexcept {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.radicand() == y.radicand();
    }

    /// Multiplicative inverse via the conjugate; throws DivisionByZero for 0.
    QuadNumber inverse() const;

private:
    static int common_field(const QuadNumber& x, const QuadNumber& y);

    Rational a_{};
    Rational b_{};
    int d_ = 1;
};

std::ostream& operator<<(std::ostream& os, const QuadNumber& q);

using QVec2 = std::array<QuadNumber, 2>;
/// Row-major: m[row][col].
using QMat2 = std::array<std::array<QuadNumber, 2>, 2>;

QuadNumber det(const QMat2& m);
/// Throws Error{SingularL} when det(m) = 0.
QMat2 inverse(const QMat2& m);
QMat2 transpose(const QMat2& m);
QVec2 operator*(const QMat2& m, const QVec2& v);
QVec2 operator+(const QVec2& a, const QVec2& b);
QVec2 operator-(const QVec2& a, const QVec2& b);
QVec2 operator*(const QuadNumber& s, const QVec2& v);

}  // namespace ingham
