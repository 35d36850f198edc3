#include "ingham/rational.hpp"

#include "ingham/error.hpp"

#include <charconv>
#include <limits>
#include <numeric>
#include <ostream>

namespace ingham {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::Overflow: return "Overflow";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::FieldMismatch: return "FieldMismatch";
        case ErrorCode::SingularL: return "SingularL";
        case ErrorCode::DuplicateTranslate: return "DuplicateTranslate";
        case ErrorCode::InvalidSpec: return "InvalidSpec";
        case ErrorCode::NotInLattice: return "NotInLattice";
        case ErrorCode::PeriodTooLarge: return "PeriodTooLarge";
        case ErrorCode::SizeMismatch: return "SizeMismatch";
        case ErrorCode::InvalidConfig: return "InvalidConfig";
        case ErrorCode::NotHermitian: return "NotHermitian";
        case ErrorCode::DegenerateTiling: return "DegenerateTiling";
        case ErrorCode::SizeTooLarge: return "SizeTooLarge";
        case ErrorCode::HoleOutsideDomain: return "HoleOutsideDomain";
        case ErrorCode::EmptySupport: return "EmptySupport";
        case ErrorCode::UnknownTiling: return "UnknownTiling";
    }
    return "Unknown";
}

namespace {

__int128 gcd_wide(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace

Rational Rational::from_wide(__int128 num, __int128 den) {
    if (den == 0) throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    __int128 g = gcd_wide(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    constexpr auto lo = std::numeric_limits<std::int64_t>::min() + 1;
    constexpr auto hi = std::numeric_limits<std::int64_t>::max();
    if (num < lo || num > hi || den > hi) throw Error(ErrorCode::Overflow, "rational out of 64-bit range");
    Rational r;
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
}

Rational::Rational(std::int64_t num) : num_(num), den_(1) {}

Rational::Rational(std::int64_t num, std::int64_t den) { *this = from_wide(num, den); }

Rational Rational::parse(std::string_view text) {
    auto parse_int = [&](std::string_view s) {
        std::int64_t v = 0;
        if (!s.empty() && s.front() == '+') s.remove_prefix(1);
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
            throw Error(ErrorCode::ParseError, "bad rational literal '" + std::string(text) + "'");
        return v;
    };
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::int64_t Rational::floor() const noexcept {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
}

Rational Rational::frac() const { return *this - Rational(floor()); }

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const { return from_wide(-static_cast<__int128>(num_), den_); }

Rational& Rational::operator+=(const Rational& o) {
    *this = from_wide(static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_,
                      static_cast<__int128>(den_) * o.den_);
    return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
    *this = from_wide(static_cast<__int128>(num_) * o.num_, static_cast<__int128>(den_) * o.den_);
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_ == 0) throw Error(ErrorCode::DivisionByZero, "rational division by zero");
    *this = from_wide(static_cast<__int128>(num_) * o.den_, static_cast<__int128>(den_) * o.num_);
    return *this;
}

Rational Rational::inverse() const { return Rational(1) / *this; }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

std::int64_t lcm_checked(std::int64_t a, std::int64_t b) {
    __int128 g = gcd_wide(a, b);
    __int128 l = static_cast<__int128>(a) / g * b;
    if (l < 0) l = -l;
    if (l > std::numeric_limits<std::int64_t>::max()) throw Error(ErrorCode::Overflow, "lcm out of range");
    return static_cast<std::int64_t>(l);
}

}  // namespace ingham
