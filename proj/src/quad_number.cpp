#include "ingham/quad_number.hpp"

#include "ingham/error.hpp"

#include <cmath>
#include <ostream>

namespace ingham {

namespace {

bool is_square_free(int d) {
    if (d < 1) return false;
    for (int p = 2; p * p <= d; ++p)
        if (d % (p * p) == 0) return false;
    return true;
}

}  // namespace

QuadNumber::QuadNumber(Rational a) : a_(a) {}

QuadNumber::QuadNumber(Rational a, Rational b, int d) : a_(a), b_(b), d_(d) {
    if (!is_square_free(d)) throw Error(ErrorCode::FieldMismatch, "radicand must be square-free and positive");
    if (d_ == 1) {
        a_ += b_;
        b_ = Rational(0);
    }
    if (b_.is_zero()) d_ = 1;
}

int QuadNumber::common_field(const QuadNumber& x, const QuadNumber& y) {
    int dx = x.radicand();
    int dy = y.radicand();
    if (dx == 1) return dy;
    if (dy == 1 || dx == dy) return dx;
    throw Error(ErrorCode::FieldMismatch,
                "cannot combine Q(sqrt " + std::to_string(dx) + ") with Q(sqrt " + std::to_string(dy) + ")");
}

double QuadNumber::to_double() const noexcept {
    return a_.to_double() + b_.to_double() * std::sqrt(static_cast<double>(d_));
}

std::string QuadNumber::str() const {
    if (b_.is_zero()) return a_.str();
    std::string radical = "sqrt(" + std::to_string(d_) + ")";
    std::string coeff;
    if (b_ == Rational(1)) coeff = radical;
    else if (b_ == Rational(-1)) coeff = "-" + radical;
    else coeff = b_.str() + "*" + radical;
    if (a_.is_zero()) return coeff;
    if (coeff.front() == '-') return a_.str() + " - " + coeff.substr(1);
    return a_.str() + " + " + coeff;
}

QuadNumber QuadNumber::operator-() const {
    QuadNumber r = *this;
    r.a_ = -a_;
    r.b_ = -b_;
    return r;
}

QuadNumber& QuadNumber::operator+=(const QuadNumber& o) {
    int d = common_field(*this, o);
    a_ += o.a_;
    b_ += o.b_;
    d_ = b_.is_zero() ? 1 : d;
    return *this;
}

QuadNumber& QuadNumber::operator-=(const QuadNumber& o) { return *this += -o; }

QuadNumber& QuadNumber::operator*=(const QuadNumber& o) {
    int d = common_field(*this, o);
    Rational a = a_ * o.a_ + b_ * o.b_ * Rational(d);
    Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = a;
    b_ = b;
    d_ = b_.is_zero() ? 1 : d;
    return *this;
}

QuadNumber QuadNumber::inverse() const {
    if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    // (a + b√d)^{-1} = (a - b√d) / (a² - d b²); the norm is nonzero since √d is irrational.
    Rational norm = a_ * a_ - b_ * b_ * Rational(d_);
    QuadNumber r;
    r.a_ = a_ / norm;
    r.b_ = -b_ / norm;
    r.d_ = r.b_.is_zero() ? 1 : d_;
    return r;
}

QuadNumber& QuadNumber::operator/=(const QuadNumber& o) { return *this *= o.inverse(); }

std::ostream& operator<<(std::ostream& os, const QuadNumber& q) { return os << q.str(); }

QuadNumber det(const QMat2& m) { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

QMat2 inverse(const QMat2& m) {
    QuadNumber dt = det(m);
    if (dt.is_zero()) throw Error(ErrorCode::SingularL, "matrix is singular");
    QuadNumber inv = dt.inverse();
    return QMat2{{{m[1][1] * inv, -m[0][1] * inv}, {-m[1][0] * inv, m[0][0] * inv}}};
}

QMat2 transpose(const QMat2& m) { return QMat2{{{m[0][0], m[1][0]}, {m[0][1], m[1][1]}}}; }

QVec2 operator*(const QMat2& m, const QVec2& v) {
    return QVec2{m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1]};
}

QVec2 operator+(const QVec2& a, const QVec2& b) { return QVec2{a[0] + b[0], a[1] + b[1]}; }
QVec2 operator-(const QVec2& a, const QVec2& b) { return QVec2{a[0] - b[0], a[1] - b[1]}; }
QVec2 operator*(const QuadNumber& s, const QVec2& v) { return QVec2{s * v[0], s * v[1]}; }

}  // namespace ingham
