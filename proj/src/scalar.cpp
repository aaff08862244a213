#include "treeschur/scalar.hpp"

#include <cmath>
#include <utility>

namespace treeschur {

std::optional<long> exact_sqrt(long q) {
  if (q < 0) return std::nullopt;
  long r = static_cast<long>(std::lround(std::sqrt(static_cast<double>(q))));
  for (long c = r - 1; c <= r + 1; ++c)
    if (c >= 0 && c * c == q) return c;
  return std::nullopt;
}

void QSqrt::check_compatible(const QSqrt& o) const {
  if (q_ != o.q_) throw std::invalid_argument("QSqrt radicand mismatch");
}

bool QSqrt::is_zero() const {
  if (a_ == 0 && b_ == 0) return true;
  if (auto r = exact_sqrt(q_)) return a_ + b_ * *r == 0;
  return false;
}

bool QSqrt::is_rational() const {
  return b_ == 0 || exact_sqrt(q_).has_value();
}

int QSqrt::sign() const {
  if (auto r = exact_sqrt(q_)) return sign_of(a_ + b_ * *r);
  const int sa = sign_of(a_), sb = sign_of(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: compare a^2 with b^2 q; the larger magnitude wins.
  const int scmp = sign_of(a_ * a_ - b_ * b_ * q_);
  return scmp == 0 ? 0 : (scmp > 0 ? sa : sb);
}

QSqrt& QSqrt::operator+=(const QSqrt& o) {
  check_compatible(o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QSqrt& QSqrt::operator-=(const QSqrt& o) {
  check_compatible(o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QSqrt& QSqrt::operator*=(const QSqrt& o) {
  check_compatible(o);
  Rational na = a_ * o.a_ + b_ * o.b_ * q_;
  Rational nb = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(na);
  b_ = std::move(nb);
  return *this;
}

QSqrt operator/(const QSqrt& x, const QSqrt& y) {
  x.check_compatible(y);
  if (y.is_zero()) throw std::domain_error("zero divisor");
  if (auto r = exact_sqrt(y.q_)) {
    // sqrt(q) is rational: divide by the rational value of y.
    Rational v = y.a_ + y.b_ * *r;
    return QSqrt(x.a_ / v, x.b_ / v, x.q_);
  }
  Rational denom = y.a_ * y.a_ - y.b_ * y.b_ * y.q_;
  QSqrt prod = x * QSqrt(y.a_, -y.b_, y.q_);
  return QSqrt(prod.a_ / denom, prod.b_ / denom, x.q_);
}

bool QSqrt::operator==(const QSqrt& o) const {
  check_compatible(o);
  if (a_ == o.a_ && b_ == o.b_) return true;
  if (auto r = exact_sqrt(q_)) return a_ + b_ * *r == o.a_ + o.b_ * *r;
  return false;
}

double QSqrt::to_double() const {
  return treeschur::to_double(a_) + treeschur::to_double(b_) * std::sqrt(static_cast<double>(q_));
}

std::string QSqrt::str() const {
  return rational_str(a_) + " + " + rational_str(b_) + "*sqrt(" + std::to_string(q_) + ")";
}

QSqrt q_half_power(long q, long m) {
  // m = 2t + r with r in {0, 1}
  long t = (m >= 0) ? m / 2 : -((-m + 1) / 2);
  long r = m - 2 * t;
  Rational qt = rational_pow(q, t);
  if (r == 0) return QSqrt(qt, 0, q);
  return QSqrt(0, std::move(qt), q);
}

QSqrt parse_qsqrt(std::string_view s, long q) {
  const auto star = s.find("*sqrt(");
  if (star == std::string_view::npos) return QSqrt(parse_rational(s), 0, q);
  const auto close = s.rfind(')');
  if (close == std::string_view::npos || close < star)
    throw std::invalid_argument("bad QSqrt literal: unterminated sqrt");
  long rad = std::stol(std::string(s.substr(star + 6, close - star - 6)));
  if (rad != q) throw std::invalid_argument("QSqrt literal radicand mismatch");
  // split "<a> + <b>*sqrt(q)" at the last " + " before the sqrt part
  const auto plus = s.rfind(" + ", star);
  if (plus == std::string_view::npos)
    throw std::invalid_argument("bad QSqrt literal: missing ' + ' separator");
  return QSqrt(parse_rational(s.substr(0, plus)), parse_rational(s.substr(plus + 3, star - plus - 3)),
               q);
}

CScalar& CScalar::operator+=(const CScalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

CScalar& CScalar::operator-=(const CScalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

CScalar& CScalar::operator*=(const CScalar& o) {
  QSqrt nre = re_ * o.re_ - im_ * o.im_;
  QSqrt nim = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(nre);
  im_ = std::move(nim);
  return *this;
}

}  // namespace treeschur
