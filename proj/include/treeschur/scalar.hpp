#pragma once

#include "treeschur/rational.hpp"

#include <complex>
#include <optional>
#include <string>
#include <string_view>

namespace treeschur {

// Element a + b*sqrt(q) of Q(sqrt(q)). q is carried by the value; mixing
// scalars over different q is a logic error and throws.
//
// When q happens to be a perfect square (q = 9 at rank 5) the (a, b) pair is
// no longer a unique representation; comparisons and sign tests then go
// through the rational value a + b*r, and division divides by that rational.
// The representation itself is never canonicalized to b = 0.
class QSqrt {
 public:
  QSqrt() : a_(0), b_(0), q_(0) {}
  QSqrt(Rational a, Rational b, long q) : a_(std::move(a)), b_(std::move(b)), q_(q) {}

  static QSqrt zero(long q) { return QSqrt(0, 0, q); }
  static QSqrt one(long q) { return QSqrt(1, 0, q); }
  static QSqrt of(Rational r, long q) { return QSqrt(std::move(r), 0, q); }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  long q() const { return q_; }

  bool is_zero() const;
  bool is_rational() const;  // value lies in Q
  // Sign of the real value a + b*sqrt(q): -1, 0, +1. Exact.
  int sign() const;

  QSqrt operator-() const { return QSqrt(-a_, -b_, q_); }
  QSqrt& operator+=(const QSqrt& o);
  QSqrt& operator-=(const QSqrt& o);
  QSqrt& operator*=(const QSqrt& o);
  friend QSqrt operator+(QSqrt x, const QSqrt& y) { return x += y; }
  friend QSqrt operator-(QSqrt x, const QSqrt& y) { return x -= y; }
  friend QSqrt operator*(QSqrt x, const QSqrt& y) { return x *= y; }
  // Throws std::domain_error("zero divisor") when y = 0.
  friend QSqrt operator/(const QSqrt& x, const QSqrt& y);

  QSqrt scaled(const Rational& r) const { return QSqrt(a_ * r, b_ * r, q_); }

  bool operator==(const QSqrt& o) const;  // value equality (square-q aware)
  bool operator!=(const QSqrt& o) const { return !(*this == o); }
  bool operator<=(const QSqrt& o) const { return (*this - o).sign() <= 0; }
  bool operator<(const QSqrt& o) const { return (*this - o).sign() < 0; }

  double to_double() const;
  // "a/b + c/d*sqrt(q)" with decimal integer components.
  std::string str() const;

 private:
  void check_compatible(const QSqrt& o) const;
  Rational a_, b_;
  long q_;
};

// q^(m/2), exact: (q^floor(m/2)) * sqrt(q)^(m mod 2), negative m via 1/sqrt(q) = sqrt(q)/q.
QSqrt q_half_power(long q, long m);

// Integer square root if q is a perfect square.
std::optional<long> exact_sqrt(long q);

// Parses the canonical QSqrt serialization; also accepts a bare rational
// (no sqrt part). The q of the result is taken from `q`, and a mismatching
// sqrt radicand in the string is an error.
QSqrt parse_qsqrt(std::string_view s, long q);

// Complex scalar with real and imaginary parts in Q(sqrt(q)).
class CScalar {
 public:
  CScalar() = default;
  CScalar(QSqrt re, QSqrt im) : re_(std::move(re)), im_(std::move(im)) {}

  static CScalar zero(long q) { return CScalar(QSqrt::zero(q), QSqrt::zero(q)); }
  static CScalar one(long q) { return CScalar(QSqrt::one(q), QSqrt::zero(q)); }
  static CScalar real(QSqrt x) {
    long q = x.q();
    return CScalar(std::move(x), QSqrt::zero(q));
  }

  const QSqrt& re() const { return re_; }
  const QSqrt& im() const { return im_; }

  CScalar conj() const { return CScalar(re_, -im_); }
  QSqrt abs2() const { return re_ * re_ + im_ * im_; }

  CScalar& operator+=(const CScalar& o);
  CScalar& operator-=(const CScalar& o);
  CScalar& operator*=(const CScalar& o);
  friend CScalar operator+(CScalar x, const CScalar& y) { return x += y; }
  friend CScalar operator-(CScalar x, const CScalar& y) { return x -= y; }
  friend CScalar operator*(CScalar x, const CScalar& y) { return x *= y; }

  CScalar scaled(const Rational& r) const { return CScalar(re_.scaled(r), im_.scaled(r)); }
  // Multiplication by a real scalar, cheaper than a full complex product.
  CScalar times_real(const QSqrt& x) const { return CScalar(re_ * x, im_ * x); }

  bool operator==(const CScalar& o) const { return re_ == o.re_ && im_ == o.im_; }
  bool operator!=(const CScalar& o) const { return !(*this == o); }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

  std::complex<double> to_complex() const { return {re_.to_double(), im_.to_double()}; }
  // "re , im" with both parts in QSqrt serialization.
  std::string str() const { return re_.str() + " , " + im_.str(); }

 private:
  QSqrt re_, im_;
};

}  // namespace treeschur
