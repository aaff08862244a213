#pragma once

#include "treeschur/scalar.hpp"
#include "treeschur/words.hpp"

namespace treeschur {

// The constants the ball mass asymptotics hinge on: m_ball(n) ~ n^3 / K.
struct Asymptotics {
  explicit Asymptotics(const GroupConfig& cfg);
  Rational K;  // 3q(q+1)/(q-1)^2
  Rational c;  // (q-1)/(q+1)
};

// Harish-Chandra function Xi(n) = (1 + c n) q^(-n/2); Xi(0) = 1.
QSqrt xi(const GroupConfig& cfg, unsigned n);

// Mass of the diagonal coefficient over the sphere S_k:
// 1 for k = 0, else ((q+1)/q) (1 + c k)^2. Equals sphere_size(k) * Xi(k)^2.
Rational m_sphere(const GroupConfig& cfg, unsigned k);

// Mass over the ball B_n, closed form; telescopes against m_sphere.
Rational m_ball(const GroupConfig& cfg, unsigned n);

// u_k = (1+k)/(1+ck), increasing to 1/c; drives the sphere-ratio bound.
Rational u_seq(const GroupConfig& cfg, unsigned k);
// (q/(q+1)) sup_k u_k^2 = q(q+1)/(q-1)^2.
Rational c_bound(const GroupConfig& cfg);

// K = 3q(q+1)/(q-1)^2.
Rational k_constant(const GroupConfig& cfg);

}  // namespace treeschur
