#include "treeschur/closedforms.hpp"

namespace treeschur {

Asymptotics::Asymptotics(const GroupConfig& cfg)
    : K(k_constant(cfg)), c(Rational(cfg.q() - 1, cfg.q() + 1)) {}

QSqrt xi(const GroupConfig& cfg, unsigned n) {
  const long q = cfg.q();
  const Rational c(q - 1, q + 1);
  return q_half_power(q, -static_cast<long>(n)).scaled(1 + c * n);
}

Rational m_sphere(const GroupConfig& cfg, unsigned k) {
  if (k == 0) return Rational(1);
  const long q = cfg.q();
  const Rational c(q - 1, q + 1);
  const Rational t = 1 + c * k;
  return Rational(q + 1, q) * t * t;
}

Rational m_ball(const GroupConfig& cfg, unsigned n) {
  const long q = cfg.q();
  const Rational c(q - 1, q + 1);
  const BigInt nn(n);
  const Rational cube = Rational(nn * (nn + 1) * (2 * nn + 1), 6);
  return 1 + Rational(q + 1, q) * (cube * c * c + Rational(nn * (nn + 1)) * c + nn);
}

Rational u_seq(const GroupConfig& cfg, unsigned k) {
  const long q = cfg.q();
  const Rational c(q - 1, q + 1);
  return Rational(1 + BigInt(k)) / (1 + c * k);
}

Rational c_bound(const GroupConfig& cfg) {
  const long q = cfg.q();
  return Rational(BigInt(q) * (q + 1), BigInt(q - 1) * (q - 1));
}

Rational k_constant(const GroupConfig& cfg) {
  const long q = cfg.q();
  return Rational(3 * BigInt(q) * (q + 1), BigInt(q - 1) * (q - 1));
}

}  // namespace treeschur
