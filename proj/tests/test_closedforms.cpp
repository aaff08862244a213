#include "treeschur/closedforms.hpp"

#include "treeschur/boundary.hpp"

#include <doctest.h>

using namespace treeschur;

TEST_CASE("xi closed form") {
  const GroupConfig cfg(2);
  CHECK(xi(cfg, 0) == QSqrt::one(3));
  CHECK(xi(cfg, 1) == QSqrt(0, Rational(1, 2), 3));
  CHECK(xi(cfg, 2) == QSqrt(Rational(2, 3), 0, 3));
  const GroupConfig cfg5(3);
  CHECK(xi(cfg5, 2) == QSqrt(Rational(7, 15), 0, 5));

  // independent route: sum q^((2k-n)/2) nu(E_k) over the geodesic cells
  for (unsigned rank : {2u, 3u}) {
    const GroupConfig c(rank);
    for (unsigned n = 1; n <= 8; ++n) {
      QSqrt total = QSqrt::zero(c.q());
      for (unsigned k = 0; k <= n; ++k)
        total += q_half_power(c.q(), 2L * k - n).scaled(cell_measure(c, n, k));
      REQUIRE(total == xi(c, n));
    }
  }
  // the n = 1 cell sum written out: (3/4) 3^(-1/2) + (1/4) 3^(1/2)
  const QSqrt by_cells =
      q_half_power(3, -1).scaled(Rational(3, 4)) + q_half_power(3, 1).scaled(Rational(1, 4));
  CHECK(by_cells == xi(cfg, 1));
}

TEST_CASE("sphere mass closed form") {
  const GroupConfig cfg(2);
  CHECK(m_sphere(cfg, 0) == Rational(1));
  CHECK(m_sphere(cfg, 1) == Rational(3));
  CHECK(m_sphere(cfg, 2) == Rational(16, 3));
  for (unsigned rank : {2u, 3u}) {
    const GroupConfig c(rank);
    for (unsigned k = 0; k <= 10; ++k) {
      const QSqrt sq = xi(c, k) * xi(c, k);  // rational: the sqrt parts cancel
      REQUIRE(sq.b() == 0);
      REQUIRE(Rational(sphere_size(c, k)) * sq.a() == m_sphere(c, k));
    }
  }
}

TEST_CASE("ball mass closed form") {
  const GroupConfig cfg(2);
  CHECK(m_ball(cfg, 0) == Rational(1));
  CHECK(m_ball(cfg, 1) == Rational(4));
  CHECK(m_ball(cfg, 2) == Rational(28, 3));
  CHECK(m_ball(cfg, 10) == Rational(216));
  CHECK(m_ball(cfg, 200) == Rational(2767903, 3));
  for (unsigned rank : {2u, 3u}) {
    const GroupConfig c(rank);
    for (unsigned n = 1; n <= 30; ++n)
      REQUIRE(m_ball(c, n) - m_ball(c, n - 1) == m_sphere(c, n));
  }
}

TEST_CASE("u sequence and its bound") {
  const GroupConfig cfg(2);
  CHECK(u_seq(cfg, 0) == Rational(1));
  CHECK(u_seq(cfg, 1) == Rational(4, 3));
  CHECK(c_bound(cfg) == Rational(3));
  const Rational limit(cfg.q() + 1, cfg.q() - 1);  // 1/c = 2 at q = 3
  for (unsigned k = 0; k + 1 <= 100; ++k) {
    REQUIRE(u_seq(cfg, k) < u_seq(cfg, k + 1));
    REQUIRE(u_seq(cfg, k) < limit);
    REQUIRE(Rational(cfg.q(), cfg.q() + 1) * u_seq(cfg, k) * u_seq(cfg, k) <= c_bound(cfg));
  }
}

TEST_CASE("asymptotic constant K") {
  CHECK(k_constant(GroupConfig(2)) == Rational(9));
  CHECK(k_constant(GroupConfig(3)) == Rational(45, 8));
  CHECK(k_constant(GroupConfig(4)) == Rational(14, 3));
  const Asymptotics a(GroupConfig(2));
  CHECK(a.K == Rational(9));
  CHECK(a.c == Rational(1, 2));
}

TEST_CASE("ball mass n^-3 scaling") {
  const GroupConfig cfg(2);
  // the frozen n = 200 data point of m_ball(n) K / n^3
  CHECK(m_ball(cfg, 200) * k_constant(cfg) / Rational(BigInt(200) * 200 * 200) ==
        Rational(8303709, 8000000));
  // n * |deviation| stays bounded (the O(1/n) correction); its exact limit is
  // 3/2 + 3(q+1)/(q-1) = 15/2 at q = 3
  for (unsigned n = 50; n <= 200; n += 50) {
    Rational dev = m_ball(cfg, n) * k_constant(cfg) / Rational(BigInt(n) * n * n) - 1;
    if (dev < 0) dev = -dev;
    REQUIRE(dev * n > Rational(15, 2));
    REQUIRE(dev * n < Rational(10));
  }
}

TEST_CASE("oracle equivalence with the boundary pipeline") {
  for (unsigned rank : {2u, 3u}) {
    const GroupConfig cfg(rank);
    const StepFunction one = StepFunction::one(cfg);
    const unsigned n_max = rank == 2 ? 5 : 3;
    for (unsigned n = 0; n <= n_max; ++n) {
      const CScalar expect = CScalar::real(xi(cfg, n));
      for (const Word& g : sphere_words(cfg, n))
        REQUIRE(matrix_coefficient(cfg, g, one, one) == expect);
    }
  }
}
