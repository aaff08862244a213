#include "treeschur/schur.hpp"

#include <doctest.h>

#include <cmath>

using namespace treeschur;

namespace {

Word w(const GroupConfig& cfg, const std::string& s) { return parse_word(cfg, s); }

SchurQuery quad(StepFunction a, StepFunction b, StepFunction c, StepFunction d, unsigned n) {
  return SchurQuery{std::move(a), std::move(b), std::move(c), std::move(d), n, true};
}

}  // namespace

TEST_CASE("coefficient masses on spheres and balls") {
  const GroupConfig cfg(2);
  const StepFunction one = StepFunction::one(cfg);
  CHECK(coefficient_mass_sphere(cfg, one, one, 1, 2) == QSqrt(3, 0, 3));
  CHECK(coefficient_mass_ball(cfg, one, one, 2, 2) == QSqrt(Rational(28, 3), 0, 3));
  CHECK(coefficient_mass_ball(cfg, StepFunction::zero(cfg, 1), one, 3, 2).is_zero());
  for (unsigned k = 0; k <= 5; ++k)
    REQUIRE(coefficient_mass_sphere(cfg, one, one, k, 4) ==
            QSqrt::of(m_sphere(cfg, k), cfg.q()));
  // explicit word lists: sphere agreement and the empty stream
  const auto s2 = sphere_words(cfg, 2);
  CHECK(coefficient_mass(cfg, one, one, s2, 2) == coefficient_mass_sphere(cfg, one, one, 2, 2));
  CHECK(coefficient_mass(cfg, one, one, {}, 2).is_zero());
}

TEST_CASE("parallel kernels match the serial reference exactly") {
  const GroupConfig cfg(2);
  const StepFunction f1 = StepFunction::random(cfg, 61, 2);
  const StepFunction f2 = StepFunction::random(cfg, 62, 1);
  for (unsigned k = 0; k <= 4; ++k) {
    const QSqrt serial = coefficient_mass_sphere_serial(cfg, f1, f2, k);
    for (int jobs : {1, 2, 3, 8})
      REQUIRE(coefficient_mass_sphere(cfg, f1, f2, k, jobs) == serial);
  }
  const SchurQuery q = quad(f1, f2, f2, f1, 4);
  const auto serial = schur_sphere_sums_serial(cfg, q);
  for (int jobs : {1, 2, 8}) {
    const auto par = schur_sphere_sums(cfg, q, jobs);
    REQUIRE(par.size() == serial.size());
    for (std::size_t i = 0; i < serial.size(); ++i) REQUIRE(par[i] == serial[i]);
  }
}

TEST_CASE("schur sums: identity ball and diagonal quadruple") {
  const GroupConfig cfg(2);
  const StepFunction f1 = StepFunction::random(cfg, 71, 1);
  const StepFunction f2 = StepFunction::random(cfg, 72, 2);
  const StepFunction f3 = StepFunction::random(cfg, 73, 0);
  const StepFunction f4 = StepFunction::random(cfg, 74, 1);
  const CScalar at_zero = schur_sum(cfg, quad(f1, f2, f3, f4, 2), 0, 2);
  CHECK(at_zero == inner_product(cfg, f1, f2) * inner_product(cfg, f3, f4).conj());

  const StepFunction one = StepFunction::one(cfg);
  const auto sums = schur_sphere_sums(cfg, quad(one, one, one, one, 5), 2);
  CScalar acc = CScalar::zero(3);
  for (unsigned n = 0; n <= 5; ++n) {
    acc += sums[n];
    REQUIRE(acc == CScalar::real(QSqrt::of(m_ball(cfg, n), 3)));
  }
}

TEST_CASE("frozen ball sums") {
  const GroupConfig cfg(2);
  const StepFunction one = StepFunction::one(cfg);
  const StepFunction ca = StepFunction::cylinder(cfg, w(cfg, "a"));
  const StepFunction cb = StepFunction::cylinder(cfg, w(cfg, "b"));
  const StepFunction cc = StepFunction::cylinder(cfg, w(cfg, "A"));
  // sum over B_4 of Xi(|g|) conj<pi(g)1_a, 1_a>
  CHECK(schur_sum(cfg, quad(one, one, ca, ca, 4), 4, 2) ==
        CScalar::real(QSqrt(Rational(223, 108), 0, 3)));
  // a quadruple mixing three different cylinders, over B_3
  CHECK(schur_sum(cfg, quad(ca, cb, one, cc, 3), 3, 2) ==
        CScalar::real(QSqrt(Rational(53, 216), 0, 3)));
  // orthogonal-target quadruple over B_5
  CHECK(schur_sum(cfg, quad(ca, one, cb, one, 5), 5, 2) ==
        CScalar::real(QSqrt(Rational(83, 48), 0, 3)));
}

TEST_CASE("hermitian symmetry of the ball pairing") {
  const GroupConfig cfg(2);
  const StepFunction f1 = StepFunction::random(cfg, 81, 1);
  const StepFunction f2 = StepFunction::random(cfg, 82, 1);
  const StepFunction f3 = StepFunction::random(cfg, 83, 2);
  const StepFunction f4 = StepFunction::random(cfg, 84, 0);
  for (unsigned n = 0; n <= 3; ++n)
    REQUIRE(schur_sum(cfg, quad(f1, f2, f3, f4, n), n, 2) ==
            schur_sum(cfg, quad(f3, f4, f1, f2, n), n, 2).conj());
}

TEST_CASE("ratio tables") {
  const GroupConfig cfg(2);
  const StepFunction one = StepFunction::one(cfg);
  const StepFunction ca = StepFunction::cylinder(cfg, w(cfg, "a"));
  const StepFunction cb = StepFunction::cylinder(cfg, w(cfg, "b"));

  const auto ones = schur_ratio_table(cfg, quad(one, one, one, one, 5), 2);
  for (const auto& row : ones) {
    CHECK(row.ratio == CScalar::one(3));
    CHECK(row.abs_error == 0.0);
  }

  const auto rows = schur_ratio_table(cfg, quad(one, one, ca, ca, 6), 2);
  CHECK(rows[0].target == CScalar::real(QSqrt(Rational(1, 16), 0, 3)));
  for (unsigned n = 2; n < 6; ++n) REQUIRE(rows[n + 1].abs_error < rows[n].abs_error);

  const auto orth = schur_ratio_table(cfg, quad(ca, one, cb, one, 6), 2);
  CHECK(orth[0].target == CScalar::zero(3));
  for (unsigned n = 2; n < 6; ++n)
    REQUIRE(orth[n + 1].ratio.abs2() < orth[n].ratio.abs2());
}

TEST_CASE("float mirror agreement on ball sums") {
  const GroupConfig cfg(2);
  const StepFunction one = StepFunction::one(cfg);
  const StepFunction ca = StepFunction::cylinder(cfg, w(cfg, "a"));
  const SchurQuery q = quad(one, one, ca, ca, 5);
  const auto exact = schur_sphere_sums(cfg, q, 2);
  const auto mirror = schur_sphere_sums_f(cfg, q, 2);
  CScalar acc = CScalar::zero(3);
  std::complex<double> facc{0, 0};
  for (unsigned n = 0; n <= 5; ++n) {
    acc += exact[n];
    facc += mirror[n];
    const auto e = acc.to_complex();
    REQUIRE(std::abs(e - facc) <= 1e-9 * std::max(1.0, std::abs(e)));
  }
}

TEST_CASE("haagerup bound") {
  const GroupConfig cfg(2);
  const StepFunction one = StepFunction::one(cfg);
  const auto at0 = haagerup_check(cfg, 0, one, one, 2);
  CHECK(at0.lhs == QSqrt::one(3));
  CHECK(at0.rhs == QSqrt::one(3));
  CHECK(at0.ok);
  const auto at3 = haagerup_check(cfg, 3, one, one, 2);
  CHECK(at3.lhs == QSqrt(Rational(25, 3), 0, 3));
  CHECK(at3.rhs == QSqrt(16, 0, 3));
  CHECK(at3.ok);
  for (unsigned i = 0; i < 8; ++i) {
    const StepFunction f1 = StepFunction::random(cfg, 90 + i, i % 3);
    const StepFunction f2 = StepFunction::random(cfg, 95 + i, (i + 1) % 3);
    for (unsigned k = 0; k <= 4; ++k) REQUIRE(haagerup_check(cfg, k, f1, f2, 2).ok);
  }
  // zero vector: 0 <= 0 holds
  CHECK(haagerup_check(cfg, 2, StepFunction::zero(cfg, 1), one, 2).ok);
}

TEST_CASE("symmetric difference masses") {
  const GroupConfig cfg(2);
  const StepFunction one = StepFunction::one(cfg);
  const auto trivial = sym_diff_ratio(cfg, 3, Word{}, Word{}, one, one, 2);
  CHECK(trivial.set_size == 0);
  CHECK(trivial.mass.is_zero());
  CHECK(trivial.ratio == 0.0);
  CHECK(trivial.containment_ok);

  const auto ae3 = sym_diff_ratio(cfg, 3, w(cfg, "a"), Word{}, one, one, 2);
  CHECK(ae3.mass == QSqrt(Rational(37, 4), 0, 3));
  CHECK(ae3.containment_ok);
  const auto aa3 = sym_diff_ratio(cfg, 3, w(cfg, "a"), w(cfg, "a"), one, one, 2);
  CHECK(aa3.mass == QSqrt(Rational(2180, 243), 0, 3));

  // decreasing ratios and the exact annulus envelope for the derived case
  double prev = 2.0;
  for (unsigned n = 3; n <= 7; ++n) {
    const auto sd = sym_diff_ratio(cfg, n, w(cfg, "a"), Word{}, one, one, 2);
    REQUIRE(sd.containment_ok);
    REQUIRE(sd.mass <= QSqrt::of(m_ball(cfg, n + 1) - m_ball(cfg, n - 1), 3));
    REQUIRE(sd.ratio < prev);
    prev = sd.ratio;
  }

  // containment over all of B_1 x B_1 at small radii
  for (const Word& g : ball_words(cfg, 1))
    for (const Word& h : ball_words(cfg, 1))
      for (unsigned n = 2; n <= 4; ++n)
        REQUIRE(sym_diff_ratio(cfg, n, g, h, one, one, 2).containment_ok);
}

TEST_CASE("abstract constant probe") {
  const GroupConfig cfg(2);
  const StepFunction one = StepFunction::one(cfg);
  const StepFunction ca = StepFunction::cylinder(cfg, w(cfg, "a"));
  const StepFunction cb = StepFunction::cylinder(cfg, w(cfg, "b"));
  const auto rep = abstract_constant_probe(cfg, quad(one, one, one, one, 6), 2);
  CHECK(rep.verdict == "1/K");
  CHECK(rep.K == Rational(9));
  CHECK(std::abs(rep.candidate_inv_K.real() - 1.0 / 9.0) < 1e-12);
  const auto orth = abstract_constant_probe(cfg, quad(ca, one, cb, one, 4), 2);
  CHECK(orth.verdict == "indeterminate");
}
