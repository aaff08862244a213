#include "treeschur/boundary.hpp"

#include "treeschur/closedforms.hpp"

#include <doctest.h>

using namespace treeschur;

namespace {

Word w(const GroupConfig& cfg, const std::string& s) { return parse_word(cfg, s); }

// Independent oracle: which set of the geodesic partition contains the
// cylinder under y, decided directly from the shadow definitions
// E_n = Omega_g, E_k = Omega_(g_k) - Omega_(g_(k+1)).
unsigned cell_by_definition(const Word& y, const Word& g) {
  const std::size_t n = g.length();
  auto under = [&](std::size_t m) {  // y inside the shadow of the length-m prefix of g
    return common_prefix_length(y, g) >= m;
  };
  if (under(n)) return static_cast<unsigned>(n);
  for (unsigned k = 0; k < n; ++k)
    if (under(k) && !under(k + 1)) return k;
  return 0;
}

}  // namespace

TEST_CASE("cylinder measures") {
  const GroupConfig cfg(2);
  CHECK(cylinder_measure(cfg, Word{}) == Rational(1));
  CHECK(cylinder_measure(cfg, w(cfg, "a")) == Rational(1, 4));
  CHECK(cylinder_measure(cfg, w(cfg, "ab")) == Rational(1, 12));
}

TEST_CASE("busemann cells against the set definitions") {
  const GroupConfig cfg(2);
  CHECK(busemann_cell_index(cfg, w(cfg, "ab"), w(cfg, "ab")) == 2);
  CHECK(busemann_cell_index(cfg, w(cfg, "aB"), w(cfg, "ab")) == 1);
  CHECK(busemann_cell_index(cfg, w(cfg, "ba"), w(cfg, "ab")) == 0);
  CHECK(busemann_value(cfg, w(cfg, "ab"), w(cfg, "ab")) == 2);
  CHECK(busemann_value(cfg, w(cfg, "aB"), w(cfg, "ab")) == 0);
  CHECK(busemann_value(cfg, w(cfg, "ba"), Word{}) == 0);
  CHECK_THROWS_WITH_AS(busemann_cell_index(cfg, w(cfg, "a"), w(cfg, "ab")),
                       "cylinder not cell-resolving", std::invalid_argument);

  for (const Word& g : ball_words(cfg, 3)) {
    if (g.empty()) continue;
    for (const Word& y : sphere_words(cfg, 3)) {
      REQUIRE(busemann_cell_index(cfg, y, g) == cell_by_definition(y, g));
      REQUIRE(busemann_value(cfg, y, g) ==
              2L * cell_by_definition(y, g) - static_cast<long>(g.length()));
    }
  }
}

TEST_CASE("cell measures") {
  const GroupConfig cfg(2);
  const Word g = w(cfg, "ab");
  CHECK(cell_measure(cfg, g, 0) == Rational(3, 4));
  CHECK(cell_measure(cfg, g, 1) == Rational(1, 6));
  CHECK(cell_measure(cfg, g, 2) == Rational(1, 12));
  CHECK_THROWS_AS(cell_measure(cfg, g, 3), std::invalid_argument);
  CHECK_THROWS_AS(cell_measure(cfg, Word{}, 0), std::invalid_argument);
}

TEST_CASE("cells partition the boundary measure") {
  for (unsigned rank : {2u, 3u}) {
    const GroupConfig cfg(rank);
    for (const Word& g : ball_words(cfg, 5)) {
      if (g.empty()) continue;
      Rational total(0);
      for (unsigned k = 0; k <= g.length(); ++k) total += cell_measure(cfg, g, k);
      REQUIRE(total == 1);
    }
  }
}

TEST_CASE("cell measure equals its cylinder decomposition") {
  const GroupConfig cfg(2);
  for (const Word& g : ball_words(cfg, 4)) {
    if (g.empty()) continue;
    const unsigned len = static_cast<unsigned>(g.length());
    std::vector<Rational> per_cell(len + 1, Rational(0));
    const Rational cyl = cylinder_measure_depth(cfg, len);
    for (const Word& y : sphere_words(cfg, len))
      per_cell[busemann_cell_index(cfg, y, g)] += cyl;
    for (unsigned k = 0; k <= len; ++k) REQUIRE(per_cell[k] == cell_measure(cfg, g, k));
  }
}

TEST_CASE("refinement") {
  const GroupConfig cfg(2);
  const StepFunction one = StepFunction::one(cfg);
  const StepFunction r1 = refine(cfg, one, 1);
  CHECK(r1.values.size() == 4);
  for (const auto& v : r1.values) CHECK(v == CScalar::one(3));
  const StepFunction f = StepFunction::random(cfg, 3, 2);
  CHECK(refine(cfg, f, 2).values == f.values);
  CHECK_THROWS_AS(refine(cfg, f, 1), std::invalid_argument);
  CHECK(equal_as_functions(cfg, refine(cfg, f, 4), f));
}

TEST_CASE("inner products") {
  const GroupConfig cfg(2);
  const StepFunction one = StepFunction::one(cfg);
  const StepFunction ca = StepFunction::cylinder(cfg, w(cfg, "a"));
  const StepFunction cb = StepFunction::cylinder(cfg, w(cfg, "b"));
  CHECK(inner_product(cfg, one, one) == CScalar::one(3));
  CHECK(inner_product(cfg, ca, one) == CScalar::real(QSqrt(Rational(1, 4), 0, 3)));
  CHECK(inner_product(cfg, ca, cb) == CScalar::zero(3));

  // refinement invariance of the pairing
  const StepFunction f1 = StepFunction::random(cfg, 10, 1);
  const StepFunction f2 = StepFunction::random(cfg, 11, 2);
  const CScalar base = inner_product(cfg, f1, f2);
  for (unsigned d1 = 1; d1 <= 4; ++d1)
    for (unsigned d2 = 2; d2 <= 4; ++d2)
      REQUIRE(inner_product(cfg, refine(cfg, f1, d1), refine(cfg, f2, d2)) == base);

  // conjugate symmetry and positivity
  const StepFunction g1 = StepFunction::random(cfg, 12, 2);
  CHECK(inner_product(cfg, f1, g1) == inner_product(cfg, g1, f1).conj());
  CHECK(norm2(cfg, g1).sign() >= 0);
  CHECK(norm2(cfg, StepFunction::zero(cfg, 2)).is_zero());
}

TEST_CASE("apply_pi basics") {
  const GroupConfig cfg(2);
  const StepFunction one = StepFunction::one(cfg);
  const StepFunction f = StepFunction::random(cfg, 21, 2);
  CHECK(equal_as_functions(cfg, apply_pi(cfg, Word{}, f), f));

  // <pi(a) 1, 1> = Xi(1) = (1/2) sqrt(3)
  const CScalar got = inner_product(cfg, apply_pi(cfg, w(cfg, "a"), one), one);
  CHECK(got == CScalar::real(QSqrt(0, Rational(1, 2), 3)));
  CHECK(got == CScalar::real(xi(cfg, 1)));
}

TEST_CASE("unitarity of pi") {
  for (unsigned rank : {2u, 3u}) {
    const GroupConfig cfg(rank);
    const auto b3 = ball_words(cfg, 3);
    for (unsigned i = 0; i < 6; ++i) {
      const StepFunction f1 = StepFunction::random(cfg, 100 + i, i % 3);
      const StepFunction f2 = StepFunction::random(cfg, 200 + i, (i + 1) % 3);
      const CScalar base = inner_product(cfg, f1, f2);
      for (std::size_t j = 0; j < b3.size(); j += (rank == 2 ? 1 : 7)) {
        const Word& g = b3[j];
        REQUIRE(inner_product(cfg, apply_pi(cfg, g, f1), apply_pi(cfg, g, f2)) == base);
      }
    }
  }
}

TEST_CASE("pi is a homomorphism") {
  const GroupConfig cfg(2);
  const auto b2 = ball_words(cfg, 2);
  unsigned i = 0;
  for (const Word& g : b2)
    for (const Word& h : b2) {
      if (++i % 4 != 0) continue;  // sampled here; exhaustive in the acceptance suite
      const StepFunction f = StepFunction::random(cfg, 300 + i, i % 3);
      REQUIRE(equal_as_functions(cfg, apply_pi(cfg, g, apply_pi(cfg, h, f)),
                                 apply_pi(cfg, multiply(cfg, g, h), f)));
    }
}

TEST_CASE("matrix coefficient examples") {
  const GroupConfig cfg(2);
  const StepFunction one = StepFunction::one(cfg);
  for (const Word& g : sphere_words(cfg, 1))
    CHECK(matrix_coefficient(cfg, g, one, one) == CScalar::real(QSqrt(0, Rational(1, 2), 3)));
  for (const Word& g : sphere_words(cfg, 2))
    CHECK(matrix_coefficient(cfg, g, one, one) ==
          CScalar::real(QSqrt(Rational(2, 3), 0, 3)));
  const StepFunction f1 = StepFunction::random(cfg, 31, 1);
  const StepFunction f2 = StepFunction::random(cfg, 32, 2);
  CHECK(matrix_coefficient(cfg, Word{}, f1, f2) == inner_product(cfg, f1, f2));
  CHECK(matrix_coefficient(cfg, w(cfg, "ab"), StepFunction::zero(cfg, 1), f2) ==
        CScalar::zero(3));
}

TEST_CASE("sphericity at small radii") {
  for (unsigned rank : {2u, 3u}) {
    const GroupConfig cfg(rank);
    const StepFunction one = StepFunction::one(cfg);
    const unsigned n_max = rank == 2 ? 4 : 3;
    for (unsigned n = 0; n <= n_max; ++n) {
      const CScalar expect = CScalar::real(xi(cfg, n));
      for (const Word& g : sphere_words(cfg, n))
        REQUIRE(matrix_coefficient(cfg, g, one, one) == expect);
    }
  }
}

TEST_CASE("grouped path equals the reference path") {
  const GroupConfig cfg(2);
  const std::vector<StepFunction> fs = {
      StepFunction::one(cfg), StepFunction::cylinder(cfg, w(cfg, "a")),
      StepFunction::cylinder(cfg, w(cfg, "ab")), StepFunction::random(cfg, 41, 2)};
  for (const Word& g : ball_words(cfg, 3))
    for (const auto& f1 : fs)
      for (const auto& f2 : fs)
        REQUIRE(matrix_coefficient(cfg, g, f1, f2) ==
                matrix_coefficient_reference(cfg, g, f1, f2));

  const GroupConfig cfg5(3);
  const std::vector<StepFunction> fs5 = {StepFunction::one(cfg5),
                                         StepFunction::cylinder(cfg5, w(cfg5, "c")),
                                         StepFunction::random(cfg5, 42, 1)};
  for (const Word& g : ball_words(cfg5, 2))
    for (const auto& f1 : fs5)
      for (const auto& f2 : fs5)
        REQUIRE(matrix_coefficient(cfg5, g, f1, f2) ==
                matrix_coefficient_reference(cfg5, g, f1, f2));
}

TEST_CASE("float mirror tracks the exact value") {
  const GroupConfig cfg(2);
  const StepFunction f1 = StepFunction::random(cfg, 51, 2);
  const StepFunction f2 = StepFunction::random(cfg, 52, 1);
  const FStepFunction g1 = to_float(f1), g2 = to_float(f2);
  for (const Word& g : ball_words(cfg, 4)) {
    const auto exact = matrix_coefficient(cfg, g, f1, f2).to_complex();
    const auto mirror = matrix_coefficient_f(cfg, g, g1, g2);
    REQUIRE(std::abs(exact - mirror) <= 1e-10 * std::max(1.0, std::abs(exact)));
  }
}

TEST_CASE("step function value lookup") {
  const GroupConfig cfg(2);
  const StepFunction ca = StepFunction::cylinder(cfg, w(cfg, "a"));
  CHECK(ca.value_at(cfg, w(cfg, "ab").letters()) == CScalar::one(3));
  CHECK(ca.value_at(cfg, w(cfg, "ba").letters()) == CScalar::zero(3));
  CHECK_THROWS_AS(ca.value_at(cfg, Word{}.letters()), std::invalid_argument);
  CHECK(StepFunction::random(cfg, 7, 2).values == StepFunction::random(cfg, 7, 2).values);
  CHECK(StepFunction::random(cfg, 7, 2).values != StepFunction::random(cfg, 8, 2).values);
}
