#pragma once

#include "treeschur/scalar.hpp"
#include "treeschur/words.hpp"

#include <complex>
#include <cstdint>
#include <vector>

namespace treeschur {

// nu(Omega_x) = 1 for x = e, else 1/((q+1) q^(|x|-1)); the unique measure
// giving every cylinder of the same depth equal mass.
Rational cylinder_measure_depth(const GroupConfig& cfg, unsigned depth);
Rational cylinder_measure(const GroupConfig& cfg, const Word& x);

// For |y| >= |g| the cylinder under y lies in a single Busemann cell of the
// partition indexed by g; returns that cell index k = common prefix length.
// Throws std::invalid_argument("cylinder not cell-resolving") when |y| < |g|.
unsigned busemann_cell_index(const GroupConfig& cfg, const Word& y, const Word& g);
// beta_omega(x0, g x0) = 2k - |g| for every boundary point under y.
long busemann_value(const GroupConfig& cfg, const Word& y, const Word& g);

// nu(E_k(g x0)) for 0 <= k <= |g|, |g| >= 1; throws on out-of-range k or empty g.
Rational cell_measure(const GroupConfig& cfg, const Word& g, unsigned k);
Rational cell_measure(const GroupConfig& cfg, std::size_t n, unsigned k);

// Locally constant function on the boundary: one value per depth-`depth`
// cylinder, stored in sphere enumeration order. depth 0 is the constant
// function on Omega.
struct StepFunction {
  unsigned depth = 0;
  std::vector<CScalar> values;  // size sphere_size(depth)

  static StepFunction constant(const GroupConfig& cfg, CScalar v);
  static StepFunction one(const GroupConfig& cfg);
  static StepFunction zero(const GroupConfig& cfg, unsigned depth);
  // Indicator of the shadow Omega_x (for x = e this is 1 on all of Omega).
  static StepFunction cylinder(const GroupConfig& cfg, const Word& x);
  // Deterministic small random rational components derived from `seed`.
  static StepFunction random(const GroupConfig& cfg, std::uint64_t seed, unsigned depth);

  // Value on the cylinder under y; requires |y| >= depth.
  const CScalar& value_at(const GroupConfig& cfg, std::span<const Letter> y) const;
};

// Same function as a depth-D refinement; D >= f.depth or throws.
StepFunction refine(const GroupConfig& cfg, const StepFunction& f, unsigned D);

// <f1, f2> on L2(Omega, nu): refine to common depth and sum f1 conj(f2) nu.
CScalar inner_product(const GroupConfig& cfg, const StepFunction& f1, const StepFunction& f2);
QSqrt norm2(const GroupConfig& cfg, const StepFunction& f);

// Same element of L2 after common refinement.
bool equal_as_functions(const GroupConfig& cfg, const StepFunction& f1, const StepFunction& f2);

// (pi(g) f)(omega) = P(g^-1, omega)^(1/2) f(g^-1 omega) evaluated cylinder by
// cylinder at depth |g| + f.depth.
StepFunction apply_pi(const GroupConfig& cfg, const Word& g, const StepFunction& f);

// <pi(g) f1, f2>.
//
// Two routes with identical exact values:
//  - reference: materialize apply_pi(g, f1) and take the inner product
//    (cost ~ sphere_size(|g| + f1.depth));
//  - grouped: collapse the sum over boundary cylinders by Busemann cell and
//    by the short prefixes that determine both function arguments
//    (cost ~ |g| * q^(f1.depth + f2.depth)).
// The grouped route is the production path; the reference route is kept as
// the test oracle.
CScalar matrix_coefficient(const GroupConfig& cfg, const Word& g, const StepFunction& f1,
                           const StepFunction& f2);
CScalar matrix_coefficient_reference(const GroupConfig& cfg, const Word& g, const StepFunction& f1,
                                     const StepFunction& f2);

// Double-precision mirror of a step function; reporting/exploration only.
struct FStepFunction {
  unsigned depth = 0;
  std::vector<std::complex<double>> values;
};
FStepFunction to_float(const StepFunction& f);

std::complex<double> matrix_coefficient_f(const GroupConfig& cfg, const Word& g,
                                          const FStepFunction& f1, const FStepFunction& f2);

}  // namespace treeschur
