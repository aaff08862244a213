#pragma once

#include "treeschur/boundary.hpp"
#include "treeschur/closedforms.hpp"

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace treeschur {

// Quadruple of boundary vectors for the ball averages of coefficient
// products; integration over the group is with counting measure.
struct SchurQuery {
  StepFunction psi1, psi2, psi3, psi4;
  unsigned n_max = 1;
  bool exact = true;
};

struct ConvergenceRow {
  unsigned n = 0;
  CScalar numerator;                    // sum over B_n of <pi(g)psi1,psi2> conj(<pi(g)psi3,psi4>)
  Rational mball;                       // m_ball(n)
  CScalar ratio;                        // numerator / mball, exact
  CScalar target;                       // <psi1,psi3> conj(<psi2,psi4>)
  double abs_error = 0.0;               // |ratio - target| in floats
};

// Float-mirror row (exploration beyond the exact budget).
struct FConvergenceRow {
  unsigned n = 0;
  std::complex<double> numerator;
  double mball = 0.0;
  std::complex<double> ratio;
  std::complex<double> target;
  double abs_error = 0.0;
};

// sum over `words` of |<pi(g)psi1,psi2>|^2; zero on an empty list.
QSqrt coefficient_mass(const GroupConfig& cfg, const StepFunction& psi1,
                       const StepFunction& psi2, std::span<const Word> words, int jobs);

// The same mass over the sphere S_k / ball B_n without materializing the
// words. The _serial variant is the reference path for the OpenMP kernel.
QSqrt coefficient_mass_sphere(const GroupConfig& cfg, const StepFunction& psi1,
                              const StepFunction& psi2, unsigned k, int jobs);
QSqrt coefficient_mass_sphere_serial(const GroupConfig& cfg, const StepFunction& psi1,
                                     const StepFunction& psi2, unsigned k);
QSqrt coefficient_mass_ball(const GroupConfig& cfg, const StepFunction& psi1,
                            const StepFunction& psi2, unsigned n, int jobs);

// Per-sphere sums of <pi(g)psi1,psi2> conj(<pi(g)psi3,psi4>) for k = 0..n_max;
// ball sums are their prefix sums.
std::vector<CScalar> schur_sphere_sums(const GroupConfig& cfg, const SchurQuery& q, int jobs);
std::vector<CScalar> schur_sphere_sums_serial(const GroupConfig& cfg, const SchurQuery& q);
std::vector<std::complex<double>> schur_sphere_sums_f(const GroupConfig& cfg, const SchurQuery& q,
                                                      int jobs);

CScalar schur_sum(const GroupConfig& cfg, const SchurQuery& q, unsigned n, int jobs);

std::vector<ConvergenceRow> schur_ratio_table(const GroupConfig& cfg, const SchurQuery& q,
                                              int jobs);
std::vector<FConvergenceRow> schur_ratio_table_f(const GroupConfig& cfg, const SchurQuery& q,
                                                 int jobs);

// Sphere mass against the Haagerup-derived bound (k+1)^2 |psi1|^2 |psi2|^2,
// decided exactly.
struct HaagerupResult {
  QSqrt lhs, rhs;
  bool ok = false;
};
HaagerupResult haagerup_check(const GroupConfig& cfg, unsigned k, const StepFunction& psi1,
                              const StepFunction& psi2, int jobs);

// Mass of B_n symmetric-difference h^-1 B_n g relative to m_ball(n), with the
// exact annulus-containment check B_n delta h^-1 B_n g inside B_(n+k) - B_(n-k).
struct SymDiffResult {
  QSqrt mass;          // coefficient mass over the symmetric difference
  Rational mball;      // m_ball(n)
  double ratio = 0.0;  // float rendering of mass / mball
  bool containment_ok = false;
  std::uint64_t set_size = 0;
};
SymDiffResult sym_diff_ratio(const GroupConfig& cfg, unsigned n, const Word& g, const Word& h,
                             const StepFunction& psi1, const StepFunction& psi2, int jobs);

// Probes which normalization the n^-3 scaling approaches: K * target or
// target / K. Fits c + d/n to schur_sum(n)/n^3 and reports the nearer
// candidate ("1/K", "K", or "indeterminate" when target = 0).
struct ProbeRow {
  unsigned n = 0;
  CScalar numerator;
  std::complex<double> scaled;  // numerator / n^3
};
struct ProbeReport {
  std::vector<ProbeRow> rows;
  CScalar target;
  Rational K;
  std::complex<double> fit_c{0.0, 0.0};
  std::complex<double> fit_d{0.0, 0.0};
  std::complex<double> candidate_K;       // K * target
  std::complex<double> candidate_inv_K;   // target / K
  std::string verdict;                    // "1/K" | "K" | "indeterminate"
};
ProbeReport abstract_constant_probe(const GroupConfig& cfg, const SchurQuery& q, int jobs);

}  // namespace treeschur
