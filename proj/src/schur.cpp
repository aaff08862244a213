#include "treeschur/schur.hpp"

#include "treeschur/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace treeschur {

QSqrt coefficient_mass(const GroupConfig& cfg, const StepFunction& psi1,
                       const StepFunction& psi2, std::span<const Word> words, int jobs) {
  return indexed_sum(words.size(), jobs, QSqrt::zero(cfg.q()), [&](std::uint64_t i) {
    return matrix_coefficient(cfg, words[i], psi1, psi2).abs2();
  });
}

QSqrt coefficient_mass_sphere(const GroupConfig& cfg, const StepFunction& psi1,
                              const StepFunction& psi2, unsigned k, int jobs) {
  return indexed_sum(sphere_size(cfg, k), jobs, QSqrt::zero(cfg.q()), [&](std::uint64_t r) {
    const Word g = sphere_unrank(cfg, k, r);
    return matrix_coefficient(cfg, g, psi1, psi2).abs2();
  });
}

QSqrt coefficient_mass_sphere_serial(const GroupConfig& cfg, const StepFunction& psi1,
                                     const StepFunction& psi2, unsigned k) {
  return indexed_sum_serial(sphere_size(cfg, k), QSqrt::zero(cfg.q()), [&](std::uint64_t r) {
    const Word g = sphere_unrank(cfg, k, r);
    return matrix_coefficient(cfg, g, psi1, psi2).abs2();
  });
}

QSqrt coefficient_mass_ball(const GroupConfig& cfg, const StepFunction& psi1,
                            const StepFunction& psi2, unsigned n, int jobs) {
  QSqrt total = QSqrt::zero(cfg.q());
  for (unsigned k = 0; k <= n; ++k) total += coefficient_mass_sphere(cfg, psi1, psi2, k, jobs);
  return total;
}

std::vector<CScalar> schur_sphere_sums(const GroupConfig& cfg, const SchurQuery& q, int jobs) {
  std::vector<CScalar> out;
  out.reserve(q.n_max + 1);
  for (unsigned k = 0; k <= q.n_max; ++k) {
    out.push_back(indexed_sum(sphere_size(cfg, k), jobs, CScalar::zero(cfg.q()),
                              [&](std::uint64_t r) {
                                const Word g = sphere_unrank(cfg, k, r);
                                return matrix_coefficient(cfg, g, q.psi1, q.psi2) *
                                       matrix_coefficient(cfg, g, q.psi3, q.psi4).conj();
                              }));
  }
  return out;
}

std::vector<CScalar> schur_sphere_sums_serial(const GroupConfig& cfg, const SchurQuery& q) {
  std::vector<CScalar> out;
  out.reserve(q.n_max + 1);
  for (unsigned k = 0; k <= q.n_max; ++k) {
    out.push_back(indexed_sum_serial(sphere_size(cfg, k), CScalar::zero(cfg.q()),
                                     [&](std::uint64_t r) {
                                       const Word g = sphere_unrank(cfg, k, r);
                                       return matrix_coefficient(cfg, g, q.psi1, q.psi2) *
                                              matrix_coefficient(cfg, g, q.psi3, q.psi4).conj();
                                     }));
  }
  return out;
}

std::vector<std::complex<double>> schur_sphere_sums_f(const GroupConfig& cfg, const SchurQuery& q,
                                                      int jobs) {
  const FStepFunction p1 = to_float(q.psi1), p2 = to_float(q.psi2);
  const FStepFunction p3 = to_float(q.psi3), p4 = to_float(q.psi4);
  std::vector<std::complex<double>> out;
  out.reserve(q.n_max + 1);
  for (unsigned k = 0; k <= q.n_max; ++k) {
    out.push_back(indexed_sum(sphere_size(cfg, k), jobs, std::complex<double>{0.0, 0.0},
                              [&](std::uint64_t r) {
                                const Word g = sphere_unrank(cfg, k, r);
                                return matrix_coefficient_f(cfg, g, p1, p2) *
                                       std::conj(matrix_coefficient_f(cfg, g, p3, p4));
                              }));
  }
  return out;
}

CScalar schur_sum(const GroupConfig& cfg, const SchurQuery& q, unsigned n, int jobs) {
  if (n > q.n_max) throw std::invalid_argument("schur_sum: n exceeds query n_max");
  SchurQuery sub = q;
  sub.n_max = n;
  const auto sums = schur_sphere_sums(cfg, sub, jobs);
  CScalar total = CScalar::zero(cfg.q());
  for (const auto& s : sums) total += s;
  return total;
}

std::vector<ConvergenceRow> schur_ratio_table(const GroupConfig& cfg, const SchurQuery& q,
                                              int jobs) {
  const CScalar target =
      inner_product(cfg, q.psi1, q.psi3) * inner_product(cfg, q.psi2, q.psi4).conj();
  const auto sums = schur_sphere_sums(cfg, q, jobs);
  std::vector<ConvergenceRow> rows;
  rows.reserve(q.n_max + 1);
  CScalar acc = CScalar::zero(cfg.q());
  for (unsigned n = 0; n <= q.n_max; ++n) {
    acc += sums[n];
    ConvergenceRow row;
    row.n = n;
    row.numerator = acc;
    row.mball = m_ball(cfg, n);
    row.ratio = acc.scaled(Rational(1) / row.mball);
    row.target = target;
    row.abs_error = std::abs(row.ratio.to_complex() - target.to_complex());
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<FConvergenceRow> schur_ratio_table_f(const GroupConfig& cfg, const SchurQuery& q,
                                                 int jobs) {
  const std::complex<double> target =
      (inner_product(cfg, q.psi1, q.psi3) * inner_product(cfg, q.psi2, q.psi4).conj()).to_complex();
  const auto sums = schur_sphere_sums_f(cfg, q, jobs);
  std::vector<FConvergenceRow> rows;
  rows.reserve(q.n_max + 1);
  std::complex<double> acc{0.0, 0.0};
  for (unsigned n = 0; n <= q.n_max; ++n) {
    acc += sums[n];
    FConvergenceRow row;
    row.n = n;
    row.numerator = acc;
    row.mball = to_double(m_ball(cfg, n));
    row.ratio = acc / row.mball;
    row.target = target;
    row.abs_error = std::abs(row.ratio - target);
    rows.push_back(row);
  }
  return rows;
}

HaagerupResult haagerup_check(const GroupConfig& cfg, unsigned k, const StepFunction& psi1,
                              const StepFunction& psi2, int jobs) {
  HaagerupResult r{QSqrt::zero(cfg.q()), QSqrt::zero(cfg.q()), false};
  r.lhs = coefficient_mass_sphere(cfg, psi1, psi2, k, jobs);
  const Rational kk(BigInt(k + 1) * (k + 1));
  r.rhs = (norm2(cfg, psi1) * norm2(cfg, psi2)).scaled(kk);
  r.ok = r.lhs <= r.rhs;
  return r;
}

SymDiffResult sym_diff_ratio(const GroupConfig& cfg, unsigned n, const Word& g, const Word& h,
                             const StepFunction& psi1, const StepFunction& psi2, int jobs) {
  const unsigned k = static_cast<unsigned>(g.length() + h.length());
  const Word gi = inverse(cfg, g);
  SymDiffResult res{QSqrt::zero(cfg.q()), m_ball(cfg, n), 0.0, true, 0};

  // Scan B_(n+k) with the membership predicate; containment of the symmetric
  // difference in the annulus B_(n+k) - B_(n-k) is verified, not assumed.
  struct Partial {
    QSqrt mass;
    std::uint64_t count = 0;
    bool containment = true;
    Partial& operator+=(const Partial& o) {
      mass += o.mass;
      count += o.count;
      containment = containment && o.containment;
      return *this;
    }
  };
  const Partial zero{QSqrt::zero(cfg.q()), 0, true};
  const Partial total = indexed_sum(
      ball_size(cfg, n + k), jobs, zero, [&](std::uint64_t r) -> Partial {
        const Word x = ball_unrank(cfg, r);
        const bool in_ball = x.length() <= n;
        const bool in_translate = multiply(cfg, h, multiply(cfg, x, gi)).length() <= n;
        if (in_ball == in_translate) return {QSqrt::zero(cfg.q()), 0, true};
        const bool inside_annulus = x.length() + k > n && x.length() <= n + k;
        return {matrix_coefficient(cfg, x, psi1, psi2).abs2(), 1, inside_annulus};
      });
  res.mass = total.mass;
  res.set_size = total.count;
  res.containment_ok = total.containment;
  res.ratio = res.mass.to_double() / to_double(res.mball);
  return res;
}

ProbeReport abstract_constant_probe(const GroupConfig& cfg, const SchurQuery& q, int jobs) {
  ProbeReport rep;
  rep.K = k_constant(cfg);
  rep.target = inner_product(cfg, q.psi1, q.psi3) * inner_product(cfg, q.psi2, q.psi4).conj();
  const std::complex<double> t = rep.target.to_complex();
  const double Kf = to_double(rep.K);
  rep.candidate_K = Kf * t;
  rep.candidate_inv_K = t / Kf;

  const auto sums = schur_sphere_sums(cfg, q, jobs);
  CScalar acc = CScalar::zero(cfg.q());
  for (unsigned n = 0; n <= q.n_max; ++n) {
    acc += sums[n];
    if (n == 0) continue;
    ProbeRow row;
    row.n = n;
    row.numerator = acc;
    row.scaled = acc.to_complex() / (static_cast<double>(n) * n * n);
    rep.rows.push_back(std::move(row));
  }

  // Least squares for scaled_n ~ c + d/n. The model is asymptotic, so the
  // n = 1 row is left out whenever enough rows remain.
  const unsigned n_lo = rep.rows.size() > 2 ? 2 : 1;
  double s1 = 0, su = 0, suu = 0;
  std::complex<double> sy{0, 0}, suy{0, 0};
  for (const auto& row : rep.rows) {
    if (row.n < n_lo) continue;
    const double u = 1.0 / row.n;
    s1 += 1;
    su += u;
    suu += u * u;
    sy += row.scaled;
    suy += u * row.scaled;
  }
  const double det = s1 * suu - su * su;
  if (det != 0.0) {
    rep.fit_c = (suu * sy - su * suy) / det;
    rep.fit_d = (s1 * suy - su * sy) / det;
  }

  if (rep.target.is_zero()) {
    rep.verdict = "indeterminate";
  } else {
    const double dK = std::abs(rep.fit_c - rep.candidate_K);
    const double dInv = std::abs(rep.fit_c - rep.candidate_inv_K);
    rep.verdict = dInv <= dK ? "1/K" : "K";
  }
  return rep;
}

}  // namespace treeschur
