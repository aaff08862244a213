// Compares the serial reference kernels against the OpenMP ones and the
// brute-force matrix-coefficient route against the grouped one, asserting
// exact agreement while timing.

#include "treeschur/parallel.hpp"
#include "treeschur/schur.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>

using namespace treeschur;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

template <class Fn>
double timed(Fn&& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  fn();
  return seconds_since(t0);
}

}  // namespace

int main(int argc, char** argv) {
  unsigned rank = 2, n = 5, depth = 1;
  int jobs = 0;
  CLI::App app{"treeschur kernel benchmark"};
  app.add_option("-N,--rank", rank)->capture_default_str();
  app.add_option("--n-max", n)->capture_default_str();
  app.add_option("--depth", depth)->capture_default_str();
  app.add_option("--jobs", jobs)->envname("TREESCHUR_JOBS");
  CLI11_PARSE(app, argc, argv);

  const GroupConfig cfg(rank);
  const int J = resolve_jobs(jobs);
  const StepFunction psi1 = StepFunction::random(cfg, 1, depth);
  const StepFunction psi2 = StepFunction::random(cfg, 2, depth);
  std::printf("q=%ld n_max=%u depth=%u jobs=%d (omp %s)\n", cfg.q(), n, depth, J,
#ifdef _OPENMP
              "on"
#else
              "off"
#endif
  );

  {
    QSqrt serial = QSqrt::zero(cfg.q()), parallel = QSqrt::zero(cfg.q());
    double ts = 0, tp = 0;
    for (unsigned k = 0; k <= n; ++k) {
      ts += timed([&] { serial += coefficient_mass_sphere_serial(cfg, psi1, psi2, k); });
      tp += timed([&] { parallel += coefficient_mass_sphere(cfg, psi1, psi2, k, J); });
    }
    std::printf("coefficient_mass(B_%u): serial %.3fs | omp %.3fs | speedup %.2fx | equal %s\n", n,
                ts, tp, ts / tp, serial == parallel ? "yes" : "NO");
  }

  {
    SchurQuery q{psi1, psi2, psi1, psi2, n, true};
    std::vector<CScalar> serial, parallel;
    const double ts = timed([&] { serial = schur_sphere_sums_serial(cfg, q); });
    const double tp = timed([&] { parallel = schur_sphere_sums(cfg, q, J); });
    bool equal = serial.size() == parallel.size();
    for (std::size_t i = 0; equal && i < serial.size(); ++i) equal = serial[i] == parallel[i];
    std::printf("schur_sphere_sums(n=%u): serial %.3fs | omp %.3fs | speedup %.2fx | equal %s\n",
                n, ts, tp, ts / tp, equal ? "yes" : "NO");
  }

  {
    // production grouped route vs brute-force reference route
    const unsigned kk = std::min(n, 4u);
    const auto words = sphere_words(cfg, kk);
    CScalar a = CScalar::zero(cfg.q()), b = CScalar::zero(cfg.q());
    const double tg = timed([&] {
      for (const auto& g : words) a += matrix_coefficient(cfg, g, psi1, psi2);
    });
    const double tr = timed([&] {
      for (const auto& g : words) b += matrix_coefficient_reference(cfg, g, psi1, psi2);
    });
    std::printf("matrix_coefficient over S_%u: grouped %.3fs | reference %.3fs | speedup %.1fx | "
                "equal %s\n",
                kk, tg, tr, tr / tg, a == b ? "yes" : "NO");
  }

  {
    SchurQuery q{psi1, psi2, psi1, psi2, n, true};
    std::vector<CScalar> exact;
    std::vector<std::complex<double>> mirror;
    const double te = timed([&] { exact = schur_sphere_sums(cfg, q, J); });
    const double tf = timed([&] { mirror = schur_sphere_sums_f(cfg, q, J); });
    double max_rel = 0;
    for (std::size_t i = 0; i < exact.size(); ++i) {
      const auto e = exact[i].to_complex();
      const double denom = std::max(1.0, std::abs(e));
      max_rel = std::max(max_rel, std::abs(e - mirror[i]) / denom);
    }
    std::printf("exact vs float mirror: exact %.3fs | float %.3fs | ratio %.1fx | max rel dev "
                "%.2e\n",
                te, tf, te / tf, max_rel);
  }
  return 0;
}
