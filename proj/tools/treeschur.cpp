#include "treeschur/closedforms.hpp"
#include "treeschur/parallel.hpp"
#include "treeschur/psi.hpp"
#include "treeschur/report.hpp"
#include "treeschur/schur.hpp"
#include "treeschur/verify.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>

using namespace treeschur;

namespace {

struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  unsigned rank = 2;
  unsigned n_max = 5;
  unsigned depth = 2;
  std::string psi1 = "one", psi2 = "one", psi3 = "one", psi4 = "one";
  std::string g_word = "a", h_word = "e";
  bool use_float = false;
  int jobs = 0;
  std::string out = "-";
  std::string format = "csv";
  std::uint64_t seed = 12345;
  bool force = false;
};

// The exact path enumerates B_(n_max) and, per element, stems bounded by the
// step-function depths; the guard mirrors the documented default budget
// (q = 3, n <= 7, depth <= 2) as a cap on (2 n + depth) log q.
void check_budget(const Options& opt, const GroupConfig& cfg, unsigned max_depth) {
  const double cost = (2.0 * opt.n_max + max_depth) * std::log(static_cast<double>(cfg.q()));
  const double cap = 16.0 * std::log(3.0) + 1e-9;
  if (max_depth > opt.depth) {
    if (!opt.force)
      throw BudgetError("psi depth " + std::to_string(max_depth) + " exceeds --depth " +
                        std::to_string(opt.depth) + " (use --force to override)");
    std::cerr << "warning: psi depth " << max_depth << " above --depth " << opt.depth << "\n";
  }
  if (cost <= cap) return;
  if (!opt.use_float && !opt.force)
    throw BudgetError("exact run beyond the default budget (q=3, n<=7, depth<=2 scale); "
                      "use --float or --force");
  std::cerr << "warning: run is beyond the default budget; expect long runtimes\n";
}

StepFunction resolve_psi(const GroupConfig& cfg, const Options& opt, const std::string& spec) {
  if (spec == "random")
    return StepFunction::random(cfg, opt.seed, std::min(opt.depth, 2u));
  return parse_psi(cfg, spec);
}

void write_table(const Options& opt, const Table& t) {
  std::ofstream file;
  std::ostream* os = &std::cout;
  if (opt.out != "-") {
    file.open(opt.out, std::ios::binary);
    if (!file) throw UsageError("cannot open output file '" + opt.out + "'");
    os = &file;
  }
  if (opt.format == "csv") t.write_csv(*os);
  else t.write_json(*os);
}

int cmd_xi(const Options& opt) {
  const GroupConfig cfg(opt.rank);
  const StepFunction one = StepFunction::one(cfg);
  Table t;
  t.columns = {"n", "xi_exact", "xi_float", "brute_check"};
  bool all_ok = true;
  for (unsigned n = 0; n <= opt.n_max; ++n) {
    const QSqrt v = xi(cfg, n);
    std::string check = "-";
    if (n <= 5) {
      const Word g = sphere_unrank(cfg, n, 0);
      const bool ok = matrix_coefficient_reference(cfg, g, one, one) == CScalar::real(v);
      check = ok ? "ok" : "FAIL";
      all_ok = all_ok && ok;
    }
    t.add_row({std::to_string(n), v.str(), format_double(v.to_double()), check});
  }
  write_table(opt, t);
  return all_ok ? 0 : 1;
}

int cmd_mass(const Options& opt) {
  const GroupConfig cfg(opt.rank);
  const StepFunction one = StepFunction::one(cfg);
  const int jobs = resolve_jobs(opt.jobs);
  Table t;
  t.columns = {"k", "m_sphere", "m_ball", "brute_check"};
  bool all_ok = true;
  Rational ball(0);
  for (unsigned k = 0; k <= opt.n_max; ++k) {
    const Rational ms = m_sphere(cfg, k);
    ball += ms;
    if (ball != m_ball(cfg, k)) all_ok = false;
    std::string check = "-";
    if (k <= 5) {
      const bool ok =
          coefficient_mass_sphere(cfg, one, one, k, jobs) == QSqrt::of(ms, cfg.q());
      check = ok ? "ok" : "FAIL";
      all_ok = all_ok && ok;
    }
    t.add_row({std::to_string(k), rational_str(ms), rational_str(m_ball(cfg, k)), check});
  }
  write_table(opt, t);
  return all_ok ? 0 : 1;
}

int cmd_schur(const Options& opt) {
  const GroupConfig cfg(opt.rank);
  if (opt.n_max < 1) throw UsageError("--n-max must be >= 1");
  SchurQuery q;
  q.psi1 = resolve_psi(cfg, opt, opt.psi1);
  q.psi2 = resolve_psi(cfg, opt, opt.psi2);
  q.psi3 = resolve_psi(cfg, opt, opt.psi3);
  q.psi4 = resolve_psi(cfg, opt, opt.psi4);
  q.n_max = opt.n_max;
  q.exact = !opt.use_float;
  const unsigned max_depth =
      std::max({q.psi1.depth, q.psi2.depth, q.psi3.depth, q.psi4.depth});
  check_budget(opt, cfg, max_depth);
  const int jobs = resolve_jobs(opt.jobs);

  Table t;
  t.columns = {"n",        "numerator_re", "numerator_im", "m_ball",   "ratio_re",
               "ratio_im", "ratio_f_re",   "ratio_f_im",   "target_re", "target_im",
               "abs_error"};
  if (q.exact) {
    const auto rows = schur_ratio_table(cfg, q, jobs);
    // B_0 = {e}: the numerator must equal <psi1,psi2> conj<psi3,psi4> exactly
    const CScalar expect0 =
        inner_product(cfg, q.psi1, q.psi2) * inner_product(cfg, q.psi3, q.psi4).conj();
    if (rows[0].numerator != expect0) return 1;
    for (const auto& r : rows) {
      const auto rf = r.ratio.to_complex();
      t.add_row({std::to_string(r.n), r.numerator.re().str(), r.numerator.im().str(),
                 rational_str(r.mball), r.ratio.re().str(), r.ratio.im().str(),
                 format_double(rf.real()), format_double(rf.imag()), r.target.re().str(),
                 r.target.im().str(), format_double(r.abs_error)});
    }
  } else {
    const auto rows = schur_ratio_table_f(cfg, q, jobs);
    for (const auto& r : rows) {
      t.add_row({std::to_string(r.n), format_double(r.numerator.real()),
                 format_double(r.numerator.imag()), format_double(r.mball),
                 format_double(r.ratio.real()), format_double(r.ratio.imag()),
                 format_double(r.ratio.real()), format_double(r.ratio.imag()),
                 format_double(r.target.real()), format_double(r.target.imag()),
                 format_double(r.abs_error)});
    }
  }
  write_table(opt, t);
  return 0;
}

int cmd_ctemper(const Options& opt) {
  const GroupConfig cfg(opt.rank);
  if (opt.n_max < 1) throw UsageError("--n-max must be >= 1");
  const StepFunction psi1 = resolve_psi(cfg, opt, opt.psi1);
  const StepFunction psi2 = resolve_psi(cfg, opt, opt.psi2);
  check_budget(opt, cfg, std::max(psi1.depth, psi2.depth));
  const int jobs = resolve_jobs(opt.jobs);
  const Word g = parse_word(cfg, opt.g_word);
  const Word h = parse_word(cfg, opt.h_word);
  const unsigned k = static_cast<unsigned>(g.length() + h.length());

  Table t;
  t.columns = {"kind", "n", "g", "h", "mass", "bound", "ratio", "ok"};
  bool all_ok = true;

  const QSqrt norms = norm2(cfg, psi1) * norm2(cfg, psi2);
  const Rational C = c_bound(cfg);
  QSqrt ball_mass = QSqrt::zero(cfg.q());
  for (unsigned n = 0; n <= opt.n_max; ++n) {
    ball_mass += coefficient_mass_sphere(cfg, psi1, psi2, n, jobs);
    const QSqrt bound = norms.scaled(C * m_ball(cfg, n));
    const bool ok = ball_mass <= bound;
    all_ok = all_ok && ok;
    t.add_row({"cond5", std::to_string(n), "", "", ball_mass.str(), bound.str(),
               format_double(ball_mass.to_double() / to_double(m_ball(cfg, n))),
               ok ? "ok" : "FAIL"});
  }
  for (unsigned n = std::max(1u, k); n <= opt.n_max; ++n) {
    const auto sd = sym_diff_ratio(cfg, n, g, h, psi1, psi2, jobs);
    const Rational env = m_ball(cfg, n + k) - m_ball(cfg, n >= k ? n - k : 0);
    const bool ok = sd.containment_ok && sd.mass <= QSqrt::of(env, cfg.q());
    all_ok = all_ok && ok;
    t.add_row({"cond6", std::to_string(n), word_str(cfg, g), word_str(cfg, h), sd.mass.str(),
               rational_str(env), format_double(sd.ratio), ok ? "ok" : "FAIL"});
  }
  write_table(opt, t);
  return all_ok ? 0 : 1;
}

int cmd_probe(const Options& opt) {
  const GroupConfig cfg(opt.rank);
  if (opt.n_max < 1) throw UsageError("--n-max must be >= 1");
  SchurQuery q;
  q.psi1 = resolve_psi(cfg, opt, opt.psi1);
  q.psi2 = resolve_psi(cfg, opt, opt.psi2);
  q.psi3 = resolve_psi(cfg, opt, opt.psi3);
  q.psi4 = resolve_psi(cfg, opt, opt.psi4);
  q.n_max = opt.n_max;
  q.exact = !opt.use_float;
  const unsigned max_depth =
      std::max({q.psi1.depth, q.psi2.depth, q.psi3.depth, q.psi4.depth});
  check_budget(opt, cfg, max_depth);
  const int jobs = resolve_jobs(opt.jobs);

  const auto rep = abstract_constant_probe(cfg, q, jobs);
  Table t;
  t.columns = {"n",          "numerator_re", "numerator_im", "scaled_re",
               "scaled_im",  "fit_c_re",     "K",            "K_target_re",
               "target_over_K_re", "verdict"};
  for (const auto& row : rep.rows) {
    t.add_row({std::to_string(row.n), row.numerator.re().str(), row.numerator.im().str(),
               format_double(row.scaled.real()), format_double(row.scaled.imag()),
               format_double(rep.fit_c.real()), rational_str(rep.K),
               format_double(rep.candidate_K.real()), format_double(rep.candidate_inv_K.real()),
               rep.verdict});
  }
  write_table(opt, t);
  return 0;
}

int cmd_verify(const Options& opt) {
  const int jobs = resolve_jobs(opt.jobs);
  if (opt.out != "-") {
    // deterministic full report: matrix plus canonical per-criterion detail
    const auto rep = verify::run_criteria(jobs);
    std::ofstream file(opt.out, std::ios::binary);
    if (!file) throw UsageError("cannot open output file '" + opt.out + "'");
    for (const auto& r : rep.results)
      file << "[" << r.id << "] " << (r.pass ? "PASS" : "FAIL") << " " << r.name << "\n";
    file << rep.canonical_text;
  }
  return verify::run_all(opt.rank, jobs, false);
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"Exact boundary-representation toolkit for the free group: Harish-Chandra "
               "function, coefficient masses, and asymptotic Schur orthogonality on balls"};
  app.fallthrough();
  app.require_subcommand(1);

  app.add_option("-N,--rank", opt.rank, "free group rank (>= 2)")->capture_default_str();
  app.add_option("--n-max", opt.n_max, "largest sphere/ball radius")->capture_default_str();
  app.add_option("--depth", opt.depth, "declared max step-function depth")->capture_default_str();
  app.add_option("--psi1", opt.psi1, "vector spec: one | cyl:<word> | random:<seed>:<depth> | @file.json")
      ->capture_default_str();
  app.add_option("--psi2", opt.psi2, "vector spec")->capture_default_str();
  app.add_option("--psi3", opt.psi3, "vector spec")->capture_default_str();
  app.add_option("--psi4", opt.psi4, "vector spec")->capture_default_str();
  auto* flag_float = app.add_flag("--float", opt.use_float, "use the double-precision mirror");
  app.add_flag("--exact", "use exact scalars (default)")->excludes(flag_float);
  app.add_option("--jobs", opt.jobs, "worker threads (default: TREESCHUR_JOBS or OpenMP)")
      ->envname("TREESCHUR_JOBS");
  app.add_option("--out", opt.out, "output path ('-' = stdout)")->capture_default_str();
  app.add_option("--format", opt.format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--seed", opt.seed, "seed for the bare 'random' psi spec")->capture_default_str();
  app.add_flag("--force", opt.force, "override the cost budget guard");

  auto* xi_cmd = app.add_subcommand("xi", "Harish-Chandra function with brute-force cross-check");
  auto* mass_cmd = app.add_subcommand("mass", "sphere/ball coefficient masses vs closed forms");
  auto* schur_cmd = app.add_subcommand("schur", "normalized ball sums of coefficient products");
  auto* ctemper_cmd = app.add_subcommand("ctemper", "c-temperedness conditions (5) and (6)");
  ctemper_cmd->add_option("--g-word", opt.g_word, "right translation word")->capture_default_str();
  ctemper_cmd->add_option("--h-word", opt.h_word, "left translation word")->capture_default_str();
  auto* probe_cmd = app.add_subcommand("probe", "n^-3 normalization constant probe");
  auto* verify_cmd = app.add_subcommand("verify", "run the acceptance criteria");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (xi_cmd->parsed()) return cmd_xi(opt);
    if (mass_cmd->parsed()) return cmd_mass(opt);
    if (schur_cmd->parsed()) return cmd_schur(opt);
    if (ctemper_cmd->parsed()) return cmd_ctemper(opt);
    if (probe_cmd->parsed()) return cmd_probe(opt);
    if (verify_cmd->parsed()) return cmd_verify(opt);
  } catch (const BudgetError& e) {
    std::cerr << "budget: " << e.what() << "\n";
    return 3;
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
