#include "treeschur/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace treeschur {

Rational cylinder_measure_depth(const GroupConfig& cfg, unsigned depth) {
  if (depth == 0) return Rational(1);
  const long q = cfg.q();
  BigInt d = BigInt(q + 1) * boost::multiprecision::pow(BigInt(q), depth - 1);
  return Rational(BigInt(1), d);
}

Rational cylinder_measure(const GroupConfig& cfg, const Word& x) {
  return cylinder_measure_depth(cfg, static_cast<unsigned>(x.length()));
}

unsigned busemann_cell_index(const GroupConfig& cfg, const Word& y, const Word& g) {
  (void)cfg;
  if (y.length() < g.length()) throw std::invalid_argument("cylinder not cell-resolving");
  return static_cast<unsigned>(common_prefix_length(y, g));
}

long busemann_value(const GroupConfig& cfg, const Word& y, const Word& g) {
  return 2L * busemann_cell_index(cfg, y, g) - static_cast<long>(g.length());
}

Rational cell_measure(const GroupConfig& cfg, std::size_t n, unsigned k) {
  if (n == 0 || k > n) throw std::invalid_argument("cell index out of range");
  const long q = cfg.q();
  if (k == n) return cylinder_measure_depth(cfg, static_cast<unsigned>(n));
  if (k == 0) return Rational(q, q + 1);
  BigInt d = BigInt(q + 1) * boost::multiprecision::pow(BigInt(q), k);
  return Rational(BigInt(q - 1), d);
}

Rational cell_measure(const GroupConfig& cfg, const Word& g, unsigned k) {
  return cell_measure(cfg, g.length(), k);
}

// ---- StepFunction ----

StepFunction StepFunction::constant(const GroupConfig& cfg, CScalar v) {
  (void)cfg;
  StepFunction f;
  f.depth = 0;
  f.values.push_back(std::move(v));
  return f;
}

StepFunction StepFunction::one(const GroupConfig& cfg) {
  return constant(cfg, CScalar::one(cfg.q()));
}

StepFunction StepFunction::zero(const GroupConfig& cfg, unsigned depth) {
  StepFunction f;
  f.depth = depth;
  f.values.assign(sphere_size(cfg, depth), CScalar::zero(cfg.q()));
  return f;
}

StepFunction StepFunction::cylinder(const GroupConfig& cfg, const Word& x) {
  StepFunction f = zero(cfg, static_cast<unsigned>(x.length()));
  f.values[sphere_rank(cfg, x.letters())] = CScalar::one(cfg.q());
  return f;
}

namespace {
std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

Rational small_rational(std::uint64_t& state) {
  const long n = static_cast<long>(splitmix64(state) % 5) - 2;  // [-2, 2]
  const long d = 1 + static_cast<long>(splitmix64(state) % 3);  // [1, 3]
  return Rational(n, d);
}
}  // namespace

StepFunction StepFunction::random(const GroupConfig& cfg, std::uint64_t seed, unsigned depth) {
  const long q = cfg.q();
  StepFunction f;
  f.depth = depth;
  const std::uint64_t count = sphere_size(cfg, depth);
  f.values.reserve(count);
  std::uint64_t state = seed * 0x2545F4914F6CDD1Dull + depth;
  for (std::uint64_t i = 0; i < count; ++i) {
    QSqrt re(small_rational(state), small_rational(state), q);
    QSqrt im(small_rational(state), small_rational(state), q);
    f.values.emplace_back(std::move(re), std::move(im));
  }
  return f;
}

const CScalar& StepFunction::value_at(const GroupConfig& cfg, std::span<const Letter> y) const {
  if (y.size() < depth) throw std::invalid_argument("word shorter than step function depth");
  return values[sphere_rank(cfg, y.subspan(0, depth))];
}

StepFunction refine(const GroupConfig& cfg, const StepFunction& f, unsigned D) {
  if (D < f.depth) throw std::invalid_argument("refine target shallower than source");
  if (D == f.depth) return f;
  StepFunction out;
  out.depth = D;
  const std::uint64_t S = sphere_size(cfg, D);
  out.values.reserve(S);
  if (f.depth == 0) {
    out.values.assign(S, f.values[0]);
    return out;
  }
  std::uint64_t block = 1;
  for (unsigned i = 0; i < D - f.depth; ++i) block *= static_cast<std::uint64_t>(cfg.q());
  for (std::uint64_t r = 0; r < S; ++r) out.values.push_back(f.values[r / block]);
  return out;
}

CScalar inner_product(const GroupConfig& cfg, const StepFunction& f1, const StepFunction& f2) {
  const unsigned D = std::max(f1.depth, f2.depth);
  const std::uint64_t S = sphere_size(cfg, D);
  const std::uint64_t q = static_cast<std::uint64_t>(cfg.q());
  auto block_of = [&](unsigned d) -> std::uint64_t {
    std::uint64_t b = 1;
    for (unsigned i = 0; i < D - d; ++i) b *= q;
    return b;
  };
  const std::uint64_t b1 = f1.depth ? block_of(f1.depth) : 0;
  const std::uint64_t b2 = f2.depth ? block_of(f2.depth) : 0;
  CScalar acc = CScalar::zero(cfg.q());
  for (std::uint64_t r = 0; r < S; ++r) {
    const CScalar& v1 = f1.values[b1 ? r / b1 : 0];
    const CScalar& v2 = f2.values[b2 ? r / b2 : 0];
    acc += v1 * v2.conj();
  }
  return acc.scaled(cylinder_measure_depth(cfg, D));
}

QSqrt norm2(const GroupConfig& cfg, const StepFunction& f) {
  return inner_product(cfg, f, f).re();
}

bool equal_as_functions(const GroupConfig& cfg, const StepFunction& f1, const StepFunction& f2) {
  const unsigned D = std::max(f1.depth, f2.depth);
  const std::uint64_t S = sphere_size(cfg, D);
  const std::uint64_t q = static_cast<std::uint64_t>(cfg.q());
  auto block_of = [&](unsigned d) -> std::uint64_t {
    std::uint64_t b = 1;
    for (unsigned i = 0; i < D - d; ++i) b *= q;
    return b;
  };
  const std::uint64_t b1 = f1.depth ? block_of(f1.depth) : 0;
  const std::uint64_t b2 = f2.depth ? block_of(f2.depth) : 0;
  for (std::uint64_t r = 0; r < S; ++r)
    if (f1.values[b1 ? r / b1 : 0] != f2.values[b2 ? r / b2 : 0]) return false;
  return true;
}

StepFunction apply_pi(const GroupConfig& cfg, const Word& g, const StepFunction& f) {
  const std::size_t n = g.length();
  if (n == 0) return f;
  const unsigned d = f.depth;
  const unsigned D = static_cast<unsigned>(n) + d;
  const auto gl = g.letters();

  std::vector<QSqrt> qh;
  qh.reserve(n + 1);
  for (std::size_t k = 0; k <= n; ++k)
    qh.push_back(q_half_power(cfg.q(), 2 * static_cast<long>(k) - static_cast<long>(n)));

  StepFunction out;
  out.depth = D;
  out.values.reserve(sphere_size(cfg, D));
  std::vector<Letter> arg(d);
  for_each_in_sphere(cfg, D, [&](std::span<const Letter> y) {
    const std::size_t k = common_prefix_length(y, gl);
    // first d letters of reduce(g^-1 y): the uncancelled tail of g^-1, then y past position k
    for (unsigned j = 0; j < d; ++j)
      arg[j] = (j < n - k) ? inverse_letter(cfg, gl[n - 1 - j]) : y[k + (j - (n - k))];
    out.values.push_back(f.values[sphere_rank(cfg, arg)].times_real(qh[k]));
  });
  return out;
}

CScalar matrix_coefficient_reference(const GroupConfig& cfg, const Word& g, const StepFunction& f1,
                                     const StepFunction& f2) {
  return inner_product(cfg, apply_pi(cfg, g, f1), f2);
}

// ---- grouped coefficient kernel ----
//
// For |y| = D >= |g| the summand of <pi(g) f1, f2> depends on y only through
// (k, the first d1 letters of g^-1 y, the first d2 letters of y) where
// k = cpl(y, g) is the Busemann cell. All three are fixed by the prefix of y
// of length L(k) = max(k, d2, k + max(0, d1 - (n-k))), so the sum collapses to
// stems of that length; the stem's extension count times nu is cell_measure
// when L = k and the cylinder measure of depth L otherwise.

namespace {

struct ExactTraits {
  using C = CScalar;
  using Weight = QSqrt;
  long q;
  C zero() const { return CScalar::zero(q); }
  Weight qh_weight(long m, const Rational& w) const { return q_half_power(q, m).scaled(w); }
  static void add_term(C& acc, const Weight& qhw, const C& v1, const C& v2c) {
    acc += (v1 * v2c).times_real(qhw);
  }
};

double sqrt_int_pow(long q, long m) {
  const double s = std::sqrt(static_cast<double>(q));
  double p = 1.0;
  for (long i = 0; i < std::labs(m); ++i) p *= s;
  return m < 0 ? 1.0 / p : p;
}

struct FloatTraits {
  using C = std::complex<double>;
  using Weight = double;
  long q;
  C zero() const { return {0.0, 0.0}; }
  Weight qh_weight(long m, const Rational& w) const { return sqrt_int_pow(q, m) * to_double(w); }
  static void add_term(C& acc, const Weight& qhw, const C& v1, const C& v2c) {
    acc += qhw * v1 * v2c;
  }
};

template <class Traits>
typename Traits::C grouped_mc(const GroupConfig& cfg, std::span<const Letter> g, unsigned d1,
                              const typename Traits::C* f1, unsigned d2,
                              const typename Traits::C* f2conj, const Traits& tr) {
  using C = typename Traits::C;
  const std::size_t n = g.size();
  const unsigned A = cfg.alphabet_size();
  C total = tr.zero();
  std::vector<Letter> stem;
  std::vector<Letter> arg(d1);

  for (std::size_t k = 0; k <= n; ++k) {
    const std::size_t tail1 = (d1 > n - k) ? d1 - (n - k) : 0;
    const std::size_t L = std::max({k, static_cast<std::size_t>(d2), k + tail1});
    const Rational weight =
        (L == k) ? cell_measure(cfg, n, static_cast<unsigned>(k))
                 : cylinder_measure_depth(cfg, static_cast<unsigned>(L));
    const typename Traits::Weight qhw =
        tr.qh_weight(2 * static_cast<long>(k) - static_cast<long>(n), weight);

    auto emit = [&](std::span<const Letter> st) {
      for (unsigned j = 0; j < d1; ++j)
        arg[j] = (j < n - k) ? inverse_letter(cfg, g[n - 1 - j]) : st[k + (j - (n - k))];
      const std::uint64_t i1 = sphere_rank(cfg, std::span<const Letter>(arg.data(), d1));
      const std::uint64_t i2 = sphere_rank(cfg, st.subspan(0, d2));
      Traits::add_term(total, qhw, f1[i1], f2conj[i2]);
    };

    stem.assign(g.begin(), g.begin() + k);
    if (L == k) {
      emit(stem);
      continue;
    }
    stem.resize(L);
    auto allowed = [&](std::size_t p, unsigned l) {
      if (p > 0 && l == inverse_letter(cfg, stem[p - 1])) return false;
      if (p == k && k < n && l == g[k]) return false;
      return true;
    };
    auto first_allowed = [&](std::size_t p) {
      unsigned l = 0;
      while (!allowed(p, l)) ++l;
      return l;
    };
    for (std::size_t p = k; p < L; ++p) stem[p] = static_cast<Letter>(first_allowed(p));
    for (;;) {
      emit(stem);
      bool advanced = false;
      for (std::size_t p = L; p-- > k;) {
        unsigned l = stem[p] + 1u;
        while (l < A && !allowed(p, l)) ++l;
        if (l < A) {
          stem[p] = static_cast<Letter>(l);
          for (std::size_t p2 = p + 1; p2 < L; ++p2) stem[p2] = static_cast<Letter>(first_allowed(p2));
          advanced = true;
          break;
        }
      }
      if (!advanced) break;
    }
  }
  return total;
}

}  // namespace

CScalar matrix_coefficient(const GroupConfig& cfg, const Word& g, const StepFunction& f1,
                           const StepFunction& f2) {
  if (g.empty()) return inner_product(cfg, f1, f2);
  std::vector<CScalar> f2c;
  f2c.reserve(f2.values.size());
  for (const auto& v : f2.values) f2c.push_back(v.conj());
  ExactTraits tr{cfg.q()};
  return grouped_mc(cfg, g.letters(), f1.depth, f1.values.data(), f2.depth, f2c.data(), tr);
}

FStepFunction to_float(const StepFunction& f) {
  FStepFunction out;
  out.depth = f.depth;
  out.values.reserve(f.values.size());
  for (const auto& v : f.values) out.values.push_back(v.to_complex());
  return out;
}

namespace {
std::complex<double> inner_product_f(const GroupConfig& cfg, const FStepFunction& f1,
                                     const FStepFunction& f2) {
  const unsigned D = std::max(f1.depth, f2.depth);
  const std::uint64_t S = sphere_size(cfg, D);
  const std::uint64_t q = static_cast<std::uint64_t>(cfg.q());
  auto block_of = [&](unsigned d) -> std::uint64_t {
    std::uint64_t b = 1;
    for (unsigned i = 0; i < D - d; ++i) b *= q;
    return b;
  };
  const std::uint64_t b1 = f1.depth ? block_of(f1.depth) : 0;
  const std::uint64_t b2 = f2.depth ? block_of(f2.depth) : 0;
  std::complex<double> acc{0.0, 0.0};
  for (std::uint64_t r = 0; r < S; ++r)
    acc += f1.values[b1 ? r / b1 : 0] * std::conj(f2.values[b2 ? r / b2 : 0]);
  return acc * to_double(cylinder_measure_depth(cfg, D));
}
}  // namespace

std::complex<double> matrix_coefficient_f(const GroupConfig& cfg, const Word& g,
                                          const FStepFunction& f1, const FStepFunction& f2) {
  if (g.empty()) return inner_product_f(cfg, f1, f2);
  std::vector<std::complex<double>> f2c;
  f2c.reserve(f2.values.size());
  for (const auto& v : f2.values) f2c.push_back(std::conj(v));
  FloatTraits tr{cfg.q()};
  return grouped_mc(cfg, g.letters(), f1.depth, f1.values.data(), f2.depth, f2c.data(), tr);
}

}  // namespace treeschur
