#include "treeschur/words.hpp"

#include <limits>
#include <stdexcept>

namespace treeschur {

GroupConfig::GroupConfig(unsigned r) : rank(r) {
  if (rank < 2) throw std::invalid_argument("rank must be >= 2 (q - 1 = 0 is degenerate)");
  if (rank > 26) throw std::invalid_argument("rank must be <= 26 (letter alphabet)");
}

char letter_char(const GroupConfig& cfg, Letter l) {
  if (l < cfg.rank) return static_cast<char>('a' + l);
  return static_cast<char>('A' + (l - cfg.rank));
}

Letter letter_from_char(const GroupConfig& cfg, char c) {
  if (c >= 'a' && c <= 'z') {
    const unsigned i = static_cast<unsigned>(c - 'a');
    if (i >= cfg.rank) throw std::invalid_argument(std::string("letter '") + c + "' outside rank");
    return static_cast<Letter>(i);
  }
  if (c >= 'A' && c <= 'Z') {
    const unsigned i = static_cast<unsigned>(c - 'A');
    if (i >= cfg.rank) throw std::invalid_argument(std::string("letter '") + c + "' outside rank");
    return static_cast<Letter>(cfg.rank + i);
  }
  throw std::invalid_argument(std::string("bad letter '") + c + "'");
}

Word Word::prefix(std::size_t m) const {
  if (m >= ls_.size()) return *this;
  return word_from_reduced(std::vector<Letter>(ls_.begin(), ls_.begin() + m));
}

Word reduce(const GroupConfig& cfg, std::span<const Letter> seq) {
  std::vector<Letter> out;
  out.reserve(seq.size());
  for (Letter l : seq) {
    if (l >= cfg.alphabet_size()) throw std::invalid_argument("letter outside alphabet");
    if (!out.empty() && out.back() == inverse_letter(cfg, l)) out.pop_back();
    else out.push_back(l);
  }
  return Word(std::move(out));
}

Word word_from_reduced(std::vector<Letter> letters) { return Word(std::move(letters)); }

Word multiply(const GroupConfig& cfg, const Word& u, const Word& v) {
  std::vector<Letter> out(u.letters().begin(), u.letters().end());
  out.reserve(u.length() + v.length());
  for (Letter l : v.letters()) {
    if (!out.empty() && out.back() == inverse_letter(cfg, l)) out.pop_back();
    else out.push_back(l);
  }
  return word_from_reduced(std::move(out));
}

Word inverse(const GroupConfig& cfg, const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.length());
  for (std::size_t i = w.length(); i-- > 0;) out.push_back(inverse_letter(cfg, w[i]));
  return word_from_reduced(std::move(out));
}

std::size_t common_prefix_length(std::span<const Letter> u, std::span<const Letter> v) {
  std::size_t m = 0;
  const std::size_t lim = std::min(u.size(), v.size());
  while (m < lim && u[m] == v[m]) ++m;
  return m;
}

std::size_t common_prefix_length(const Word& u, const Word& v) {
  return common_prefix_length(u.letters(), v.letters());
}

std::string word_str(const GroupConfig& cfg, const Word& w) {
  if (w.empty()) return "e";
  std::string s;
  s.reserve(w.length());
  for (Letter l : w.letters()) s.push_back(letter_char(cfg, l));
  return s;
}

Word parse_word(const GroupConfig& cfg, std::string_view s) {
  if (s == "e" || s.empty()) return Word{};
  std::vector<Letter> seq;
  seq.reserve(s.size());
  for (char c : s) seq.push_back(letter_from_char(cfg, c));
  return reduce(cfg, seq);
}

namespace {
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    throw std::overflow_error("sphere size exceeds 64 bits");
  return a * b;
}
}  // namespace

std::uint64_t sphere_size(const GroupConfig& cfg, unsigned k) {
  if (k == 0) return 1;
  const std::uint64_t q = static_cast<std::uint64_t>(cfg.q());
  std::uint64_t s = q + 1;
  for (unsigned i = 1; i < k; ++i) s = checked_mul(s, q);
  return s;
}

std::uint64_t ball_size(const GroupConfig& cfg, unsigned n) {
  std::uint64_t total = 0;
  for (unsigned k = 0; k <= n; ++k) {
    std::uint64_t s = sphere_size(cfg, k);
    if (total > std::numeric_limits<std::uint64_t>::max() - s)
      throw std::overflow_error("ball size exceeds 64 bits");
    total += s;
  }
  return total;
}

std::uint64_t sphere_rank(const GroupConfig& cfg, std::span<const Letter> w) {
  if (w.empty()) return 0;
  const std::uint64_t q = static_cast<std::uint64_t>(cfg.q());
  const std::size_t d = w.size();
  // subtree sizes q^(d-1-i) below position i
  std::uint64_t r = 0;
  std::uint64_t block = 1;
  for (std::size_t i = 1; i < d; ++i) block = checked_mul(block, q);  // q^(d-1)
  r = checked_mul(static_cast<std::uint64_t>(w[0]), block);
  Letter prev = w[0];
  for (std::size_t i = 1; i < d; ++i) {
    block /= q;
    const Letter bar = inverse_letter(cfg, prev);
    std::uint64_t pos = w[i] - (w[i] > bar ? 1 : 0);
    r += checked_mul(pos, block);
    prev = w[i];
  }
  return r;
}

Word sphere_unrank(const GroupConfig& cfg, unsigned k, std::uint64_t r) {
  if (r >= sphere_size(cfg, k)) throw std::out_of_range("sphere rank out of range");
  if (k == 0) return Word{};
  const std::uint64_t q = static_cast<std::uint64_t>(cfg.q());
  std::uint64_t block = 1;
  for (unsigned i = 1; i < k; ++i) block = checked_mul(block, q);
  std::vector<Letter> ls(k);
  ls[0] = static_cast<Letter>(r / block);
  r %= block;
  for (unsigned i = 1; i < k; ++i) {
    block /= q;
    const Letter bar = inverse_letter(cfg, ls[i - 1]);
    std::uint64_t pos = r / block;
    r %= block;
    ls[i] = static_cast<Letter>(pos + (pos >= bar ? 1 : 0));
  }
  return word_from_reduced(std::move(ls));
}

std::uint64_t ball_rank(const GroupConfig& cfg, const Word& w) {
  if (w.empty()) return 0;
  return ball_size(cfg, static_cast<unsigned>(w.length()) - 1) + sphere_rank(cfg, w.letters());
}

Word ball_unrank(const GroupConfig& cfg, std::uint64_t r) {
  unsigned k = 0;
  std::uint64_t base = 0;
  for (;;) {
    const std::uint64_t s = sphere_size(cfg, k);
    if (r < base + s) return sphere_unrank(cfg, k, r - base);
    base += s;
    ++k;
  }
}

std::vector<Word> sphere_words(const GroupConfig& cfg, unsigned k) {
  std::vector<Word> out;
  out.reserve(sphere_size(cfg, k));
  for_each_in_sphere(cfg, k, [&](std::span<const Letter> w) {
    out.push_back(word_from_reduced(std::vector<Letter>(w.begin(), w.end())));
  });
  return out;
}

std::vector<Word> ball_words(const GroupConfig& cfg, unsigned n) {
  std::vector<Word> out;
  out.reserve(ball_size(cfg, n));
  for (unsigned k = 0; k <= n; ++k) {
    auto s = sphere_words(cfg, k);
    out.insert(out.end(), s.begin(), s.end());
  }
  return out;
}

}  // namespace treeschur
