#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace treeschur {

// Free group of rank N; its Cayley graph is the homogeneous tree of degree
// q + 1 with q = 2N - 1.
struct GroupConfig {
  explicit GroupConfig(unsigned rank);
  unsigned rank;
  unsigned alphabet_size() const { return 2 * rank; }
  long q() const { return 2 * static_cast<long>(rank) - 1; }
};

// Generators a_1..a_N are 0..N-1, inverses a_1^-1..a_N^-1 are N..2N-1.
using Letter = std::uint8_t;

inline Letter inverse_letter(const GroupConfig& cfg, Letter l) {
  return static_cast<Letter>((l + cfg.rank) % cfg.alphabet_size());
}

char letter_char(const GroupConfig& cfg, Letter l);
Letter letter_from_char(const GroupConfig& cfg, char c);

// A reduced word; doubles as a vertex of the tree. Immutable after
// construction; the empty word is the base point.
class Word {
 public:
  Word() = default;

  std::size_t length() const { return ls_.size(); }
  bool empty() const { return ls_.empty(); }
  Letter operator[](std::size_t i) const { return ls_[i]; }
  std::span<const Letter> letters() const { return ls_; }
  Word prefix(std::size_t m) const;

  bool operator==(const Word&) const = default;

  friend Word reduce(const GroupConfig& cfg, std::span<const Letter> seq);
  friend Word word_from_reduced(std::vector<Letter> letters);

 private:
  explicit Word(std::vector<Letter> ls) : ls_(std::move(ls)) {}
  std::vector<Letter> ls_;
};

// Free reduction of an arbitrary letter sequence; idempotent on reduced input.
Word reduce(const GroupConfig& cfg, std::span<const Letter> seq);
// Trusts the caller that `letters` is already reduced.
Word word_from_reduced(std::vector<Letter> letters);

Word multiply(const GroupConfig& cfg, const Word& u, const Word& v);
Word inverse(const GroupConfig& cfg, const Word& w);
std::size_t common_prefix_length(const Word& u, const Word& v);
std::size_t common_prefix_length(std::span<const Letter> u, std::span<const Letter> v);

// "e" for the empty word, otherwise 'a'..'z' for generators and 'A'..'Z'
// for their inverses.
std::string word_str(const GroupConfig& cfg, const Word& w);
Word parse_word(const GroupConfig& cfg, std::string_view s);  // reduces its input

// |S_k| = 1 (k = 0) or (q+1) q^(k-1); |B_n| = sum of sphere sizes.
// Throws std::overflow_error once the count leaves uint64 range.
std::uint64_t sphere_size(const GroupConfig& cfg, unsigned k);
std::uint64_t ball_size(const GroupConfig& cfg, unsigned n);

// Position of a length-k word within the lexicographic non-backtracking
// enumeration of S_k, and its inverse. The enumeration orders the first
// letter by index and every later position by index skipping the inverse of
// the previous letter.
std::uint64_t sphere_rank(const GroupConfig& cfg, std::span<const Letter> w);
Word sphere_unrank(const GroupConfig& cfg, unsigned k, std::uint64_t r);

std::uint64_t ball_rank(const GroupConfig& cfg, const Word& w);
Word ball_unrank(const GroupConfig& cfg, std::uint64_t r);

namespace detail {
template <class Fn>
void sphere_dfs(const GroupConfig& cfg, unsigned k, std::vector<Letter>& buf, Fn&& fn) {
  if (buf.size() == k) {
    fn(std::span<const Letter>(buf));
    return;
  }
  const unsigned A = cfg.alphabet_size();
  for (unsigned l = 0; l < A; ++l) {
    if (!buf.empty() && l == inverse_letter(cfg, buf.back())) continue;
    buf.push_back(static_cast<Letter>(l));
    sphere_dfs(cfg, k, buf, fn);
    buf.pop_back();
  }
}
}  // namespace detail

// Visits every reduced word of length exactly k, in enumeration order,
// without allocating per word. fn(std::span<const Letter>).
template <class Fn>
void for_each_in_sphere(const GroupConfig& cfg, unsigned k, Fn&& fn) {
  std::vector<Letter> buf;
  buf.reserve(k);
  detail::sphere_dfs(cfg, k, buf, fn);
}

// Spheres 0..n in order.
template <class Fn>
void for_each_in_ball(const GroupConfig& cfg, unsigned n, Fn&& fn) {
  for (unsigned k = 0; k <= n; ++k) for_each_in_sphere(cfg, k, fn);
}

// Materialized enumerations for test-scale use.
std::vector<Word> sphere_words(const GroupConfig& cfg, unsigned k);
std::vector<Word> ball_words(const GroupConfig& cfg, unsigned n);

}  // namespace treeschur
