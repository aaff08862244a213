#include "treeschur/rational.hpp"

#include <cctype>

namespace treeschur {

Rational rational_pow(long base, long exp) {
  if (base == 0) throw std::domain_error("rational_pow: zero base");
  const bool neg = exp < 0;
  unsigned long e = neg ? static_cast<unsigned long>(-exp) : static_cast<unsigned long>(exp);
  BigInt p = boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(e));
  return neg ? Rational(BigInt(1), p) : Rational(p);
}

double to_double(const Rational& r) {
  return num(r).convert_to<double>() / den(r).convert_to<double>();
}

std::string rational_str(const Rational& r) {
  return num(r).str() + "/" + den(r).str();
}

Rational parse_rational(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  s = s.substr(b, e - b);
  if (s.empty()) throw std::invalid_argument("empty rational");
  const auto slash = s.find('/');
  try {
    if (slash == std::string_view::npos) return Rational(BigInt(std::string(s)));
    BigInt n(std::string(s.substr(0, slash)));
    BigInt d(std::string(s.substr(slash + 1)));
    if (d == 0) throw std::invalid_argument("zero denominator");
    return Rational(n, d);
  } catch (const std::runtime_error& err) {
    throw std::invalid_argument(std::string("bad rational '") + std::string(s) + "': " + err.what());
  }
}

}  // namespace treeschur
