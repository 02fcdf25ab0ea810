#include "ospquant/rational.hpp"

#include <stdexcept>

namespace ospq {

namespace {

bool valid_integer(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

}  // namespace

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!valid_integer(s)) throw std::invalid_argument("bad rational: " + s);
    return Rational(boost::multiprecision::mpz_int(s));
  }
  std::string num = s.substr(0, slash);
  std::string den = s.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den))
    throw std::invalid_argument("bad rational: " + s);
  boost::multiprecision::mpz_int d(den);
  if (d == 0) throw std::invalid_argument("zero denominator: " + s);
  return Rational(boost::multiprecision::mpz_int(num), d);
}

std::string rat_text(const Rational& x) {
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

std::string rat_frac(const Rational& x) {
  return numerator(x).str() + "/" + denominator(x).str();
}

}  // namespace ospq
