#pragma once

#include "ospquant/rational.hpp"

#include <utility>
#include <vector>

namespace ospq {

// Univariate polynomial over the rationals, dense coefficients c[i] x^i,
// no trailing zeros.
struct UniPoly {
  std::vector<Rational> c;

  static UniPoly zero() { return {}; }
  static UniPoly constant(Rational a);
  static UniPoly x_minus(const Rational& a);  // x - a

  int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 when zero
  bool is_zero() const { return c.empty(); }
  void normalize();

  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly& operator*=(const Rational& a);
  bool operator==(const UniPoly& o) const { return c == o.c; }

  Rational eval(const Rational& x) const;
  UniPoly derivative() const;

  // quotient and remainder; divisor must be nonzero
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;
};

// g = gcd(a, b) monic, with u a + v b = g.
struct ExtGcd {
  UniPoly g, u, v;
};
ExtGcd unipoly_ext_gcd(const UniPoly& a, const UniPoly& b);

}  // namespace ospq
