#include "ospquant/unipoly.hpp"

#include <stdexcept>

namespace ospq {

UniPoly UniPoly::constant(Rational a) {
  UniPoly p;
  if (a != 0) p.c.push_back(std::move(a));
  return p;
}

UniPoly UniPoly::x_minus(const Rational& a) {
  UniPoly p;
  p.c = {-a, Rational(1)};
  return p;
}

void UniPoly::normalize() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  UniPoly out;
  out.c.resize(std::max(c.size(), o.c.size()), Rational(0));
  for (std::size_t i = 0; i < c.size(); ++i) out.c[i] += c[i];
  for (std::size_t i = 0; i < o.c.size(); ++i) out.c[i] += o.c[i];
  out.normalize();
  return out;
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
  UniPoly out;
  out.c.resize(std::max(c.size(), o.c.size()), Rational(0));
  for (std::size_t i = 0; i < c.size(); ++i) out.c[i] += c[i];
  for (std::size_t i = 0; i < o.c.size(); ++i) out.c[i] -= o.c[i];
  out.normalize();
  return out;
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  UniPoly out;
  out.c.assign(c.size() + o.c.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    for (std::size_t j = 0; j < o.c.size(); ++j) out.c[i + j] += c[i] * o.c[j];
  }
  out.normalize();
  return out;
}

UniPoly& UniPoly::operator*=(const Rational& a) {
  if (a == 0) {
    c.clear();
    return *this;
  }
  for (auto& x : c) x *= a;
  return *this;
}

Rational UniPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly UniPoly::derivative() const {
  UniPoly out;
  for (std::size_t i = 1; i < c.size(); ++i) out.c.push_back(Rational(long(i)) * c[i]);
  out.normalize();
  return out;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
  if (d.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  UniPoly rem = *this;
  UniPoly quo;
  if (degree() >= d.degree()) quo.c.assign(degree() - d.degree() + 1, Rational(0));
  while (!rem.is_zero() && rem.degree() >= d.degree()) {
    int shift = rem.degree() - d.degree();
    Rational f = rem.c.back() / d.c.back();
    quo.c[shift] += f;
    for (int i = 0; i <= d.degree(); ++i) rem.c[i + shift] -= f * d.c[i];
    rem.normalize();
  }
  quo.normalize();
  return {quo, rem};
}

ExtGcd unipoly_ext_gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly r0 = a, r1 = b;
  UniPoly u0 = UniPoly::constant(1), u1 = UniPoly::zero();
  UniPoly v0 = UniPoly::zero(), v1 = UniPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r2] = r0.divmod(r1);
    UniPoly u2 = u0 - q * u1;
    UniPoly v2 = v0 - q * v1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    u0 = std::move(u1);
    u1 = std::move(u2);
    v0 = std::move(v1);
    v1 = std::move(v2);
  }
  if (!r0.is_zero()) {
    Rational lead = r0.c.back();
    Rational inv = 1 / lead;
    r0 *= inv;
    u0 *= inv;
    v0 *= inv;
  }
  return {r0, u0, v0};
}

}  // namespace ospq
