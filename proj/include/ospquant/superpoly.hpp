#pragma once

#include "ospquant/koszul.hpp"
#include "ospquant/signature.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ospq {

// One monomial of the supercommutative ring R[x^1..x^{p+q}] (x) L[th^1..th^{2r}]:
// exponents of the even variables plus an increasing subset of odd variables.
struct MonoKey {
  std::vector<int> even;
  std::uint64_t odd = 0;

  int even_degree() const {
    int s = 0;
    for (int e : even) s += e;
    return s;
  }
  int total_degree() const { return even_degree() + subset_size(odd); }
  int parity() const { return subset_size(odd) & 1; }

  bool operator==(const MonoKey&) const = default;
};

// Graded lexicographic: total even degree, then even exponents, then the
// odd subset. Canonical order for storage and serialization.
struct MonoLess {
  bool operator()(const MonoKey& a, const MonoKey& b) const {
    int da = a.even_degree(), db = b.even_degree();
    if (da != db) return da < db;
    if (a.even != b.even) return a.even < b.even;
    return subset_compare(a.odd, b.odd) < 0;
  }
};

class SuperPoly {
 public:
  using TermMap = std::map<MonoKey, Rational, MonoLess>;

  explicit SuperPoly(SpaceSignature sig) : sig_(sig) {}

  static SuperPoly zero(SpaceSignature sig) { return SuperPoly(sig); }
  static SuperPoly constant(SpaceSignature sig, Rational c);
  // i in 1..dims(): x^i for i <= p+q, th^{i-p-q} otherwise
  static SuperPoly variable(SpaceSignature sig, int i);
  static SuperPoly monomial(SpaceSignature sig, MonoKey k, Rational c);

  const SpaceSignature& sig() const { return sig_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_part() const;

  void add_term(const MonoKey& k, const Rational& c);

  SuperPoly& operator+=(const SuperPoly& o);
  SuperPoly& operator-=(const SuperPoly& o);
  SuperPoly& operator*=(const Rational& c);
  SuperPoly operator-() const;

  friend SuperPoly operator+(SuperPoly a, const SuperPoly& b) { return a += b; }
  friend SuperPoly operator-(SuperPoly a, const SuperPoly& b) { return a -= b; }
  friend SuperPoly operator*(SuperPoly a, const Rational& c) { return a *= c; }
  friend SuperPoly operator*(const Rational& c, SuperPoly a) { return a *= c; }
  friend SuperPoly operator*(const SuperPoly& a, const SuperPoly& b);

  bool operator==(const SuperPoly& o) const {
    return sig_ == o.sig_ && terms_ == o.terms_;
  }

  // Partial derivative along direction i (1..dims()). Odd directions use
  // the left derivative: th^i is anticommuted to the front, then removed.
  SuperPoly partial(int i) const;

  // 0 or 1 when homogeneous, nullopt when mixed; zero reports 0.
  std::optional<int> parity() const;
  std::pair<SuperPoly, SuperPoly> parity_parts() const;  // (even, odd)

  int even_degree() const;   // max over terms
  int total_degree() const;  // max over terms, odd factors count 1 each

  // Canonical text form, e.g. "3/4 * x1^2 th1 + 2 * th2". Zero is "0".
  std::string text() const;
  static SuperPoly parse(SpaceSignature sig, const std::string& s);

 private:
  SpaceSignature sig_;
  TermMap terms_;
};

}  // namespace ospq
