#pragma once

#include "ospquant/fiber.hpp"
#include "ospquant/superpoly.hpp"

#include <map>
#include <optional>

namespace ospq {

// Element of S^k_delta: polynomial-coefficient supersymmetric fiber tensors
// with weight metadata. Every stored monomial has fiber degree k; a term's
// parity is the coefficient parity plus the fiber parity.
class SymbolField {
 public:
  using TermMap = std::map<FiberKey, SuperPoly, FiberLess>;

  SymbolField(SpaceSignature sig, Weights w, int degree);

  static SymbolField monomial(SpaceSignature sig, Weights w, FiberKey key,
                              SuperPoly coeff);

  const SpaceSignature& sig() const { return sig_; }
  const Weights& weights() const { return w_; }
  int degree() const { return degree_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const FiberKey& key, const SuperPoly& coeff);

  SymbolField& operator+=(const SymbolField& o);
  SymbolField& operator-=(const SymbolField& o);
  SymbolField& operator*=(const Rational& c);
  SymbolField operator-() const;
  friend SymbolField operator+(SymbolField a, const SymbolField& b) { return a += b; }
  friend SymbolField operator-(SymbolField a, const SymbolField& b) { return a -= b; }
  friend SymbolField operator*(const Rational& c, SymbolField a) { return a *= c; }
  bool operator==(const SymbolField& o) const;

  // 0/1 when all terms share total parity, nullopt when mixed
  std::optional<int> parity() const;

  // derivative of the coefficients along direction i
  SymbolField coeff_partial(int i) const;

  // true when every coefficient is a constant polynomial
  bool constant_coefficients() const;

  // l1 mass of all coefficients; zero iff the symbol is zero
  Rational coeff_mass() const;

  int max_coeff_even_degree() const;

 private:
  SpaceSignature sig_;
  Weights w_;
  int degree_;
  TermMap terms_;
};

// Graded sum of symbol fields across fiber degrees (a quantization lift, a
// total symbol of an operator).
class SymbolSum {
 public:
  SymbolSum(SpaceSignature sig, Weights w);
  explicit SymbolSum(SymbolField part);

  const SpaceSignature& sig() const { return sig_; }
  const Weights& weights() const { return w_; }
  const std::map<int, SymbolField>& parts() const { return parts_; }
  bool is_zero() const;

  // degree component (zero field when absent)
  SymbolField part(int k) const;
  int top_degree() const;  // -1 when zero

  void add_part(const SymbolField& s);
  SymbolSum& operator+=(const SymbolSum& o);
  SymbolSum& operator-=(const SymbolSum& o);
  SymbolSum& operator*=(const Rational& c);
  friend SymbolSum operator+(SymbolSum a, const SymbolSum& b) { return a += b; }
  friend SymbolSum operator-(SymbolSum a, const SymbolSum& b) { return a -= b; }
  bool operator==(const SymbolSum& o) const;

 private:
  SpaceSignature sig_;
  Weights w_;
  std::map<int, SymbolField> parts_;
};

}  // namespace ospq
