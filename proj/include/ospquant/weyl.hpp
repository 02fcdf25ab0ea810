#pragma once

#include "ospquant/symbol.hpp"
#include "ospquant/vectorfield.hpp"

#include <map>
#include <utility>

namespace ospq {

// Derivative multi-index: exponents of d_{x^1}..d_{x^{p+q}} plus an
// increasing subset of odd derivatives d_{th^1}..d_{th^{2r}} (exponents at
// most one). In a normal-form word the even derivatives come first and odd
// derivatives follow in increasing index order; the rightmost derivative
// acts first.
struct DerivKey {
  std::vector<int> even;
  std::uint64_t odd = 0;

  int order() const {
    int s = subset_size(odd);
    for (int e : even) s += e;
    return s;
  }
  int parity() const { return subset_size(odd) & 1; }

  bool operator==(const DerivKey&) const = default;
};

struct DerivLess {
  bool operator()(const DerivKey& a, const DerivKey& b) const {
    int da = 0, db = 0;
    for (int e : a.even) da += e;
    for (int e : b.even) db += e;
    if (da != db) return da < db;
    if (a.even != b.even) return a.even < b.even;
    return subset_compare(a.odd, b.odd) < 0;
  }
};

// Differential operator from lambda-densities to mu-densities in normal
// form: all coefficients to the left of all derivatives.
class DiffOperator {
 public:
  using TermMap = std::map<DerivKey, SuperPoly, DerivLess>;

  DiffOperator(SpaceSignature sig, Weights w);

  static DiffOperator multiplication(SpaceSignature sig, Weights w, SuperPoly f);
  static DiffOperator coordinate_derivative(SpaceSignature sig, Weights w, int i);

  const SpaceSignature& sig() const { return sig_; }
  const Weights& weights() const { return w_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int order() const;

  void add_term(const DerivKey& k, const SuperPoly& coeff);

  DiffOperator& operator+=(const DiffOperator& o);
  DiffOperator& operator-=(const DiffOperator& o);
  DiffOperator& operator*=(const Rational& c);
  DiffOperator operator-() const;
  friend DiffOperator operator+(DiffOperator a, const DiffOperator& b) { return a += b; }
  friend DiffOperator operator-(DiffOperator a, const DiffOperator& b) { return a -= b; }
  bool operator==(const DiffOperator& o) const;

  std::pair<DiffOperator, DiffOperator> parity_parts() const;  // (even, odd)

  SuperPoly apply(const SuperPoly& f) const;

 private:
  SpaceSignature sig_;
  Weights w_;
  TermMap terms_;
};

// Normal-ordered composition; the defining contract is
// dop_compose(a,b).apply(f) == a.apply(b.apply(f)).
DiffOperator dop_compose(const DiffOperator& a, const DiffOperator& b);

// L^lambda_X = X + lambda div(X) as a first-order operator in D_{lambda,lambda}.
DiffOperator lie_derivative_operator(const VectorField& x, const Rational& lambda);

// Total symbol: the coefficient at multi-index alpha goes to the fiber
// monomial with the same exponents over all p+q+2r generators.
SymbolSum sigma_aff(const DiffOperator& d);
DiffOperator q_aff(const SymbolSum& s);
DiffOperator q_aff(const SymbolField& s);

// Degree-k part of the total symbol; requires order(d) <= k.
SymbolField principal_symbol(const DiffOperator& d, int k);

// L^mu_X o D - (-1)^{X D} D o L^lambda_X
DiffOperator lie_dop(const VectorField& x, const DiffOperator& d);

// The operator-module action carried to symbols through the affine map.
SymbolSum curly_l(const VectorField& x, const SymbolSum& s);
SymbolSum curly_l(const VectorField& x, const SymbolField& s);

}  // namespace ospq
