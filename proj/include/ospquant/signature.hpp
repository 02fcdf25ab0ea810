#pragma once

#include "ospquant/rational.hpp"

namespace ospq {

// (p, q, r): p+q commuting coordinates x^1..x^{p+q} with metric signature
// (p, q), and 2r anticommuting coordinates th^1..th^{2r}. The unified index
// i runs over 1..p+q+2r, even directions first.
struct SpaceSignature {
  int p = 0;
  int q = 0;
  int r = 0;

  int even_count() const { return p + q; }
  int odd_count() const { return 2 * r; }
  int dims() const { return p + q + 2 * r; }
  int superdim() const { return p + q - 2 * r; }  // d

  // parity of unified direction index i in 1..dims()
  int parity(int i) const { return i <= p + q ? 0 : 1; }

  bool operator==(const SpaceSignature&) const = default;
};

// (lambda, delta) with mu = lambda + delta derived. Operators map
// lambda-densities to mu-densities; symbols carry the shift delta.
struct Weights {
  Rational lambda = 0;
  Rational delta = 0;

  Rational mu() const { return lambda + delta; }

  bool operator==(const Weights&) const = default;
};

inline int parity_sign(int parity) { return (parity & 1) ? -1 : 1; }

}  // namespace ospq
