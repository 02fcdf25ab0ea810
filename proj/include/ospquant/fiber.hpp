#pragma once

#include "ospquant/koszul.hpp"
#include "ospquant/signature.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ospq {

// One monomial of the supersymmetric algebra over R^{p+q|2r}: exponents of
// the even fiber generators e_1..e_{p+q} plus an increasing subset of odd
// generators e_{p+q+1}..e_{p+q+2r} (odd generators square to zero under
// the symmetric product). Canonical word order: evens first, odds ascending.
struct FiberKey {
  std::vector<int> even;
  std::uint64_t odd = 0;

  int degree() const {
    int s = subset_size(odd);
    for (int e : even) s += e;
    return s;
  }
  int parity() const { return subset_size(odd) & 1; }

  bool operator==(const FiberKey&) const = default;
};

struct FiberLess {
  bool operator()(const FiberKey& a, const FiberKey& b) const {
    int da = 0, db = 0;
    for (int e : a.even) da += e;
    for (int e : b.even) db += e;
    if (da != db) return da < db;
    if (a.even != b.even) return a.even < b.even;
    return subset_compare(a.odd, b.odd) < 0;
  }
};

// Sign-normalizes a word of fiber generators (unified indices 1..dims())
// into a canonical monomial; nullopt when an odd generator repeats.
std::optional<std::pair<FiberKey, int>> fiber_normalize(SpaceSignature sig,
                                                        const std::vector<int>& word);

// Symmetric multiplication e_j v M from the left; nullopt when it vanishes.
std::optional<std::pair<FiberKey, int>> fiber_vee(SpaceSignature sig, int j,
                                                  const FiberKey& m);

// Contraction with the coordinate covector eps^j (one term per occurrence,
// Koszul prefix signs included). Result coefficient is integral.
std::vector<std::pair<FiberKey, int>> fiber_contract(SpaceSignature sig, int j,
                                                     const FiberKey& m);

// rho(e_j^i) on a monomial: substitutes one occurrence of generator i by
// generator j with the tensor-representation prefix signs.
std::vector<std::pair<FiberKey, int>> fiber_rho(SpaceSignature sig, int out_j,
                                                int in_i, const FiberKey& m);

// e.g. "e1^2 e4" ; degree-zero monomial prints as "1"
std::string fiber_label(const FiberKey& m);

// All degree-k monomials in canonical order.
std::vector<FiberKey> fiber_basis(SpaceSignature sig, int k);

}  // namespace ospq
