#pragma once

#include "ospquant/ospalg.hpp"
#include "ospquant/symbol.hpp"
#include "ospquant/superpoly.hpp"

#include <string>
#include <vector>

namespace ospq {

// Homogeneous super vector field X = sum_i X^i d_{y^i}: component i carries
// parity parity(X) + parity(i).
class VectorField {
 public:
  VectorField(SpaceSignature sig, int parity);
  VectorField(SpaceSignature sig, int parity, std::vector<SuperPoly> comps);

  // d/dy^i
  static VectorField coordinate(SpaceSignature sig, int i);

  const SpaceSignature& sig() const { return sig_; }
  int parity() const { return parity_; }
  const SuperPoly& component(int i) const { return comp_[i - 1]; }  // 1..dims()
  void set_component(int i, SuperPoly p);
  bool is_zero() const;
  bool parity_consistent() const;

  SuperPoly apply(const SuperPoly& f) const;  // X(f)
  SuperPoly divergence() const;

  VectorField& operator+=(const VectorField& o);
  VectorField& operator*=(const Rational& c);
  friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
  VectorField operator-() const;
  bool operator==(const VectorField& o) const;

  // multiplication by a function from the left: (f X)^i = f * X^i
  friend VectorField operator*(const SuperPoly& f, const VectorField& X);

 private:
  SpaceSignature sig_;
  int parity_;
  std::vector<SuperPoly> comp_;
};

// super bracket, first-order part of X o Y - (-1)^{XY} Y o X
VectorField vf_bracket(const VectorField& X, const VectorField& Y);

struct DensityElement {
  SuperPoly f;
  Rational lambda;
};

// L^lambda_X f = X(f) + lambda div(X) f
DensityElement lie_density(const VectorField& X, const DensityElement& d);

// Lie derivative of a weighted symmetric tensor field along a homogeneous
// field: transport term plus the Jacobian acting through the fiber
// representation and the weight factor.
SymbolField lie_symbol(const VectorField& X, const SymbolField& S);
SymbolSum lie_symbol(const VectorField& X, const SymbolSum& S);

// The vector-field realization of the decomposed algebra.
VectorField realize_gminus(SpaceSignature sig, const GVec& v);
VectorField realize_gzero(SpaceSignature sig, const GradedMatrix& a);  // standard-space matrix
VectorField realize_gone(SpaceSignature sig, const GVec& xi);
VectorField realize(const PhiDecomposition& d);

// The quadric entering the g_1 branch.
SuperPoly quadric_f0(SpaceSignature sig);

// One generator of the realized algebra, with its algebra-side data.
struct Generator {
  std::string name;
  int grade;  // -1, 0 (h0 or Euler), +1
  PhiDecomposition phi;
  VectorField field;
};

// The standard generating family: all e_i, the nonzero small O_i^j, the
// Euler element, all eps^i.
std::vector<Generator> osp_generators(SpaceSignature sig);

}  // namespace ospq
