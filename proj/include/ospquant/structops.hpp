#pragma once

#include "ospquant/weyl.hpp"

#include <functional>
#include <string>
#include <vector>

namespace ospq {

// Interior product with a homogeneous covector; order zero, parity of xi.
SymbolField interior(const GVec& xi, const SymbolField& s);

// Symmetric multiplication by a homogeneous vector from the left.
SymbolField vee_vector(const GVec& v, const SymbolField& s);

// The metric trace T (primary route: the closed double sum over pairs of
// word letters) and its definition as a sum of double contractions; both
// must agree.
SymbolField op_t(const SymbolField& s);
SymbolField op_t_contraction(const SymbolField& s);

// R = sum_j e_j v (eps^j)^sharp v .
SymbolField op_r(const SymbolField& s);

SymbolField sym_div(const SymbolField& s);
SymbolField sym_grad(const SymbolField& s);
SymbolField sym_laplace(const SymbolField& s);
SymbolField op_g0(const SymbolField& s);      // G o T
SymbolField op_delta0(const SymbolField& s);  // Delta o T

// gamma(h) as the defect between the operator-module action and the tensor
// action, computed through the affine map. Defined for any generator.
SymbolSum gamma_def(const Generator& h, const SymbolField& s);

// gamma(h) = -(lambda d + k - 1) i(h) + 1/2 h^sharp v T on degree-k symbols,
// for h in g_1.
SymbolField gamma_closed(const GVec& h, const SymbolField& s);

// N = -2 sum_i (-1)^i gamma(eps^i) L_{X^{e_i}}
SymbolField op_n(const SymbolField& s);

enum class CasimirMode { DualBasis, Decomposed, ClosedForm };

// Casimir of the tensor action. DualBasis sums beta(u*)beta(u) over the
// Killing-dual basis; Decomposed uses the graded expansion; ClosedForm is
// the scalar plus R o T.
SymbolField casimir_c(const SymbolField& s, CasimirMode mode = CasimirMode::ClosedForm);

// Casimir of the operator-module action, carried to symbols through the
// affine map. Independent of casimir_c by construction.
SymbolSum casimir_curly(const SymbolSum& s);
SymbolSum casimir_curly(const SymbolField& s);

// Named operator with its fiber-degree shift, for suite-level checks.
struct OperatorHandle {
  std::string name;
  int degree_shift;
  std::function<SymbolField(const SymbolField&)> apply;
};
std::vector<OperatorHandle> operator_handles(SpaceSignature sig);

// Exact dense rational matrix, row-major.
struct RatMat {
  int rows = 0, cols = 0;
  std::vector<Rational> a;

  static RatMat zero(int r, int c);
  static RatMat identity(int n);
  const Rational& at(int r, int c) const { return a[r * cols + c]; }
  Rational& at(int r, int c) { return a[r * cols + c]; }
  bool is_zero() const;
  RatMat operator*(const RatMat& o) const;
  RatMat& operator+=(const RatMat& o);
  RatMat& operator*=(const Rational& c);
  bool operator==(const RatMat& o) const;
};

// Matrix of a constant-coefficient operator on the degree-k fiber basis;
// the operator must send constant-coefficient symbols of degree k to
// constant-coefficient symbols of degree k + shift.
RatMat matrix_on_fiber(SpaceSignature sig, Weights w, int k, int shift,
                       const std::function<SymbolField(const SymbolField&)>& op);

// CSV dump of a fiber matrix with basis labels.
std::string fiber_matrix_csv(SpaceSignature sig, int k, int shift, const RatMat& m);

}  // namespace ospq
