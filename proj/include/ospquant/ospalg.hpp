#pragma once

#include "ospquant/signature.hpp"

#include <string>
#include <vector>

namespace ospq {

// Homogeneous column vector / row covector over the standard space
// R^{p+q|2r} or the extended space R^{p+q+2|2r}; coordinates only, the
// space is fixed by the context it is used in.
struct GVec {
  std::vector<Rational> c;
  int parity = 0;

  bool is_zero() const {
    for (const auto& x : c)
      if (x != 0) return false;
    return true;
  }
};

// Square graded matrix over R^{p+q|2r} (standard) or R^{p+q+2|2r}
// (extended). Extended index layout: [o | 1..p+q | o' | odd 1..2r].
// Homogeneous: an entry (i,j) may be nonzero only when
// parity(i)+parity(j) = parity (mod 2); osp membership is a predicate,
// not a constraint, so arbitrary gl matrices can be represented.
class GradedMatrix {
 public:
  GradedMatrix(SpaceSignature sig, bool extended, int parity);

  static GradedMatrix identity(SpaceSignature sig, bool extended);

  const SpaceSignature& sig() const { return sig_; }
  bool extended() const { return extended_; }
  int parity() const { return parity_; }
  int dim() const { return dim_; }
  int index_parity(int pos) const;

  const Rational& at(int row, int col) const { return a_[row * dim_ + col]; }
  void set(int row, int col, const Rational& v);

  GradedMatrix& operator+=(const GradedMatrix& o);
  GradedMatrix& operator-=(const GradedMatrix& o);
  GradedMatrix& operator*=(const Rational& c);
  GradedMatrix operator-() const;
  friend GradedMatrix operator+(GradedMatrix a, const GradedMatrix& b) { return a += b; }
  friend GradedMatrix operator-(GradedMatrix a, const GradedMatrix& b) { return a -= b; }
  friend GradedMatrix operator*(const Rational& c, GradedMatrix a) { return a *= c; }
  friend GradedMatrix operator*(const GradedMatrix& a, const GradedMatrix& b);

  GradedMatrix super_commutator(const GradedMatrix& o) const;
  Rational supertrace() const;

  bool is_zero() const;
  bool parity_consistent() const;
  bool operator==(const GradedMatrix& o) const;

 private:
  SpaceSignature sig_;
  bool extended_;
  int parity_;
  int dim_;
  std::vector<Rational> a_;
};

// Extended-layout helpers. Positions are 0-based; pos_o() is always 0.
int ext_pos_o(const SpaceSignature& sig);
int ext_pos_oprime(const SpaceSignature& sig);
int ext_pos_of_small(const SpaceSignature& sig, int i);  // i in 1..dims()
// The permutation pi of the extended index set: exchanges o and o', fixes
// the even block, exchanges the two halves of the odd block.
int ext_pi(const SpaceSignature& sig, int pos);
// The sign function s: -1 on {o, o'}, the negative even block and the
// first half of the odd block; +1 elsewhere.
int ext_sign_s(const SpaceSignature& sig, int pos);
std::string ext_label(const SpaceSignature& sig, int pos);  // "o", "o'", "1"..
int ext_from_label(const SpaceSignature& sig, const std::string& label);

// The invariant forms: G on the extended space (antidiagonal -1 coupling
// o and o', Id_{p,q} in the middle, symplectic J on the odd block) and
// G0 = diag(Id_{p,q}, J) on the standard space.
struct FormPair {
  GradedMatrix G;   // extended
  GradedMatrix G0;  // standard
};
FormPair build_forms(SpaceSignature sig);

// omega(U, V) = V^t * form * U
Rational form_eval(const GradedMatrix& form, const GVec& U, const GVec& V);

// flat(v) = omega(v, .) as a row covector; sharp is its inverse.
GVec flat(const GradedMatrix& form, const GVec& v);
GVec sharp(const GradedMatrix& form, const GVec& xi);

// e_i (x) eps^j  -  (-1)^{ij} (eps^j)^sharp (x) (e_i)^flat, over the space
// of the given form. Positions are 0-based in that space's layout.
GradedMatrix generator_O(const GradedMatrix& form, int i, int j);

// omega(AU,V) + (-1)^{AU} omega(U,AV) = 0 for all basis pairs U, V.
bool check_osp(const GradedMatrix& A, const GradedMatrix& form);

// A = Phi^{-1}(v, b0 - a1*Id, xi): v is the g_{-1} part, xi the g_1 part,
// b0 in osp(p,q|2r), and a1 the coefficient of the Euler element -Id.
struct PhiDecomposition {
  SpaceSignature sig;
  int parity = 0;
  GVec v;           // column over the standard space
  GradedMatrix b0;  // standard-space matrix
  Rational a1 = 0;
  GVec xi;          // row over the standard space

  PhiDecomposition(SpaceSignature s, int par);
  // g0 part as a standard-space matrix: b0 - a1 * Id
  GradedMatrix g0_matrix() const;
};

PhiDecomposition decompose_phi(const GradedMatrix& A);
GradedMatrix compose_phi(const PhiDecomposition& d);

// The Euler element as an extended matrix (Phi maps it to -Id).
GradedMatrix euler_element(SpaceSignature sig);

// K(A, B) = -1/2 str(AB)
Rational killing(const GradedMatrix& A, const GradedMatrix& B);

struct DualBasisPair {
  int i, j;             // positions in the extended index set
  GradedMatrix basis;   // O_i^j
  GradedMatrix dual;    // O_i^{j*}
};

// Canonical Killing-dual basis of osp(p+1,q+1|2r): one representative per
// orbit {(i,j), (pi(j),pi(i))}, lexicographically minimal, zero generators
// excluded.
std::vector<DualBasisPair> dual_basis(SpaceSignature sig);

int osp_dimension(SpaceSignature sig);

}  // namespace ospq
