#include "ospquant/ospalg.hpp"

#include <stdexcept>

namespace ospq {

namespace {

int space_dim(const SpaceSignature& sig, bool extended) {
  return sig.dims() + (extended ? 2 : 0);
}

void require_compatible(const GradedMatrix& a, const GradedMatrix& b) {
  if (!(a.sig() == b.sig()) || a.extended() != b.extended())
    throw std::invalid_argument("graded matrix space mismatch");
}

// Gaussian elimination; forms are small and nonsingular.
std::vector<Rational> solve_dense(std::vector<Rational> m, int n,
                                  std::vector<Rational> rhs) {
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int row = col; row < n; ++row)
      if (m[row * n + col] != 0) {
        piv = row;
        break;
      }
    if (piv < 0) throw std::invalid_argument("singular form");
    if (piv != col) {
      for (int k = 0; k < n; ++k) std::swap(m[piv * n + k], m[col * n + k]);
      std::swap(rhs[piv], rhs[col]);
    }
    Rational inv = m[col * n + col];
    for (int row = 0; row < n; ++row) {
      if (row == col || m[row * n + col] == 0) continue;
      Rational f = m[row * n + col] / inv;
      for (int k = col; k < n; ++k) m[row * n + k] -= f * m[col * n + k];
      rhs[row] -= f * rhs[col];
    }
  }
  std::vector<Rational> x(n);
  for (int i = 0; i < n; ++i) x[i] = rhs[i] / m[i * n + i];
  return x;
}

}  // namespace

GradedMatrix::GradedMatrix(SpaceSignature sig, bool extended, int parity)
    : sig_(sig),
      extended_(extended),
      parity_(parity & 1),
      dim_(space_dim(sig, extended)),
      a_(static_cast<std::size_t>(dim_) * dim_, Rational(0)) {}

GradedMatrix GradedMatrix::identity(SpaceSignature sig, bool extended) {
  GradedMatrix m(sig, extended, 0);
  for (int i = 0; i < m.dim_; ++i) m.a_[i * m.dim_ + i] = 1;
  return m;
}

int GradedMatrix::index_parity(int pos) const {
  if (extended_) return pos <= sig_.even_count() + 1 ? 0 : 1;
  return pos < sig_.even_count() ? 0 : 1;
}

void GradedMatrix::set(int row, int col, const Rational& v) {
  a_[row * dim_ + col] = v;
}

GradedMatrix& GradedMatrix::operator+=(const GradedMatrix& o) {
  require_compatible(*this, o);
  if (!o.is_zero() && !is_zero() && parity_ != o.parity_)
    throw std::invalid_argument("parity mismatch in matrix sum");
  if (is_zero()) parity_ = o.parity_;
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

GradedMatrix& GradedMatrix::operator-=(const GradedMatrix& o) {
  GradedMatrix neg = -o;
  return *this += neg;
}

GradedMatrix& GradedMatrix::operator*=(const Rational& c) {
  for (auto& x : a_) x *= c;
  return *this;
}

GradedMatrix GradedMatrix::operator-() const {
  GradedMatrix out = *this;
  for (auto& x : out.a_) x = -x;
  return out;
}

GradedMatrix operator*(const GradedMatrix& a, const GradedMatrix& b) {
  require_compatible(a, b);
  GradedMatrix out(a.sig_, a.extended_, (a.parity_ + b.parity_) & 1);
  const int n = a.dim_;
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const Rational& aik = a.a_[i * n + k];
      if (aik == 0) continue;
      for (int j = 0; j < n; ++j) {
        const Rational& bkj = b.a_[k * n + j];
        if (bkj == 0) continue;
        out.a_[i * n + j] += aik * bkj;
      }
    }
  return out;
}

GradedMatrix GradedMatrix::super_commutator(const GradedMatrix& o) const {
  GradedMatrix ab = (*this) * o;
  GradedMatrix ba = o * (*this);
  if ((parity_ & o.parity_) & 1) return ab += ba;
  return ab -= ba;
}

Rational GradedMatrix::supertrace() const {
  Rational s = 0;
  for (int i = 0; i < dim_; ++i) {
    if (index_parity(i))
      s -= at(i, i);
    else
      s += at(i, i);
  }
  return s;
}

bool GradedMatrix::is_zero() const {
  for (const auto& x : a_)
    if (x != 0) return false;
  return true;
}

bool GradedMatrix::parity_consistent() const {
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      if (at(i, j) != 0 && ((index_parity(i) + index_parity(j)) & 1) != parity_)
        return false;
  return true;
}

bool GradedMatrix::operator==(const GradedMatrix& o) const {
  return sig_ == o.sig_ && extended_ == o.extended_ && a_ == o.a_;
}

int ext_pos_o(const SpaceSignature&) { return 0; }

int ext_pos_oprime(const SpaceSignature& sig) { return sig.even_count() + 1; }

int ext_pos_of_small(const SpaceSignature& sig, int i) {
  return i <= sig.even_count() ? i : i + 1;
}

int ext_pi(const SpaceSignature& sig, int pos) {
  const int ne = sig.even_count();
  if (pos == 0) return ne + 1;
  if (pos == ne + 1) return 0;
  if (pos <= ne) return pos;
  int local = pos - ne - 2;  // 0-based odd index
  return local < sig.r ? pos + sig.r : pos - sig.r;
}

int ext_sign_s(const SpaceSignature& sig, int pos) {
  const int ne = sig.even_count();
  if (pos == 0 || pos == ne + 1) return -1;
  if (pos <= ne) return pos <= sig.p ? 1 : -1;
  int local = pos - ne - 2;
  return local < sig.r ? -1 : 1;
}

std::string ext_label(const SpaceSignature& sig, int pos) {
  const int ne = sig.even_count();
  if (pos == 0) return "o";
  if (pos == ne + 1) return "o'";
  return std::to_string(pos <= ne ? pos : pos - 1);
}

int ext_from_label(const SpaceSignature& sig, const std::string& label) {
  if (label == "o") return 0;
  if (label == "o'") return ext_pos_oprime(sig);
  int i = std::stoi(label);
  if (i < 1 || i > sig.dims()) throw std::invalid_argument("bad index label");
  return ext_pos_of_small(sig, i);
}

FormPair build_forms(SpaceSignature sig) {
  const int ne = sig.even_count();
  GradedMatrix G(sig, true, 0);
  G.set(0, ne + 1, -1);
  G.set(ne + 1, 0, -1);
  for (int i = 1; i <= ne; ++i) G.set(i, i, i <= sig.p ? 1 : -1);
  for (int a = 0; a < sig.r; ++a) {
    G.set(ne + 2 + a, ne + 2 + a + sig.r, 1);
    G.set(ne + 2 + a + sig.r, ne + 2 + a, -1);
  }
  GradedMatrix G0(sig, false, 0);
  for (int i = 0; i < ne; ++i) G0.set(i, i, i < sig.p ? 1 : -1);
  for (int a = 0; a < sig.r; ++a) {
    G0.set(ne + a, ne + a + sig.r, 1);
    G0.set(ne + a + sig.r, ne + a, -1);
  }
  return {G, G0};
}

Rational form_eval(const GradedMatrix& form, const GVec& U, const GVec& V) {
  const int n = form.dim();
  if (static_cast<int>(U.c.size()) != n || static_cast<int>(V.c.size()) != n)
    throw std::invalid_argument("vector size mismatch");
  Rational s = 0;
  for (int a = 0; a < n; ++a) {
    if (V.c[a] == 0) continue;
    for (int b = 0; b < n; ++b) {
      if (U.c[b] == 0 || form.at(a, b) == 0) continue;
      s += V.c[a] * form.at(a, b) * U.c[b];
    }
  }
  return s;
}

GVec flat(const GradedMatrix& form, const GVec& v) {
  const int n = form.dim();
  GVec out;
  out.parity = v.parity;
  out.c.assign(n, Rational(0));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (form.at(a, b) != 0 && v.c[b] != 0) out.c[a] += form.at(a, b) * v.c[b];
  return out;
}

GVec sharp(const GradedMatrix& form, const GVec& xi) {
  const int n = form.dim();
  std::vector<Rational> m(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i * n + j] = form.at(i, j);
  GVec out;
  out.parity = xi.parity;
  out.c = solve_dense(std::move(m), n, xi.c);
  return out;
}

GradedMatrix generator_O(const GradedMatrix& form, int i, int j) {
  const int n = form.dim();
  const int pi = form.index_parity(i), pj = form.index_parity(j);
  GradedMatrix out(form.sig(), form.extended(), (pi + pj) & 1);
  out.set(i, j, 1);
  GVec ej;  // coordinate covector eps^j
  ej.parity = pj;
  ej.c.assign(n, Rational(0));
  ej.c[j] = 1;
  GVec w = sharp(form, ej);
  GVec ei;
  ei.parity = pi;
  ei.c.assign(n, Rational(0));
  ei.c[i] = 1;
  GVec rho = flat(form, ei);
  const int sign = ((pi & pj) & 1) ? -1 : 1;
  for (int a = 0; a < n; ++a) {
    if (w.c[a] == 0) continue;
    for (int b = 0; b < n; ++b) {
      if (rho.c[b] == 0) continue;
      Rational v = out.at(a, b);
      v -= Rational(sign) * w.c[a] * rho.c[b];
      out.set(a, b, v);
    }
  }
  return out;
}

bool check_osp(const GradedMatrix& A, const GradedMatrix& form) {
  const int n = form.dim();
  if (A.dim() != n) throw std::invalid_argument("matrix/form space mismatch");
  // omega(A e_b, e_c) = (G A)[c,b]; omega(e_b, A e_c) = (A^t G)[c,b]
  for (int c = 0; c < n; ++c)
    for (int b = 0; b < n; ++b) {
      Rational lhs = 0;
      for (int a = 0; a < n; ++a) {
        if (form.at(c, a) != 0 && A.at(a, b) != 0) lhs += form.at(c, a) * A.at(a, b);
        if (A.at(a, c) != 0 && form.at(a, b) != 0) {
          Rational t = A.at(a, c) * form.at(a, b);
          if ((A.parity() & form.index_parity(b)) & 1)
            lhs -= t;
          else
            lhs += t;
        }
      }
      if (lhs != 0) return false;
    }
  return true;
}

PhiDecomposition::PhiDecomposition(SpaceSignature s, int par)
    : sig(s), parity(par & 1), b0(s, false, par & 1) {
  v.parity = parity;
  v.c.assign(s.dims(), Rational(0));
  xi.parity = parity;
  xi.c.assign(s.dims(), Rational(0));
}

GradedMatrix PhiDecomposition::g0_matrix() const {
  GradedMatrix m = b0;
  if (a1 != 0) {
    GradedMatrix id = GradedMatrix::identity(sig, false);
    id *= -a1;
    // -a1 * Id has even parity; b0 must be even too when a1 != 0
    m += id;
  }
  return m;
}

PhiDecomposition decompose_phi(const GradedMatrix& A) {
  if (!A.extended()) throw std::invalid_argument("decompose_phi needs the extended space");
  FormPair forms = build_forms(A.sig());
  if (!check_osp(A, forms.G))
    throw std::invalid_argument("decompose_phi: matrix does not preserve the form");
  const SpaceSignature sig = A.sig();
  const int n = sig.dims();
  PhiDecomposition d(sig, A.parity());
  d.a1 = A.at(ext_pos_oprime(sig), ext_pos_oprime(sig));
  for (int i = 1; i <= n; ++i) {
    d.v.c[i - 1] = A.at(ext_pos_of_small(sig, i), ext_pos_oprime(sig));
    d.xi.c[i - 1] = A.at(ext_pos_oprime(sig), ext_pos_of_small(sig, i));
  }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      d.b0.set(i - 1, j - 1, A.at(ext_pos_of_small(sig, i), ext_pos_of_small(sig, j)));
  if (!(compose_phi(d) == A))
    throw std::invalid_argument("decompose_phi: matrix is not in the block form");
  return d;
}

GradedMatrix compose_phi(const PhiDecomposition& d) {
  const SpaceSignature sig = d.sig;
  const int n = sig.dims();
  const int ne = sig.even_count();
  const int o = ext_pos_o(sig), op = ext_pos_oprime(sig);
  GradedMatrix A(sig, true, d.parity);
  A.set(o, o, -d.a1);
  A.set(op, op, d.a1);
  for (int i = 1; i <= n; ++i) {
    A.set(ext_pos_of_small(sig, i), op, d.v.c[i - 1]);
    A.set(op, ext_pos_of_small(sig, i), d.xi.c[i - 1]);
  }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      A.set(ext_pos_of_small(sig, i), ext_pos_of_small(sig, j), d.b0.at(i - 1, j - 1));
  // couplings through the form: row o carries v^flat, column o carries xi^sharp
  auto jmat = [&](int a, int b) -> int {  // local symplectic block, 0-based
    if (b == a + sig.r) return 1;
    if (a == b + sig.r) return -1;
    return 0;
  };
  for (int j = 1; j <= ne; ++j)
    A.set(o, ext_pos_of_small(sig, j), (j <= sig.p ? d.v.c[j - 1] : -d.v.c[j - 1]));
  for (int b = 0; b < 2 * sig.r; ++b) {
    Rational s = 0;
    for (int a = 0; a < 2 * sig.r; ++a)
      if (int je = jmat(a, b); je != 0) s -= Rational(je) * d.v.c[ne + a];
    A.set(o, ext_pos_of_small(sig, ne + 1 + b), s);
  }
  for (int i = 1; i <= ne; ++i)
    A.set(ext_pos_of_small(sig, i), o, (i <= sig.p ? d.xi.c[i - 1] : -d.xi.c[i - 1]));
  for (int a = 0; a < 2 * sig.r; ++a) {
    Rational s = 0;
    for (int b = 0; b < 2 * sig.r; ++b)
      if (int je = jmat(a, b); je != 0) s -= Rational(je) * d.xi.c[ne + b];
    A.set(ext_pos_of_small(sig, ne + 1 + a), o, s);
  }
  return A;
}

GradedMatrix euler_element(SpaceSignature sig) {
  PhiDecomposition d(sig, 0);
  d.a1 = 1;
  return compose_phi(d);
}

Rational killing(const GradedMatrix& A, const GradedMatrix& B) {
  require_compatible(A, B);
  return -(A * B).supertrace() / 2;
}

std::vector<DualBasisPair> dual_basis(SpaceSignature sig) {
  FormPair forms = build_forms(sig);
  const int N = sig.dims() + 2;
  std::vector<DualBasisPair> out;
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) {
      const int pi_j = ext_pi(sig, j), pi_i = ext_pi(sig, i);
      if (j == pi_i && forms.G.index_parity(i) == 0) continue;  // O_i^{pi(i)} = 0
      // one representative per orbit {(i,j), (pi(j),pi(i))}
      if (std::pair(pi_j, pi_i) < std::pair(i, j)) continue;
      GradedMatrix basis = generator_O(forms.G, i, j);
      GradedMatrix dual = generator_O(forms.G, j, i);
      Rational f(forms.G.index_parity(i) ? 1 : -1, i == pi_j ? 2 : 1);
      dual *= f;
      out.push_back({i, j, std::move(basis), std::move(dual)});
    }
  }
  return out;
}

int osp_dimension(SpaceSignature sig) {
  const int t = sig.dims() + 2;
  return t * (t - 1) / 2 + 2 * sig.r;
}

}  // namespace ospq
