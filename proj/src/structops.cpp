#include "ospquant/structops.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace ospq {

namespace {

struct SigKey {
  int p, q, r;
  bool operator<(const SigKey& o) const {
    return std::tuple(p, q, r) < std::tuple(o.p, o.q, o.r);
  }
};

// Immutable per-signature data shared by the structural operators.
struct SigContext {
  SpaceSignature sig;
  FormPair forms;
  std::vector<GVec> eps;        // coordinate covectors
  std::vector<GVec> sharp_eps;  // (eps^j)^sharp
  std::vector<GVec> flat_e;     // e_j^flat
  std::vector<VectorField> e_fields;
  std::vector<VectorField> eps_fields;
  VectorField euler_field;
  // small-space generators O_i^j realized, 1-based [i][j]; zero fields kept
  std::vector<std::vector<VectorField>> o_fields;
  std::vector<std::pair<VectorField, VectorField>> dual_fields;  // (u, u*)

  explicit SigContext(SpaceSignature s)
      : sig(s), forms(build_forms(s)), euler_field(s, 0) {
    const int n = sig.dims();
    for (int j = 1; j <= n; ++j) {
      GVec e;
      e.parity = sig.parity(j);
      e.c.assign(n, Rational(0));
      e.c[j - 1] = 1;
      eps.push_back(e);
      sharp_eps.push_back(sharp(forms.G0, e));
      flat_e.push_back(flat(forms.G0, e));
      e_fields.push_back(realize_gminus(sig, e));
      eps_fields.push_back(realize_gone(sig, e));
    }
    GradedMatrix minus_id = GradedMatrix::identity(sig, false);
    minus_id *= Rational(-1);
    euler_field = realize_gzero(sig, minus_id);
    o_fields.assign(n + 1, {});
    for (int i = 1; i <= n; ++i) {
      o_fields[i].reserve(n + 1);
      o_fields[i].push_back(VectorField(sig, 0));
      for (int j = 1; j <= n; ++j) {
        GradedMatrix o = generator_O(forms.G0, i - 1, j - 1);
        o_fields[i].push_back(realize_gzero(sig, o));
      }
    }
    for (const auto& pair : dual_basis(sig)) {
      VectorField u = realize(decompose_phi(pair.basis));
      VectorField us = realize(decompose_phi(pair.dual));
      dual_fields.emplace_back(std::move(u), std::move(us));
    }
  }
};

const SigContext& sig_context(SpaceSignature sig) {
  static std::mutex mu;
  static std::map<SigKey, std::unique_ptr<SigContext>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(SigKey{sig.p, sig.q, sig.r}, nullptr);
  if (inserted) it->second = std::make_unique<SigContext>(sig);
  return *it->second;
}

}  // namespace

SymbolField interior(const GVec& xi, const SymbolField& s) {
  const SpaceSignature sig = s.sig();
  if (static_cast<int>(xi.c.size()) != sig.dims())
    throw std::invalid_argument("covector size mismatch");
  const int k = s.degree();
  SymbolField out(sig, s.weights(), k > 0 ? k - 1 : 0);
  if (k == 0) return out;
  for (const auto& [m, f] : s.terms()) {
    auto [fe, fo] = f.parity_parts();
    for (int j = 1; j <= sig.dims(); ++j) {
      if (xi.c[j - 1] == 0) continue;
      for (const auto& [m2, c] : fiber_contract(sig, j, m)) {
        // order-zero operator of parity parity(j): Koszul sign on odd f
        SuperPoly g = fe;
        if (sig.parity(j))
          g -= fo;
        else
          g += fo;
        out.add_term(m2, (Rational(c) * xi.c[j - 1]) * g);
      }
    }
  }
  return out;
}

SymbolField vee_vector(const GVec& v, const SymbolField& s) {
  const SpaceSignature sig = s.sig();
  if (static_cast<int>(v.c.size()) != sig.dims())
    throw std::invalid_argument("vector size mismatch");
  SymbolField out(sig, s.weights(), s.degree() + 1);
  for (const auto& [m, f] : s.terms()) {
    auto [fe, fo] = f.parity_parts();
    for (int j = 1; j <= sig.dims(); ++j) {
      if (v.c[j - 1] == 0) continue;
      auto placed = fiber_vee(sig, j, m);
      if (!placed) continue;
      SuperPoly g = fe;
      if (sig.parity(j))
        g -= fo;
      else
        g += fo;
      out.add_term(placed->first, (Rational(placed->second) * v.c[j - 1]) * g);
    }
  }
  return out;
}

SymbolField op_t(const SymbolField& s) {
  const SpaceSignature sig = s.sig();
  const SigContext& ctx = sig_context(sig);
  const int k = s.degree();
  SymbolField out(sig, s.weights(), k >= 2 ? k - 2 : 0);
  if (k < 2) return out;
  const int ne = sig.even_count();
  for (const auto& [m, f] : s.terms()) {
    // pairs of even letters (the even block of the form is diagonal, but
    // the general double sum is kept)
    for (int i = 1; i <= ne; ++i) {
      if (m.even[i - 1] >= 2) {
        const Rational& w = ctx.forms.G0.at(i - 1, i - 1);
        if (w != 0) {
          FiberKey m2 = m;
          m2.even[i - 1] -= 2;
          Rational pairs(static_cast<long>(m.even[i - 1]) * (m.even[i - 1] - 1) / 2);
          out.add_term(m2, (Rational(2) * pairs * w) * f);
        }
      }
      for (int j = i + 1; j <= ne; ++j) {
        if (m.even[i - 1] == 0 || m.even[j - 1] == 0) continue;
        const Rational& w = ctx.forms.G0.at(j - 1, i - 1);
        if (w == 0) continue;
        FiberKey m2 = m;
        m2.even[i - 1] -= 1;
        m2.even[j - 1] -= 1;
        Rational pairs(static_cast<long>(m.even[i - 1]) * m.even[j - 1]);
        out.add_term(m2, (Rational(2) * pairs * w) * f);
      }
    }
    // pairs of odd letters: the sign counts the letters strictly between
    for (int bi = 0; bi < sig.odd_count(); ++bi) {
      if (!subset_has(m.odd, bi)) continue;
      for (int bj = bi + 1; bj < sig.odd_count(); ++bj) {
        if (!subset_has(m.odd, bj)) continue;
        const Rational& w = ctx.forms.G0.at(ne + bj, ne + bi);
        if (w == 0) continue;
        std::uint64_t between = m.odd & (((std::uint64_t(1) << bj) - 1) ^
                                         ((std::uint64_t(1) << (bi + 1)) - 1));
        int sign = (subset_size(between) & 1) ? -1 : 1;
        FiberKey m2 = m;
        m2.odd &= ~(std::uint64_t(1) << bi);
        m2.odd &= ~(std::uint64_t(1) << bj);
        out.add_term(m2, (Rational(2 * sign) * w) * f);
      }
    }
  }
  return out;
}

SymbolField op_t_contraction(const SymbolField& s) {
  const SigContext& ctx = sig_context(s.sig());
  const int k = s.degree();
  SymbolField out(s.sig(), s.weights(), k >= 2 ? k - 2 : 0);
  if (k < 2) return out;
  for (int j = 1; j <= s.sig().dims(); ++j)
    out += interior(ctx.flat_e[j - 1], interior(ctx.eps[j - 1], s));
  return out;
}

SymbolField op_r(const SymbolField& s) {
  const SigContext& ctx = sig_context(s.sig());
  SymbolField out(s.sig(), s.weights(), s.degree() + 2);
  for (int j = 1; j <= s.sig().dims(); ++j)
    out += vee_vector(ctx.eps[j - 1], vee_vector(ctx.sharp_eps[j - 1], s));
  return out;
}

SymbolField sym_div(const SymbolField& s) {
  const SigContext& ctx = sig_context(s.sig());
  const int k = s.degree();
  SymbolField out(s.sig(), s.weights(), k > 0 ? k - 1 : 0);
  if (k == 0) return out;
  for (int j = 1; j <= s.sig().dims(); ++j) {
    SymbolField d = interior(ctx.eps[j - 1], s.coeff_partial(j));
    if (s.sig().parity(j))
      out -= d;
    else
      out += d;
  }
  return out;
}

SymbolField sym_grad(const SymbolField& s) {
  const SigContext& ctx = sig_context(s.sig());
  SymbolField out(s.sig(), s.weights(), s.degree() + 1);
  for (int j = 1; j <= s.sig().dims(); ++j) {
    SymbolField d = vee_vector(ctx.sharp_eps[j - 1], s.coeff_partial(j));
    if (s.sig().parity(j))
      out -= d;
    else
      out += d;
  }
  return out;
}

SymbolField sym_laplace(const SymbolField& s) {
  const SigContext& ctx = sig_context(s.sig());
  SymbolField out(s.sig(), s.weights(), s.degree());
  for (int i = 1; i <= s.sig().dims(); ++i)
    for (int j = 1; j <= s.sig().dims(); ++j) {
      const Rational& w = ctx.forms.G0.at(j - 1, i - 1);  // omega0(e_i, e_j)
      if (w == 0) continue;
      SymbolField d = s.coeff_partial(i).coeff_partial(j);
      d *= w;
      out += d;
    }
  return out;
}

SymbolField op_g0(const SymbolField& s) { return sym_grad(op_t(s)); }

SymbolField op_delta0(const SymbolField& s) { return sym_laplace(op_t(s)); }

SymbolSum gamma_def(const Generator& h, const SymbolField& s) {
  SymbolSum out = curly_l(h.field, s);
  out -= SymbolSum(lie_symbol(h.field, s));
  return out;
}

SymbolField gamma_closed(const GVec& h, const SymbolField& s) {
  const SpaceSignature sig = s.sig();
  const int k = s.degree();
  SymbolField out(sig, s.weights(), k > 0 ? k - 1 : 0);
  if (k == 0) return out;
  Rational d(sig.superdim());
  Rational c = -(s.weights().lambda * d + k - 1);
  SymbolField first = interior(h, s);
  first *= c;
  out += first;
  if (k >= 2) {
    const SigContext& ctx = sig_context(sig);
    GVec hs = sharp(ctx.forms.G0, h);
    SymbolField second = vee_vector(hs, op_t(s));
    second *= Rational(1, 2);
    out += second;
  }
  return out;
}

SymbolField op_n(const SymbolField& s) {
  const SpaceSignature sig = s.sig();
  const SigContext& ctx = sig_context(sig);
  const int k = s.degree();
  SymbolField out(sig, s.weights(), k > 0 ? k - 1 : 0);
  if (k == 0) return out;
  for (int i = 1; i <= sig.dims(); ++i) {
    SymbolField li = lie_symbol(ctx.e_fields[i - 1], s);
    SymbolField gi = gamma_closed(ctx.eps[i - 1], li);
    gi *= Rational(sig.parity(i) ? 2 : -2);
    out += gi;
  }
  return out;
}

namespace {

Rational casimir_scalar(int k, const Rational& delta, int superdim) {
  Rational d(superdim);
  Rational t = (d * delta - k) * (d * delta - k) - d * (d * delta - 2 * k) +
               Rational(k) * k - 2 * k;
  return -t;
}

}  // namespace

SymbolField casimir_c(const SymbolField& s, CasimirMode mode) {
  const SpaceSignature sig = s.sig();
  const int n = sig.dims();
  switch (mode) {
    case CasimirMode::ClosedForm: {
      SymbolField out = op_r(op_t(s));
      SymbolField scaled = s;
      scaled *= casimir_scalar(s.degree(), s.weights().delta, sig.superdim());
      out += scaled;
      return out;
    }
    case CasimirMode::Decomposed: {
      const SigContext& ctx = sig_context(sig);
      SymbolField out(sig, s.weights(), s.degree());
      for (int i = 1; i <= n; ++i) {
        SymbolField t =
            lie_symbol(ctx.eps_fields[i - 1], lie_symbol(ctx.e_fields[i - 1], s));
        t *= Rational(sig.parity(i) ? 2 : -2);
        out += t;
      }
      SymbolField eul = lie_symbol(ctx.euler_field, s);
      SymbolField deul = eul;
      deul *= Rational(sig.superdim());
      out += deul;
      out -= lie_symbol(ctx.euler_field, eul);
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
          if (ctx.o_fields[j][i].is_zero() || ctx.o_fields[i][j].is_zero()) continue;
          SymbolField t =
              lie_symbol(ctx.o_fields[j][i], lie_symbol(ctx.o_fields[i][j], s));
          t *= Rational(sig.parity(i) ? 1 : -1, 2);
          out += t;
        }
      return out;
    }
    case CasimirMode::DualBasis: {
      const SigContext& ctx = sig_context(sig);
      SymbolField out(sig, s.weights(), s.degree());
      for (const auto& [u, us] : ctx.dual_fields)
        out += lie_symbol(us, lie_symbol(u, s));
      return out;
    }
  }
  throw std::logic_error("unknown casimir mode");
}

SymbolSum casimir_curly(const SymbolSum& s) {
  const SigContext& ctx = sig_context(s.sig());
  DiffOperator d = q_aff(s);
  DiffOperator acc(d.sig(), d.weights());
  for (const auto& [u, us] : ctx.dual_fields) acc += lie_dop(us, lie_dop(u, d));
  return sigma_aff(acc);
}

SymbolSum casimir_curly(const SymbolField& s) { return casimir_curly(SymbolSum(s)); }

std::vector<OperatorHandle> operator_handles(SpaceSignature sig) {
  const SigContext& ctx = sig_context(sig);
  std::vector<OperatorHandle> out;
  GVec eps1 = ctx.eps[0];
  out.push_back(
      {"i(eps1)", -1, [eps1](const SymbolField& s) { return interior(eps1, s); }});
  out.push_back({"T", -2, [](const SymbolField& s) { return op_t(s); }});
  out.push_back({"R", 2, [](const SymbolField& s) { return op_r(s); }});
  out.push_back({"div", -1, [](const SymbolField& s) { return sym_div(s); }});
  out.push_back({"G", 1, [](const SymbolField& s) { return sym_grad(s); }});
  out.push_back({"Delta", 0, [](const SymbolField& s) { return sym_laplace(s); }});
  out.push_back({"G0", -1, [](const SymbolField& s) { return op_g0(s); }});
  out.push_back({"Delta0", -2, [](const SymbolField& s) { return op_delta0(s); }});
  out.push_back({"gamma(eps1)", -1,
                 [eps1](const SymbolField& s) { return gamma_closed(eps1, s); }});
  out.push_back({"N", -1, [](const SymbolField& s) { return op_n(s); }});
  out.push_back({"C", 0, [](const SymbolField& s) { return casimir_c(s); }});
  return out;
}

RatMat RatMat::zero(int r, int c) {
  RatMat m;
  m.rows = r;
  m.cols = c;
  m.a.assign(static_cast<std::size_t>(r) * c, Rational(0));
  return m;
}

RatMat RatMat::identity(int n) {
  RatMat m = zero(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool RatMat::is_zero() const {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

RatMat RatMat::operator*(const RatMat& o) const {
  if (cols != o.rows) throw std::invalid_argument("matrix shape mismatch");
  RatMat out = zero(rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      const Rational& v = at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < o.cols; ++j) {
        if (o.at(k, j) == 0) continue;
        out.at(i, j) += v * o.at(k, j);
      }
    }
  return out;
}

RatMat& RatMat::operator+=(const RatMat& o) {
  if (rows != o.rows || cols != o.cols)
    throw std::invalid_argument("matrix shape mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += o.a[i];
  return *this;
}

RatMat& RatMat::operator*=(const Rational& c) {
  for (auto& x : a) x *= c;
  return *this;
}

bool RatMat::operator==(const RatMat& o) const {
  return rows == o.rows && cols == o.cols && a == o.a;
}

RatMat matrix_on_fiber(SpaceSignature sig, Weights w, int k, int shift,
                       const std::function<SymbolField(const SymbolField&)>& op) {
  auto in_basis = fiber_basis(sig, k);
  const int out_deg = k + shift;
  auto out_basis = out_deg >= 0 ? fiber_basis(sig, out_deg) : std::vector<FiberKey>{};
  std::map<FiberKey, int, FiberLess> index;
  for (std::size_t i = 0; i < out_basis.size(); ++i)
    index.emplace(out_basis[i], static_cast<int>(i));
  RatMat m = RatMat::zero(static_cast<int>(out_basis.size()),
                          static_cast<int>(in_basis.size()));
  for (std::size_t col = 0; col < in_basis.size(); ++col) {
    SymbolField s =
        SymbolField::monomial(sig, w, in_basis[col], SuperPoly::constant(sig, 1));
    SymbolField r = op(s);
    for (const auto& [key, coeff] : r.terms()) {
      if (!coeff.is_constant())
        throw std::logic_error("operator is not constant-coefficient on the fiber");
      auto it = index.find(key);
      if (it == index.end()) throw std::logic_error("fiber degree mismatch");
      m.at(it->second, static_cast<int>(col)) = coeff.constant_part();
    }
  }
  return m;
}

std::string fiber_matrix_csv(SpaceSignature sig, int k, int shift, const RatMat& m) {
  auto in_basis = fiber_basis(sig, k);
  auto out_basis = fiber_basis(sig, k + shift);
  std::ostringstream os;
  os << "basis";
  for (const auto& b : in_basis) os << "," << fiber_label(b);
  os << "\n";
  for (int i = 0; i < m.rows; ++i) {
    os << fiber_label(out_basis[i]);
    for (int j = 0; j < m.cols; ++j) os << "," << rat_frac(m.at(i, j));
    os << "\n";
  }
  return os.str();
}

}  // namespace ospq
