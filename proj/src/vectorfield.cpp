#include "ospquant/vectorfield.hpp"

#include <stdexcept>

namespace ospq {

VectorField::VectorField(SpaceSignature sig, int parity)
    : sig_(sig), parity_(parity & 1), comp_(sig.dims(), SuperPoly(sig)) {}

VectorField::VectorField(SpaceSignature sig, int parity, std::vector<SuperPoly> comps)
    : sig_(sig), parity_(parity & 1), comp_(std::move(comps)) {
  if (static_cast<int>(comp_.size()) != sig.dims())
    throw std::invalid_argument("component count mismatch");
}

VectorField VectorField::coordinate(SpaceSignature sig, int i) {
  VectorField X(sig, sig.parity(i));
  X.comp_[i - 1] = SuperPoly::constant(sig, 1);
  return X;
}

void VectorField::set_component(int i, SuperPoly p) { comp_[i - 1] = std::move(p); }

bool VectorField::is_zero() const {
  for (const auto& c : comp_)
    if (!c.is_zero()) return false;
  return true;
}

bool VectorField::parity_consistent() const {
  for (int i = 1; i <= sig_.dims(); ++i) {
    auto p = comp_[i - 1].parity();
    if (!p) return false;
    if (!comp_[i - 1].is_zero() && *p != ((parity_ + sig_.parity(i)) & 1)) return false;
  }
  return true;
}

SuperPoly VectorField::apply(const SuperPoly& f) const {
  SuperPoly out(sig_);
  for (int i = 1; i <= sig_.dims(); ++i) {
    if (comp_[i - 1].is_zero()) continue;
    out += comp_[i - 1] * f.partial(i);
  }
  return out;
}

SuperPoly VectorField::divergence() const {
  SuperPoly out(sig_);
  for (int i = 1; i <= sig_.dims(); ++i) {
    if (comp_[i - 1].is_zero()) continue;
    SuperPoly d = comp_[i - 1].partial(i);
    // (-1)^{i(X+1)}
    if (sig_.parity(i) && ((parity_ + 1) & 1)) d = -d;
    out += d;
  }
  return out;
}

VectorField& VectorField::operator+=(const VectorField& o) {
  if (!(sig_ == o.sig_)) throw std::invalid_argument("signature mismatch");
  if (!is_zero() && !o.is_zero() && parity_ != o.parity_)
    throw std::invalid_argument("parity mismatch in field sum");
  if (is_zero()) parity_ = o.parity_;
  for (int i = 0; i < sig_.dims(); ++i) comp_[i] += o.comp_[i];
  return *this;
}

VectorField& VectorField::operator*=(const Rational& c) {
  for (auto& p : comp_) p *= c;
  return *this;
}

VectorField VectorField::operator-() const {
  VectorField out(sig_, parity_);
  for (int i = 0; i < sig_.dims(); ++i) out.comp_[i] = -comp_[i];
  return out;
}

bool VectorField::operator==(const VectorField& o) const {
  return sig_ == o.sig_ && comp_ == o.comp_;
}

VectorField operator*(const SuperPoly& f, const VectorField& X) {
  auto fp = f.parity();
  if (!fp) throw std::invalid_argument("field scaled by a parity-mixed function");
  VectorField out(X.sig_, (X.parity_ + *fp) & 1);
  for (int i = 0; i < X.sig_.dims(); ++i) out.comp_[i] = f * X.comp_[i];
  return out;
}

VectorField vf_bracket(const VectorField& X, const VectorField& Y) {
  if (!(X.sig() == Y.sig())) throw std::invalid_argument("signature mismatch");
  VectorField out(X.sig(), (X.parity() + Y.parity()) & 1);
  const bool both_odd = (X.parity() & Y.parity()) & 1;
  for (int i = 1; i <= X.sig().dims(); ++i) {
    SuperPoly c = X.apply(Y.component(i));
    SuperPoly d = Y.apply(X.component(i));
    out.set_component(i, both_odd ? c + d : c - d);
  }
  return out;
}

DensityElement lie_density(const VectorField& X, const DensityElement& d) {
  SuperPoly out = X.apply(d.f);
  SuperPoly div = X.divergence();
  if (!div.is_zero() && d.lambda != 0) out += d.lambda * (div * d.f);
  return {out, d.lambda};
}

SymbolField lie_symbol(const VectorField& X, const SymbolField& S) {
  const SpaceSignature sig = S.sig();
  if (!(X.sig() == sig)) throw std::invalid_argument("signature mismatch");
  const int n = sig.dims();
  const int px = X.parity();
  const Rational delta = S.weights().delta;

  // J_i^j = (-1)^{parity(i) px + 1} d_i X^j
  struct JTerm {
    int i, j;
    SuperPoly val;
  };
  std::vector<JTerm> jac;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      SuperPoly d = X.component(j).partial(i);
      if (d.is_zero()) continue;
      if (!(sig.parity(i) && px)) d = -d;  // sign exponent is parity(i)*px + 1
      jac.push_back({i, j, std::move(d)});
    }

  SymbolField out(sig, S.weights(), S.degree());
  for (const auto& [m, f] : S.terms()) {
    out.add_term(m, X.apply(f));
    auto [fe, fo] = f.parity_parts();
    for (int half = 0; half < 2; ++half) {
      const SuperPoly& fpart = half ? fo : fe;
      if (fpart.is_zero()) continue;
      const bool flip = px && half;  // (-1)^{X f}
      for (const auto& jt : jac) {
        SuperPoly g = fpart * jt.val;
        if (flip) g = -g;
        // weight factor: -delta * str(e_j^i) = -delta (-1)^{parity(i)} delta_{ij}
        if (jt.i == jt.j && delta != 0) {
          Rational c = sig.parity(jt.i) ? delta : -delta;
          out.add_term(m, c * g);
        }
        for (const auto& [m2, s] : fiber_rho(sig, jt.j, jt.i, m)) {
          if (s == 1)
            out.add_term(m2, g);
          else
            out.add_term(m2, Rational(s) * g);
        }
      }
    }
  }
  return out;
}

SymbolSum lie_symbol(const VectorField& X, const SymbolSum& S) {
  SymbolSum out(S.sig(), S.weights());
  for (const auto& [k, part] : S.parts()) out.add_part(lie_symbol(X, part));
  return out;
}

VectorField realize_gminus(SpaceSignature sig, const GVec& v) {
  if (static_cast<int>(v.c.size()) != sig.dims())
    throw std::invalid_argument("component count mismatch");
  VectorField X(sig, v.parity);
  for (int i = 1; i <= sig.dims(); ++i)
    if (v.c[i - 1] != 0) X.set_component(i, SuperPoly::constant(sig, -v.c[i - 1]));
  return X;
}

VectorField realize_gzero(SpaceSignature sig, const GradedMatrix& a) {
  if (a.extended() || !(a.sig() == sig))
    throw std::invalid_argument("realize_gzero expects a standard-space matrix");
  VectorField X(sig, a.parity());
  for (int i = 1; i <= sig.dims(); ++i) {
    SuperPoly c(sig);
    for (int j = 1; j <= sig.dims(); ++j) {
      const Rational& aij = a.at(i - 1, j - 1);
      if (aij == 0) continue;
      // -(-1)^{parity(j)(parity(i)+parity(j))} a^i_j y^j
      int e = sig.parity(j) & ((sig.parity(i) + sig.parity(j)) & 1);
      Rational coeff = e ? aij : -aij;
      c += coeff * SuperPoly::variable(sig, j);
    }
    X.set_component(i, std::move(c));
  }
  return X;
}

SuperPoly quadric_f0(SpaceSignature sig) {
  SuperPoly f(sig);
  for (int i = 1; i <= sig.p; ++i) {
    SuperPoly y = SuperPoly::variable(sig, i);
    f += y * y;
  }
  for (int i = sig.p + 1; i <= sig.even_count(); ++i) {
    SuperPoly y = SuperPoly::variable(sig, i);
    f -= y * y;
  }
  for (int i = 1; i <= sig.r; ++i) {
    SuperPoly a = SuperPoly::variable(sig, sig.even_count() + i);
    SuperPoly b = SuperPoly::variable(sig, sig.even_count() + i + sig.r);
    f += Rational(2) * (a * b);
  }
  return f;
}

VectorField realize_gone(SpaceSignature sig, const GVec& xi) {
  if (static_cast<int>(xi.c.size()) != sig.dims())
    throw std::invalid_argument("component count mismatch");
  // prefactor sum_j xi_j y^j (-1)^{parity(j)}
  SuperPoly pre(sig);
  for (int j = 1; j <= sig.dims(); ++j) {
    if (xi.c[j - 1] == 0) continue;
    Rational c = sig.parity(j) ? -xi.c[j - 1] : xi.c[j - 1];
    pre += c * SuperPoly::variable(sig, j);
  }
  GradedMatrix minus_id = GradedMatrix::identity(sig, false);
  minus_id *= Rational(-1);
  VectorField euler = realize_gzero(sig, minus_id);
  VectorField out(sig, xi.parity);
  if (!pre.is_zero()) out += pre * euler;
  FormPair forms = build_forms(sig);
  GVec xs = sharp(forms.G0, xi);
  VectorField translate = realize_gminus(sig, xs);
  if (!translate.is_zero()) {
    SuperPoly half_f0 = quadric_f0(sig);
    half_f0 *= Rational(1, 2);
    out += half_f0 * translate;
  }
  return out;
}

VectorField realize(const PhiDecomposition& d) {
  VectorField X = realize_gminus(d.sig, d.v);
  GradedMatrix g0 = d.g0_matrix();
  if (!g0.is_zero()) X += realize_gzero(d.sig, g0);
  X += realize_gone(d.sig, d.xi);
  return X;
}

std::vector<Generator> osp_generators(SpaceSignature sig) {
  std::vector<Generator> out;
  FormPair forms = build_forms(sig);
  const int n = sig.dims();
  for (int i = 1; i <= n; ++i) {
    PhiDecomposition d(sig, sig.parity(i));
    d.v.c[i - 1] = 1;
    out.push_back({"e" + std::to_string(i), -1, d, realize(d)});
  }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      GradedMatrix o = generator_O(forms.G0, i - 1, j - 1);
      if (o.is_zero()) continue;
      PhiDecomposition d(sig, o.parity());
      d.b0 = o;
      out.push_back({"O(" + std::to_string(i) + "," + std::to_string(j) + ")", 0, d,
                     realize(d)});
    }
  {
    PhiDecomposition d(sig, 0);
    d.a1 = 1;
    out.push_back({"E", 0, d, realize(d)});
  }
  for (int i = 1; i <= n; ++i) {
    PhiDecomposition d(sig, sig.parity(i));
    d.xi.c[i - 1] = 1;
    out.push_back({"eps" + std::to_string(i), 1, d, realize(d)});
  }
  return out;
}

}  // namespace ospq
