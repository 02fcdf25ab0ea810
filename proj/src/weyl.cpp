#include "ospquant/weyl.hpp"

#include <stdexcept>

namespace ospq {

DiffOperator::DiffOperator(SpaceSignature sig, Weights w) : sig_(sig), w_(w) {}

DiffOperator DiffOperator::multiplication(SpaceSignature sig, Weights w, SuperPoly f) {
  DiffOperator d(sig, w);
  DerivKey k;
  k.even.assign(sig.even_count(), 0);
  d.add_term(k, f);
  return d;
}

DiffOperator DiffOperator::coordinate_derivative(SpaceSignature sig, Weights w, int i) {
  DiffOperator d(sig, w);
  DerivKey k;
  k.even.assign(sig.even_count(), 0);
  if (i <= sig.even_count())
    k.even[i - 1] = 1;
  else
    k.odd = std::uint64_t(1) << (i - sig.even_count() - 1);
  d.add_term(k, SuperPoly::constant(sig, 1));
  return d;
}

int DiffOperator::order() const {
  int o = 0;
  for (const auto& [k, c] : terms_) o = std::max(o, k.order());
  return o;
}

void DiffOperator::add_term(const DerivKey& k, const SuperPoly& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.emplace(k, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

DiffOperator& DiffOperator::operator+=(const DiffOperator& o) {
  if (!(sig_ == o.sig_) || !(w_ == o.w_))
    throw std::invalid_argument("incompatible operators");
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

DiffOperator& DiffOperator::operator-=(const DiffOperator& o) {
  if (!(sig_ == o.sig_) || !(w_ == o.w_))
    throw std::invalid_argument("incompatible operators");
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

DiffOperator& DiffOperator::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

DiffOperator DiffOperator::operator-() const {
  DiffOperator out(sig_, w_);
  for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
  return out;
}

bool DiffOperator::operator==(const DiffOperator& o) const {
  return sig_ == o.sig_ && w_ == o.w_ && terms_ == o.terms_;
}

std::pair<DiffOperator, DiffOperator> DiffOperator::parity_parts() const {
  DiffOperator even(sig_, w_), odd(sig_, w_);
  for (const auto& [k, c] : terms_) {
    auto [ce, co] = c.parity_parts();
    if (k.parity()) {
      even.add_term(k, co);
      odd.add_term(k, ce);
    } else {
      even.add_term(k, ce);
      odd.add_term(k, co);
    }
  }
  return {even, odd};
}

namespace {

// Derivative word applied to a function: odd derivatives rightmost first
// (descending index); even derivatives commute with everything.
SuperPoly apply_word(const SpaceSignature& sig, const DerivKey& k, SuperPoly f) {
  for (int b = sig.odd_count() - 1; b >= 0; --b) {
    if (!subset_has(k.odd, b)) continue;
    f = f.partial(sig.even_count() + b + 1);
    if (f.is_zero()) return f;
  }
  for (int i = 0; i < sig.even_count(); ++i)
    for (int e = 0; e < k.even[i]; ++e) {
      f = f.partial(i + 1);
      if (f.is_zero()) return f;
    }
  return f;
}

}  // namespace

SuperPoly DiffOperator::apply(const SuperPoly& f) const {
  SuperPoly out(sig_);
  for (const auto& [k, c] : terms_) {
    SuperPoly d = apply_word(sig_, k, f);
    if (d.is_zero()) continue;
    out += c * d;
  }
  return out;
}

namespace {

// d_{y^i} o (g d^beta) by the super Leibniz rule, normal-ordered
void compose_partial(const SpaceSignature& sig, int i, const DiffOperator::TermMap& in,
                     DiffOperator& out) {
  const bool odd_i = sig.parity(i) == 1;
  for (const auto& [beta, g] : in) {
    out.add_term(beta, g.partial(i));
    if (odd_i) {
      const int bit = i - sig.even_count() - 1;
      if (subset_has(beta.odd, bit)) continue;  // repeated odd derivative
      DerivKey k2 = beta;
      k2.odd |= std::uint64_t(1) << bit;
      auto [ge, go] = g.parity_parts();
      SuperPoly coeff = ge - go;  // (-1)^{i g} flips the odd part
      if (removal_sign(beta.odd, bit) < 0) coeff = -coeff;
      out.add_term(k2, coeff);
    } else {
      DerivKey k2 = beta;
      k2.even[i - 1] += 1;
      out.add_term(k2, g);
    }
  }
}

}  // namespace

DiffOperator dop_compose(const DiffOperator& a, const DiffOperator& b) {
  if (!(a.sig() == b.sig())) throw std::invalid_argument("signature mismatch");
  if (!(a.weights().lambda == b.weights().mu()))
    throw std::invalid_argument("weight mismatch in composition");
  const SpaceSignature sig = a.sig();
  Weights w{b.weights().lambda, b.weights().delta + a.weights().delta};
  DiffOperator out(sig, w);
  for (const auto& [alpha, f] : a.terms()) {
    DiffOperator cur(sig, w);
    for (const auto& [beta, g] : b.terms()) cur.add_term(beta, g);
    // fold alpha's word onto the accumulated operator, rightmost first:
    // the odd block sits right of the even block, in increasing index order
    for (int bit = sig.odd_count() - 1; bit >= 0; --bit) {
      if (!subset_has(alpha.odd, bit)) continue;
      DiffOperator next(sig, w);
      compose_partial(sig, sig.even_count() + bit + 1, cur.terms(), next);
      cur = std::move(next);
    }
    for (int i = 0; i < sig.even_count(); ++i)
      for (int e = 0; e < alpha.even[i]; ++e) {
        DiffOperator next(sig, w);
        compose_partial(sig, i + 1, cur.terms(), next);
        cur = std::move(next);
      }
    for (const auto& [k, g] : cur.terms()) out.add_term(k, f * g);
  }
  return out;
}

DiffOperator lie_derivative_operator(const VectorField& x, const Rational& lambda) {
  const SpaceSignature sig = x.sig();
  Weights w{lambda, Rational(0)};
  DiffOperator out(sig, w);
  for (int i = 1; i <= sig.dims(); ++i) {
    if (x.component(i).is_zero()) continue;
    DerivKey k;
    k.even.assign(sig.even_count(), 0);
    if (i <= sig.even_count())
      k.even[i - 1] = 1;
    else
      k.odd = std::uint64_t(1) << (i - sig.even_count() - 1);
    out.add_term(k, x.component(i));
  }
  if (lambda != 0) {
    SuperPoly div = x.divergence();
    if (!div.is_zero()) {
      DerivKey k;
      k.even.assign(sig.even_count(), 0);
      out.add_term(k, lambda * div);
    }
  }
  return out;
}

SymbolSum sigma_aff(const DiffOperator& d) {
  SymbolSum out(d.sig(), d.weights());
  for (const auto& [k, c] : d.terms()) {
    FiberKey m{k.even, k.odd};
    out.add_part(SymbolField::monomial(d.sig(), d.weights(), m, c));
  }
  return out;
}

DiffOperator q_aff(const SymbolSum& s) {
  DiffOperator out(s.sig(), s.weights());
  for (const auto& [deg, part] : s.parts())
    for (const auto& [m, c] : part.terms()) out.add_term(DerivKey{m.even, m.odd}, c);
  return out;
}

DiffOperator q_aff(const SymbolField& s) { return q_aff(SymbolSum(s)); }

SymbolField principal_symbol(const DiffOperator& d, int k) {
  if (d.order() > k) throw std::invalid_argument("operator order exceeds the degree");
  SymbolField out(d.sig(), d.weights(), k);
  for (const auto& [key, c] : d.terms())
    if (key.order() == k) out.add_term(FiberKey{key.even, key.odd}, c);
  return out;
}

DiffOperator lie_dop(const VectorField& x, const DiffOperator& d) {
  DiffOperator lmu = lie_derivative_operator(x, d.weights().mu());
  DiffOperator llam = lie_derivative_operator(x, d.weights().lambda);
  auto [de, dodd] = d.parity_parts();
  DiffOperator out(d.sig(), d.weights());
  auto one_part = [&](const DiffOperator& part, int dpar) {
    if (part.is_zero()) return;
    out += dop_compose(lmu, part);
    DiffOperator dl = dop_compose(part, llam);
    if (x.parity() && dpar)
      out += dl;
    else
      out -= dl;
  };
  one_part(de, 0);
  one_part(dodd, 1);
  return out;
}

SymbolSum curly_l(const VectorField& x, const SymbolSum& s) {
  return sigma_aff(lie_dop(x, q_aff(s)));
}

SymbolSum curly_l(const VectorField& x, const SymbolField& s) {
  return curly_l(x, SymbolSum(s));
}

}  // namespace ospq
