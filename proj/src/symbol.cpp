#include "ospquant/symbol.hpp"

#include <stdexcept>

namespace ospq {

SymbolField::SymbolField(SpaceSignature sig, Weights w, int degree)
    : sig_(sig), w_(w), degree_(degree) {
  if (degree < 0) throw std::invalid_argument("negative symbol degree");
}

SymbolField SymbolField::monomial(SpaceSignature sig, Weights w, FiberKey key,
                                  SuperPoly coeff) {
  SymbolField s(sig, w, key.degree());
  s.add_term(key, coeff);
  return s;
}

void SymbolField::add_term(const FiberKey& key, const SuperPoly& coeff) {
  if (coeff.is_zero()) return;
  if (key.degree() != degree_)
    throw std::invalid_argument("fiber degree does not match the symbol degree");
  auto [it, inserted] = terms_.emplace(key, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SymbolField& SymbolField::operator+=(const SymbolField& o) {
  if (!(sig_ == o.sig_) || !(w_ == o.w_))
    throw std::invalid_argument("incompatible symbols");
  if (o.is_zero()) return *this;  // the zero symbol has no fixed degree
  if (is_zero()) degree_ = o.degree_;
  if (degree_ != o.degree_) throw std::invalid_argument("symbol degree mismatch");
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

SymbolField& SymbolField::operator-=(const SymbolField& o) {
  if (!(sig_ == o.sig_) || !(w_ == o.w_))
    throw std::invalid_argument("incompatible symbols");
  if (o.is_zero()) return *this;
  if (is_zero()) degree_ = o.degree_;
  if (degree_ != o.degree_) throw std::invalid_argument("symbol degree mismatch");
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

SymbolField& SymbolField::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

SymbolField SymbolField::operator-() const {
  SymbolField out(sig_, w_, degree_);
  for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
  return out;
}

bool SymbolField::operator==(const SymbolField& o) const {
  if (!(sig_ == o.sig_) || !(w_ == o.w_)) return false;
  if (is_zero() && o.is_zero()) return true;
  return degree_ == o.degree_ && terms_ == o.terms_;
}

std::optional<int> SymbolField::parity() const {
  std::optional<int> result;
  for (const auto& [k, c] : terms_) {
    auto cp = c.parity();
    if (!cp) return std::nullopt;
    int p = (*cp + k.parity()) & 1;
    if (!result)
      result = p;
    else if (*result != p)
      return std::nullopt;
  }
  return result ? result : std::optional<int>(0);
}

SymbolField SymbolField::coeff_partial(int i) const {
  SymbolField out(sig_, w_, degree_);
  for (const auto& [k, c] : terms_) out.add_term(k, c.partial(i));
  return out;
}

bool SymbolField::constant_coefficients() const {
  for (const auto& [k, c] : terms_)
    if (!c.is_constant()) return false;
  return true;
}

Rational SymbolField::coeff_mass() const {
  Rational m = 0;
  for (const auto& [k, c] : terms_)
    for (const auto& [mk, v] : c.terms()) m += abs(v);
  return m;
}

int SymbolField::max_coeff_even_degree() const {
  int d = 0;
  for (const auto& [k, c] : terms_) d = std::max(d, c.even_degree());
  return d;
}

SymbolSum::SymbolSum(SpaceSignature sig, Weights w) : sig_(sig), w_(w) {}

SymbolSum::SymbolSum(SymbolField part) : sig_(part.sig()), w_(part.weights()) {
  add_part(part);
}

bool SymbolSum::is_zero() const { return parts_.empty(); }

SymbolField SymbolSum::part(int k) const {
  auto it = parts_.find(k);
  if (it != parts_.end()) return it->second;
  return SymbolField(sig_, w_, k);
}

int SymbolSum::top_degree() const {
  return parts_.empty() ? -1 : parts_.rbegin()->first;
}

void SymbolSum::add_part(const SymbolField& s) {
  if (s.is_zero()) return;
  if (!(s.sig() == sig_) || !(s.weights() == w_))
    throw std::invalid_argument("incompatible symbol sum part");
  auto [it, inserted] = parts_.emplace(s.degree(), s);
  if (!inserted) {
    it->second += s;
    if (it->second.is_zero()) parts_.erase(it);
  }
}

SymbolSum& SymbolSum::operator+=(const SymbolSum& o) {
  for (const auto& [k, s] : o.parts_) add_part(s);
  return *this;
}

SymbolSum& SymbolSum::operator-=(const SymbolSum& o) {
  for (const auto& [k, s] : o.parts_) add_part(-s);
  return *this;
}

SymbolSum& SymbolSum::operator*=(const Rational& c) {
  if (c == 0) {
    parts_.clear();
    return *this;
  }
  for (auto& [k, s] : parts_) s *= c;
  return *this;
}

bool SymbolSum::operator==(const SymbolSum& o) const {
  return sig_ == o.sig_ && w_ == o.w_ && parts_ == o.parts_;
}

}  // namespace ospq
