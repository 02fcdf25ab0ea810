#include "ospquant/superpoly.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace ospq {

namespace {

void require_same_sig(const SpaceSignature& a, const SpaceSignature& b) {
  if (!(a == b)) throw std::invalid_argument("signature mismatch");
}

}  // namespace

SuperPoly SuperPoly::constant(SpaceSignature sig, Rational c) {
  SuperPoly p(sig);
  MonoKey k;
  k.even.assign(sig.even_count(), 0);
  p.add_term(k, c);
  return p;
}

SuperPoly SuperPoly::variable(SpaceSignature sig, int i) {
  if (i < 1 || i > sig.dims()) throw std::out_of_range("variable index");
  MonoKey k;
  k.even.assign(sig.even_count(), 0);
  if (i <= sig.even_count())
    k.even[i - 1] = 1;
  else
    k.odd = std::uint64_t(1) << (i - sig.even_count() - 1);
  return monomial(sig, std::move(k), 1);
}

SuperPoly SuperPoly::monomial(SpaceSignature sig, MonoKey k, Rational c) {
  if (static_cast<int>(k.even.size()) != sig.even_count())
    throw std::invalid_argument("monomial key size");
  SuperPoly p(sig);
  p.add_term(k, c);
  return p;
}

bool SuperPoly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first.total_degree() == 0;
}

Rational SuperPoly::constant_part() const {
  MonoKey k;
  k.even.assign(sig_.even_count(), 0);
  auto it = terms_.find(k);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SuperPoly::add_term(const MonoKey& k, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SuperPoly& SuperPoly::operator+=(const SuperPoly& o) {
  require_same_sig(sig_, o.sig_);
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

SuperPoly& SuperPoly::operator-=(const SuperPoly& o) {
  require_same_sig(sig_, o.sig_);
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

SuperPoly& SuperPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

SuperPoly SuperPoly::operator-() const {
  SuperPoly out(sig_);
  for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
  return out;
}

SuperPoly operator*(const SuperPoly& a, const SuperPoly& b) {
  require_same_sig(a.sig_, b.sig_);
  SuperPoly out(a.sig_);
  const int ne = a.sig_.even_count();
  MonoKey k;
  k.even.resize(ne);
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      int sign = merge_sign(ka.odd, kb.odd);
      if (sign == 0) continue;
      for (int i = 0; i < ne; ++i) k.even[i] = ka.even[i] + kb.even[i];
      k.odd = ka.odd | kb.odd;
      Rational c = ca * cb;
      if (sign < 0) c = -c;
      out.add_term(k, c);
    }
  }
  return out;
}

SuperPoly SuperPoly::partial(int i) const {
  if (i < 1 || i > sig_.dims()) throw std::out_of_range("derivative index");
  SuperPoly out(sig_);
  if (i <= sig_.even_count()) {
    const int idx = i - 1;
    for (const auto& [k, c] : terms_) {
      if (k.even[idx] == 0) continue;
      MonoKey k2 = k;
      k2.even[idx] -= 1;
      out.add_term(k2, c * k.even[idx]);
    }
  } else {
    const int bit = i - sig_.even_count() - 1;
    for (const auto& [k, c] : terms_) {
      if (!subset_has(k.odd, bit)) continue;
      MonoKey k2 = k;
      k2.odd &= ~(std::uint64_t(1) << bit);
      int sign = removal_sign(k.odd, bit);
      out.add_term(k2, sign < 0 ? -c : c);
    }
  }
  return out;
}

std::optional<int> SuperPoly::parity() const {
  if (terms_.empty()) return 0;
  int p = terms_.begin()->first.parity();
  for (const auto& [k, c] : terms_)
    if (k.parity() != p) return std::nullopt;
  return p;
}

std::pair<SuperPoly, SuperPoly> SuperPoly::parity_parts() const {
  SuperPoly even(sig_), odd(sig_);
  for (const auto& [k, c] : terms_)
    (k.parity() ? odd : even).terms_.emplace(k, c);
  return {even, odd};
}

int SuperPoly::even_degree() const {
  int d = 0;
  for (const auto& [k, c] : terms_) d = std::max(d, k.even_degree());
  return d;
}

int SuperPoly::total_degree() const {
  int d = 0;
  for (const auto& [k, c] : terms_) d = std::max(d, k.total_degree());
  return d;
}

std::string SuperPoly::text() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    Rational a = c;
    if (first) {
      first = false;
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    os << rat_text(a);
    bool sep = true;
    for (int i = 0; i < static_cast<int>(k.even.size()); ++i) {
      if (k.even[i] == 0) continue;
      os << (sep ? " * " : " ");
      sep = false;
      os << "x" << (i + 1);
      if (k.even[i] > 1) os << "^" << k.even[i];
    }
    for (int b = 0; b < sig_.odd_count(); ++b) {
      if (!subset_has(k.odd, b)) continue;
      os << (sep ? " * " : " ");
      sep = false;
      os << "th" << (b + 1);
    }
  }
  return os.str();
}

namespace {

struct Cursor {
  const std::string& s;
  std::size_t i = 0;
  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip();
    return i >= s.size();
  }
  char peek() {
    skip();
    return i < s.size() ? s[i] : '\0';
  }
  bool eat(char c) {
    skip();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  std::string digits() {
    skip();
    std::size_t b = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (b == i) throw std::invalid_argument("expected digits in polynomial: " + s);
    return s.substr(b, i - b);
  }
};

}  // namespace

SuperPoly SuperPoly::parse(SpaceSignature sig, const std::string& str) {
  SuperPoly out(sig);
  Cursor c{str};
  if (c.done()) throw std::invalid_argument("empty polynomial text");
  bool first = true;
  while (!c.done()) {
    int sign = 1;
    if (c.eat('-'))
      sign = -1;
    else if (c.eat('+')) {
      if (first) throw std::invalid_argument("unexpected leading +");
    } else if (!first) {
      throw std::invalid_argument("expected + or - between terms: " + str);
    }
    first = false;
    Rational coeff(1);
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
      std::string num = c.digits();
      std::string den = "1";
      if (c.eat('/')) den = c.digits();
      coeff = parse_rational(num + "/" + den);
      have_coeff = true;
    }
    MonoKey k;
    k.even.assign(sig.even_count(), 0);
    bool expect_mono = false;
    if (have_coeff) {
      if (c.eat('*')) expect_mono = true;
    } else {
      expect_mono = true;  // bare monomial means coefficient 1
    }
    if (expect_mono) {
      bool any = false;
      while (true) {
        c.skip();
        if (c.peek() == 'x') {
          ++c.i;
          int idx = std::stoi(c.digits());
          if (idx < 1 || idx > sig.even_count())
            throw std::invalid_argument("bad even variable index");
          int e = 1;
          if (c.eat('^')) e = std::stoi(c.digits());
          k.even[idx - 1] += e;
          any = true;
        } else if (c.peek() == 't') {
          ++c.i;
          if (!c.eat('h')) throw std::invalid_argument("expected th<i>");
          int idx = std::stoi(c.digits());
          if (idx < 1 || idx > sig.odd_count())
            throw std::invalid_argument("bad odd variable index");
          std::uint64_t bit = std::uint64_t(1) << (idx - 1);
          if (k.odd & bit) throw std::invalid_argument("repeated odd variable");
          // canonical text lists odd factors in increasing order
          if (k.odd >> idx) throw std::invalid_argument("odd factors out of order");
          k.odd |= bit;
          any = true;
        } else {
          break;
        }
      }
      if (!any && !have_coeff)
        throw std::invalid_argument("expected term: " + str);
    }
    out.add_term(k, sign < 0 ? Rational(-coeff) : coeff);
  }
  return out;
}

}  // namespace ospq
