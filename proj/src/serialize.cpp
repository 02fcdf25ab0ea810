#include "ospquant/serialize.hpp"

#include <sstream>
#include <stdexcept>

namespace ospq {

Json to_json(const SpaceSignature& sig) {
  return Json{{"p", sig.p}, {"q", sig.q}, {"r", sig.r}};
}

SpaceSignature signature_from_json(const Json& j) {
  SpaceSignature sig;
  sig.p = j.at("p").get<int>();
  sig.q = j.at("q").get<int>();
  sig.r = j.at("r").get<int>();
  if (sig.p < 0 || sig.q < 0 || sig.r < 0 || sig.p + sig.q < 1)
    throw std::invalid_argument("invalid signature");
  return sig;
}

Json to_json(const Weights& w) {
  return Json{{"lambda", rat_text(w.lambda)}, {"delta", rat_text(w.delta)}};
}

Weights weights_from_json(const Json& j) {
  Weights w;
  w.lambda = parse_rational(j.at("lambda").get<std::string>());
  w.delta = parse_rational(j.at("delta").get<std::string>());
  return w;
}

namespace {

Json odd_indices(std::uint64_t mask) {
  Json out = Json::array();
  for (int b = 0; b < 64; ++b)
    if (subset_has(mask, b)) out.push_back(b + 1);
  return out;
}

std::uint64_t odd_mask(const Json& j) {
  std::uint64_t mask = 0;
  for (const auto& v : j) {
    int i = v.get<int>();
    if (i < 1 || i > 64) throw std::invalid_argument("odd index out of range");
    std::uint64_t bit = std::uint64_t(1) << (i - 1);
    if (mask & bit) throw std::invalid_argument("repeated odd index");
    mask |= bit;
  }
  return mask;
}

}  // namespace

Json to_json(const SymbolField& s) {
  Json terms = Json::array();
  for (const auto& [m, c] : s.terms())
    terms.push_back(Json{{"fiberEven", m.even},
                         {"fiberOdd", odd_indices(m.odd)},
                         {"coeff", c.text()}});
  return Json{{"signature", to_json(s.sig())},
              {"weights", to_json(s.weights())},
              {"degree", s.degree()},
              {"terms", terms}};
}

SymbolField symbol_from_json(const Json& j) {
  SpaceSignature sig = signature_from_json(j.at("signature"));
  Weights w = weights_from_json(j.at("weights"));
  SymbolField s(sig, w, j.at("degree").get<int>());
  for (const auto& t : j.at("terms")) {
    FiberKey m;
    m.even = t.at("fiberEven").get<std::vector<int>>();
    if (static_cast<int>(m.even.size()) != sig.even_count())
      throw std::invalid_argument("fiberEven length mismatch");
    for (int e : m.even)
      if (e < 0) throw std::invalid_argument("negative fiber exponent");
    m.odd = odd_mask(t.at("fiberOdd"));
    if (m.odd >> sig.odd_count()) throw std::invalid_argument("odd index out of range");
    s.add_term(m, SuperPoly::parse(sig, t.at("coeff").get<std::string>()));
  }
  return s;
}

Json to_json(const DiffOperator& d) {
  Json terms = Json::array();
  for (const auto& [k, c] : d.terms())
    terms.push_back(Json{{"derivEven", k.even},
                         {"derivOdd", odd_indices(k.odd)},
                         {"coeff", c.text()}});
  return Json{{"signature", to_json(d.sig())},
              {"weights", to_json(d.weights())},
              {"terms", terms}};
}

DiffOperator diffop_from_json(const Json& j) {
  SpaceSignature sig = signature_from_json(j.at("signature"));
  Weights w = weights_from_json(j.at("weights"));
  DiffOperator d(sig, w);
  for (const auto& t : j.at("terms")) {
    DerivKey k;
    k.even = t.at("derivEven").get<std::vector<int>>();
    if (static_cast<int>(k.even.size()) != sig.even_count())
      throw std::invalid_argument("derivEven length mismatch");
    k.odd = odd_mask(t.at("derivOdd"));
    if (k.odd >> sig.odd_count()) throw std::invalid_argument("odd index out of range");
    d.add_term(k, SuperPoly::parse(sig, t.at("coeff").get<std::string>()));
  }
  return d;
}

Json to_json(const SymbolSum& s) {
  Json parts = Json::array();
  for (const auto& [deg, part] : s.parts())
    parts.push_back(Json{{"degree", deg}, {"symbol", to_json(part)}});
  return Json{{"signature", to_json(s.sig())},
              {"weights", to_json(s.weights())},
              {"parts", parts}};
}

Json to_json(const GradedMatrix& m) {
  Json entries = Json::array();
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j)
      if (m.at(i, j) != 0) {
        std::string row =
            m.extended() ? ext_label(m.sig(), i) : std::to_string(i + 1);
        std::string col =
            m.extended() ? ext_label(m.sig(), j) : std::to_string(j + 1);
        entries.push_back(Json::array({row, col, rat_frac(m.at(i, j))}));
      }
  return Json{{"signature", to_json(m.sig())},
              {"extended", m.extended()},
              {"parity", m.parity()},
              {"entries", entries}};
}

Json to_json(const QuantizationResult& r) {
  Json witnesses = Json::array();
  for (const auto& w : r.witnesses)
    witnesses.push_back(Json::array({w.k, w.l, w.i, w.j}));
  Json residuals = Json::array();
  for (const auto& [lvl, mass] : r.residuals)
    residuals.push_back(Json{{"degree", lvl}, {"mass", rat_frac(mass)}});
  Json lift = Json::array();
  for (const auto& [deg, part] : r.lift.parts())
    lift.push_back(Json{{"degree", deg}, {"symbol", to_json(part)}});
  return Json{{"ok", r.ok},
              {"resonant", r.resonant},
              {"witnesses", witnesses},
              {"note", r.note},
              {"input", to_json(r.input)},
              {"lift", lift},
              {"operator", to_json(r.op)},
              {"residuals", residuals}};
}

std::string symbol_text(const SymbolField& s) {
  if (s.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : s.terms()) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.text() << ") " << fiber_label(m);
  }
  return os.str();
}

std::string symbol_sum_text(const SymbolSum& s) {
  if (s.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [deg, part] : s.parts()) {
    if (!first) os << "  ++  ";
    first = false;
    os << "[" << deg << "] " << symbol_text(part);
  }
  return os.str();
}

std::string diffop_text(const DiffOperator& d) {
  if (d.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : d.terms()) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.text() << ")";
    for (std::size_t i = 0; i < k.even.size(); ++i)
      for (int e = 0; e < k.even[i]; ++e) os << " dx" << (i + 1);
    for (int b = 0; b < 64; ++b)
      if (subset_has(k.odd, b)) os << " dth" << (b + 1);
  }
  return os.str();
}

}  // namespace ospq
