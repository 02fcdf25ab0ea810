#include "ospquant/verify.hpp"

#include <doctest.h>

#include <random>

#include "test_util.hpp"

using namespace ospq;

namespace {

const SpaceSignature kSig{2, 0, 1};
const Weights kW{Rational(1, 2), Rational(1, 3)};

}  // namespace

TEST_CASE("rational parsing and formatting") {
  CHECK(rat_text(parse_rational("3/4")) == "3/4");
  CHECK(rat_text(parse_rational("-6/4")) == "-3/2");
  CHECK(rat_text(parse_rational("7")) == "7");
  CHECK(rat_frac(Rational(0)) == "0/1");
  CHECK(rat_frac(Rational(3)) == "3/1");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("symbol json round trip") {
  std::mt19937_64 rng(191);
  for (int k = 0; k <= 3; ++k) {
    SymbolField s(kSig, kW, k);
    auto basis = fiber_basis(kSig, k);
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    for (int t = 0; t < 3; ++t)
      s.add_term(basis[pick(rng)], testutil::random_poly(kSig, rng, 2, -1, 3));
    Json j = to_json(s);
    CHECK(symbol_from_json(j) == s);
    // schema fields
    CHECK(j.contains("signature"));
    CHECK(j.contains("weights"));
    CHECK(j.at("degree").get<int>() == k);
    for (const auto& t : j.at("terms")) {
      CHECK(t.contains("fiberEven"));
      CHECK(t.contains("fiberOdd"));
      CHECK(t.contains("coeff"));
    }
  }
}

TEST_CASE("diffop json round trip") {
  std::mt19937_64 rng(193);
  DiffOperator d(kSig, kW);
  DerivKey k1{{1, 0}, 1};
  d.add_term(k1, testutil::random_poly(kSig, rng, 2, -1, 2));
  DerivKey k2{{0, 2}, 0};
  d.add_term(k2, testutil::random_poly(kSig, rng, 1, -1, 2));
  Json j = to_json(d);
  CHECK(diffop_from_json(j) == d);
  for (const auto& t : j.at("terms")) {
    CHECK(t.contains("derivEven"));
    CHECK(t.contains("derivOdd"));
  }
}

TEST_CASE("matrix serialization uses sparse labeled triples") {
  FormPair forms = build_forms(kSig);
  Json j = to_json(forms.G);
  CHECK(j.at("extended").get<bool>());
  bool found_o_coupling = false;
  for (const auto& e : j.at("entries")) {
    REQUIRE(e.size() == 3);
    if (e[0].get<std::string>() == "o" && e[1].get<std::string>() == "o'") {
      found_o_coupling = true;
      CHECK(e[2].get<std::string>() == "-1/1");
    }
  }
  CHECK(found_o_coupling);
}

TEST_CASE("quantization result serialization") {
  std::mt19937_64 rng(197);
  SpaceSignature sig{1, 0, 1};
  SymbolField s(sig, Weights{Rational(1, 2), Rational(1, 3)}, 1);
  s.add_term(FiberKey{{1}, 0}, SuperPoly::variable(sig, 1));
  QuantizationResult qr = quantize(s);
  REQUIRE(qr.ok);
  Json j = to_json(qr);
  CHECK(j.at("ok").get<bool>());
  CHECK_FALSE(j.at("resonant").get<bool>());
  for (const auto& r : j.at("residuals"))
    CHECK(r.at("mass").get<std::string>() == "0/1");
  // the lift round-trips through the symbol schema
  for (const auto& part : j.at("lift")) {
    SymbolField back = symbol_from_json(part.at("symbol"));
    CHECK(back == qr.lift.part(part.at("degree").get<int>()));
  }
  // refusal carries witnesses
  SymbolField bad(sig, Weights{Rational(1, 2), Rational(1)}, 1);
  bad.add_term(FiberKey{{1}, 0}, SuperPoly::constant(sig, 1));
  QuantizationResult refused = quantize(bad);
  Json jr = to_json(refused);
  CHECK(jr.at("resonant").get<bool>());
  CHECK(jr.at("witnesses").size() > 0);
}

TEST_CASE("malformed symbol json is rejected") {
  Json j = to_json(SymbolField(kSig, kW, 1));
  j["terms"].push_back(
      Json{{"fiberEven", Json::array({1})}, {"fiberOdd", Json::array()}, {"coeff", "1"}});
  CHECK_THROWS_AS(symbol_from_json(j), std::invalid_argument);
  Json bad_sig = Json{{"p", 0}, {"q", 0}, {"r", 1}};
  CHECK_THROWS_AS(signature_from_json(bad_sig), std::invalid_argument);
}

TEST_CASE("verification suite passes on a small cell") {
  RunConfig cfg;
  cfg.sig = SpaceSignature{1, 0, 1};
  cfg.weights = Weights{Rational(1, 2), Rational(1, 3)};
  cfg.max_degree = 2;
  cfg.max_poly_degree = 2;
  cfg.seed = 5;
  Report rep = run_verify(cfg);
  for (const auto& c : rep.checks) {
    INFO(c.name, ": ", c.witness);
    CHECK(c.pass);
  }
  CHECK(rep.failed == 0);
  CHECK(rep.passed == static_cast<int>(rep.checks.size()));
  Json j = report_json(rep);
  CHECK(j.at("summary").at("fail").get<int>() == 0);
}

TEST_CASE("reports are deterministic for a fixed config and seed") {
  RunConfig cfg;
  cfg.sig = SpaceSignature{1, 0, 1};
  cfg.weights = Weights{Rational(1, 2), Rational(1, 3)};
  cfg.max_degree = 1;
  cfg.seed = 42;
  Report a = run_verify(cfg);
  Report b = run_verify(cfg);
  REQUIRE(a.checks.size() == b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    CHECK(a.checks[i].name == b.checks[i].name);
    CHECK(a.checks[i].anchor == b.checks[i].anchor);
    CHECK(a.checks[i].pass == b.checks[i].pass);
    CHECK(a.checks[i].witness == b.checks[i].witness);
  }
}

TEST_CASE("verification suite handles the resonant and d=0 branches") {
  RunConfig resonant;
  resonant.sig = SpaceSignature{3, 0, 1};
  resonant.weights = Weights{Rational(1, 2), Rational(1)};
  resonant.max_degree = 1;
  Report rep = run_verify(resonant);
  bool saw_refusal_check = false;
  for (const auto& c : rep.checks) {
    INFO(c.name, ": ", c.witness);
    CHECK(c.pass);
    if (c.anchor == "quantizer.expected-refusal") saw_refusal_check = true;
  }
  CHECK(saw_refusal_check);

  RunConfig d0;
  d0.sig = SpaceSignature{1, 1, 1};
  d0.weights = Weights{Rational(1, 2), Rational(2, 7)};
  d0.max_degree = 2;
  Report rep0 = run_verify(d0);
  bool saw_scan = false;
  for (const auto& c : rep0.checks) {
    INFO(c.name, ": ", c.witness);
    CHECK(c.pass);
    if (c.anchor == "quantizer.d0-perturbation-scan") saw_scan = true;
  }
  CHECK(saw_scan);
}
