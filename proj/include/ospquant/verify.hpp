#pragma once

#include "ospquant/serialize.hpp"

#include <functional>
#include <optional>

namespace ospq {

struct RunConfig {
  SpaceSignature sig{1, 0, 1};
  Weights weights{Rational(1, 2), Rational(1, 3)};
  int max_degree = 2;
  int max_poly_degree = 2;
  int degree_cap = 4;
  std::uint64_t seed = 1;
  std::string format = "text";
  std::string out;
};

struct CheckRecord {
  std::string name;
  std::string anchor;
  bool pass = false;
  std::string witness;  // inputs and both sides when the check fails
  long millis = 0;
};

struct Report {
  RunConfig config;
  std::vector<CheckRecord> checks;
  int passed = 0;
  int failed = 0;
  long millis = 0;
};

// Runs the whole suite for one configuration cell.
Report run_verify(const RunConfig& config);

Json report_json(const Report& rep);
std::string report_text(const Report& rep);
std::string report_csv(const Report& rep);

// Coefficient monomials of total degree at most max_total_degree,
// canonical order; the spanning set used by the exact sweeps.
std::vector<MonoKey> coeff_monomials(SpaceSignature sig, int max_total_degree);

// Lifts of basis symbols, expanded linearly to arbitrary polynomial
// coefficients. The builder must be linear over the rationals.
class LiftCache {
 public:
  using Builder = std::function<SymbolSum(const SymbolField&)>;
  LiftCache(SpaceSignature sig, Weights w, Builder builder);

  // lift of an arbitrary symbol through the cached basis lifts
  SymbolSum lift(const SymbolField& s);

 private:
  struct KeyLess {
    bool operator()(const std::pair<FiberKey, MonoKey>& a,
                    const std::pair<FiberKey, MonoKey>& b) const {
      if (!(a.first == b.first)) return FiberLess{}(a.first, b.first);
      return MonoLess{}(a.second, b.second);
    }
  };
  SpaceSignature sig_;
  Weights w_;
  Builder builder_;
  std::map<std::pair<FiberKey, MonoKey>, SymbolSum, KeyLess> cache_;
};

// One row of the resonance table: the direct solution of the spectral
// coincidence at (k,l,s,t), the printed closed-form value, and whether
// they disagree.
struct ResonanceRow {
  int k = 0, l = 0, s = 0, t = 0;
  Rational direct;
  Rational closed;
  bool has_closed = false;
  bool discrepancy = false;
};
std::vector<ResonanceRow> resonance_table(SpaceSignature sig, int k_max);

}  // namespace ospq
