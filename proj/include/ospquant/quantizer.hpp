#pragma once

#include "ospquant/structops.hpp"
#include "ospquant/unipoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ospq {

struct SpectrumEntry {
  int k = 0;
  int s = 0;
  Rational b;
  Rational alpha;
  int multiplicity = 1;  // within the degree-k minimal polynomial
};

Rational b_ks(int k, int s, SpaceSignature sig);
Rational alpha_ks(int k, int s, const Rational& delta, SpaceSignature sig);
SpectrumEntry alpha_entry(int k, int s, const Rational& delta, SpaceSignature sig);
std::vector<SpectrumEntry> spectrum_rows(SpaceSignature sig, const Rational& delta,
                                         int k_max);

// prod_s (x - alpha_{k,s,delta}) with coinciding roots collected.
struct MinPoly {
  std::vector<std::pair<Rational, int>> roots;  // distinct roots, multiplicities
  UniPoly poly;
};
MinPoly min_poly(int k, const Rational& delta, SpaceSignature sig);

// Spectral projectors as polynomials in the Casimir operator: idempotent,
// complete, and (C - alpha)^m annihilates the image.
struct Projector {
  Rational alpha;
  int multiplicity = 1;
  UniPoly poly;
};
std::vector<Projector> projectors(int k, const Rational& delta, SpaceSignature sig);

struct ResonanceWitness {
  int k = 0, l = 0, i = 0, j = 0;  // alpha_{k,i} = alpha_{l,j}, l < k
};

struct ResonanceReport {
  bool resonant = false;
  std::vector<ResonanceWitness> witnesses;
};

// Direct exact test: any coincidence alpha_{k,i,delta} = alpha_{l,j,delta}
// with l < k <= k_max. Normative over the closed-form table.
ResonanceReport is_resonant(const Rational& delta, int k_max, SpaceSignature sig);

// The printed closed form for the resonant shift at indices (k,l,s,t);
// known to disagree with the direct solution when s != t. Requires d != 0.
Rational resonance_closed_form(int k, int l, int s, int t, SpaceSignature sig);

// The shift solving alpha_{k,s,delta} = alpha_{l,t,delta} exactly
// (unique when d != 0).
Rational resonance_direct(int k, int l, int s, int t, SpaceSignature sig);

struct QuantizeOptions {
  int degree_cap = 4;
  Rational d0_t = 0;        // degree-one divergence coefficient at d = 0
  bool force_generalized = false;  // use the double-root recursion even on eigenvectors
  bool reverse_projectors = false;
};

struct QuantizationResult {
  bool ok = false;
  bool resonant = false;
  std::vector<ResonanceWitness> witnesses;
  std::string note;
  SymbolField input;
  SymbolSum lift;
  DiffOperator op;
  // per-level l1 coefficient mass of the defining-equation residual; all
  // zero on success
  std::vector<std::pair<int, Rational>> residuals;
};

// The equivariant quantization of a degree-k symbol: decomposes into
// generalized eigencomponents of the Casimir and solves the descending
// recursion exactly. Refuses resonant shifts with witnesses.
QuantizationResult quantize(const SymbolField& s, const QuantizeOptions& opt = {});

// Explicit low-degree corrections for d != 0; throw std::domain_error at
// the printed poles.
struct Deg2Coeffs {
  Rational a1, a2, a3, a4;
};
Deg2Coeffs printed_deg2_coeffs(const Weights& w, SpaceSignature sig);
SymbolSum deg1_explicit_lift(const SymbolField& s);
SymbolSum deg2_explicit_lift(const SymbolField& s);
DiffOperator quantize_deg1_explicit(const SymbolField& s);
DiffOperator quantize_deg2_explicit(const SymbolField& s);

// The zero-superdimension maps.
SymbolSum d0_deg1_lift(const SymbolField& s, const Rational& t);
SymbolSum d0_deg2_lift(const SymbolField& s);
DiffOperator quantize_d0_deg1(const SymbolField& s, const Rational& t);
DiffOperator quantize_d0_deg2(const SymbolField& s);

// p(C) s with the closed-form Casimir, Horner evaluation.
SymbolField apply_poly_in_casimir(const UniPoly& p, const SymbolField& s);

}  // namespace ospq
