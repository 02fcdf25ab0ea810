#include "ospquant/quantizer.hpp"

#include <sstream>
#include <stdexcept>

namespace ospq {

Rational b_ks(int k, int s, SpaceSignature sig) {
  return Rational(2 * s) * (sig.superdim() + 2 * (k - s - 1));
}

Rational alpha_ks(int k, int s, const Rational& delta, SpaceSignature sig) {
  Rational d(sig.superdim());
  Rational t = (d * delta - k) * (d * delta - k) - d * (d * delta - 2 * k) +
               Rational(k) * k - 2 * k;
  return -t + b_ks(k, s, sig);
}

SpectrumEntry alpha_entry(int k, int s, const Rational& delta, SpaceSignature sig) {
  if (s < 0 || 2 * s > k) throw std::out_of_range("harmonic index out of range");
  SpectrumEntry e;
  e.k = k;
  e.s = s;
  e.b = b_ks(k, s, sig);
  e.alpha = alpha_ks(k, s, delta, sig);
  e.multiplicity = 1;
  for (int s2 = 0; 2 * s2 <= k; ++s2)
    if (s2 != s && alpha_ks(k, s2, delta, sig) == e.alpha) e.multiplicity = 2;
  return e;
}

std::vector<SpectrumEntry> spectrum_rows(SpaceSignature sig, const Rational& delta,
                                         int k_max) {
  std::vector<SpectrumEntry> rows;
  for (int k = 0; k <= k_max; ++k)
    for (int s = 0; 2 * s <= k; ++s) rows.push_back(alpha_entry(k, s, delta, sig));
  return rows;
}

MinPoly min_poly(int k, const Rational& delta, SpaceSignature sig) {
  MinPoly mp;
  mp.poly = UniPoly::constant(1);
  for (int s = 0; 2 * s <= k; ++s) {
    Rational a = alpha_ks(k, s, delta, sig);
    mp.poly = mp.poly * UniPoly::x_minus(a);
    bool found = false;
    for (auto& [root, mult] : mp.roots)
      if (root == a) {
        ++mult;
        found = true;
      }
    if (!found) mp.roots.emplace_back(a, 1);
  }
  return mp;
}

std::vector<Projector> projectors(int k, const Rational& delta, SpaceSignature sig) {
  MinPoly mp = min_poly(k, delta, sig);
  std::vector<Projector> out;
  if (mp.roots.size() == 1) {
    out.push_back({mp.roots[0].first, mp.roots[0].second, UniPoly::constant(1)});
    return out;
  }
  for (const auto& [alpha, mult] : mp.roots) {
    // q = m / (x - alpha)^mult; the projector is h(x) q(x) with
    // h = q^{-1} mod (x - alpha)^mult
    UniPoly factor = UniPoly::constant(1);
    for (int t = 0; t < mult; ++t) factor = factor * UniPoly::x_minus(alpha);
    auto [q, rem] = mp.poly.divmod(factor);
    if (!rem.is_zero()) throw std::logic_error("minimal polynomial factor mismatch");
    ExtGcd g = unipoly_ext_gcd(q, factor);
    if (g.g.degree() != 0)
      throw std::logic_error("projector construction: factors not coprime");
    // g.u * q + g.v * factor = 1, so (g.u q) is the idempotent mod m
    UniPoly proj = g.u * q;
    auto [quo, reduced] = proj.divmod(mp.poly);
    out.push_back({alpha, mult, reduced});
  }
  return out;
}

ResonanceReport is_resonant(const Rational& delta, int k_max, SpaceSignature sig) {
  ResonanceReport rep;
  for (int k = 1; k <= k_max; ++k)
    for (int l = 0; l < k; ++l)
      for (int i = 0; 2 * i <= k; ++i)
        for (int j = 0; 2 * j <= l; ++j)
          if (alpha_ks(k, i, delta, sig) == alpha_ks(l, j, delta, sig)) {
            rep.resonant = true;
            rep.witnesses.push_back({k, l, i, j});
          }
  return rep;
}

Rational resonance_closed_form(int k, int l, int s, int t, SpaceSignature sig) {
  if (sig.superdim() == 0)
    throw std::domain_error("closed-form resonances need nonzero superdimension");
  if (!(k > l) || 2 * s > k || 2 * t > l) throw std::out_of_range("bad indices");
  Rational d(sig.superdim());
  Rational first = (Rational(k + l - 1 + s + t) + d) / d;
  Rational second = Rational(t - s) * (d - 2 - 2 * (t + s) + k + l) / (d * (k - l));
  return first + second;
}

Rational resonance_direct(int k, int l, int s, int t, SpaceSignature sig) {
  if (sig.superdim() == 0)
    throw std::domain_error("direct resonance solving needs nonzero superdimension");
  if (!(k > l) || 2 * s > k || 2 * t > l) throw std::out_of_range("bad indices");
  // alpha_{k,s,delta} - alpha_{l,t,delta} is linear in delta with slope
  // 2d(k-l)
  Rational d(sig.superdim());
  Rational num = 2 * d * (k - l) + Rational(2) * (Rational(k) * k - Rational(l) * l) -
                 2 * (k - l) - b_ks(k, s, sig) + b_ks(l, t, sig);
  return num / (2 * d * (k - l));
}

SymbolField apply_poly_in_casimir(const UniPoly& p, const SymbolField& s) {
  SymbolField acc(s.sig(), s.weights(), s.degree());
  for (int i = p.degree(); i >= 0; --i) {
    acc = casimir_c(acc);
    SymbolField term = s;
    term *= p.c[i];
    acc += term;
  }
  return acc;
}

namespace {

SymbolField scaled(const SymbolField& s, const Rational& c) {
  SymbolField out = s;
  out *= c;
  return out;
}

}  // namespace

SymbolSum deg1_explicit_lift(const SymbolField& s) {
  const Weights w = s.weights();
  if (s.sig().superdim() == 0)
    throw std::domain_error("explicit degree-one correction needs d != 0");
  if (s.degree() != 1) throw std::invalid_argument("degree-one symbol expected");
  if (w.delta == 1)
    throw std::domain_error("pole 1 - delta = 0: no quantization unless lambda = 0");
  SymbolSum out(s.sig(), w);
  out.add_part(s);
  out.add_part(scaled(sym_div(s), w.lambda / (1 - w.delta)));
  return out;
}

Deg2Coeffs printed_deg2_coeffs(const Weights& w, SpaceSignature sig) {
  Rational d(sig.superdim());
  if (d == 0) throw std::domain_error("printed coefficients need d != 0");
  const Rational& lam = w.lambda;
  const Rational& del = w.delta;
  Rational p1 = d * del - 2;            // pole of a1, a3
  Rational p2 = d * (del - 1) - 2;      // pole of a1..a4
  Rational p3 = d * (del - 1) - 1;      // pole of a3, a4
  Rational p4 = d * (2 * del - 1) - 2;  // pole of a3
  auto require = [](const Rational& x, const char* what) {
    if (x == 0) throw std::domain_error(std::string("resonant pole: ") + what);
  };
  require(p1, "d*delta - 2");
  require(p2, "d*(delta-1) - 2");
  require(p3, "d*(delta-1) - 1");
  require(p4, "d*(2delta-1) - 2");
  Deg2Coeffs c;
  c.a1 = d * (2 * lam + del - 1) / (2 * p1 * p2);
  c.a2 = -(lam * d + 1) / p2;
  c.a3 = d * lam *
         (2 + (4 * lam - 1) * d +
          (-del * del - 3 * lam * del + 2 * lam + 2 * del - 1) * d * d) /
         (2 * p3 * p4 * p1 * p2);
  c.a4 = d * lam * (d * lam + 1) / (2 * p3 * p2);
  return c;
}

SymbolSum deg2_explicit_lift(const SymbolField& s) {
  if (s.degree() != 2) throw std::invalid_argument("degree-two symbol expected");
  Deg2Coeffs c = printed_deg2_coeffs(s.weights(), s.sig());
  SymbolSum out(s.sig(), s.weights());
  out.add_part(s);
  out.add_part(scaled(op_g0(s), c.a1));
  out.add_part(scaled(sym_div(s), c.a2));
  out.add_part(scaled(op_delta0(s), c.a3));
  out.add_part(scaled(sym_div(sym_div(s)), c.a4));
  return out;
}

DiffOperator quantize_deg1_explicit(const SymbolField& s) {
  return q_aff(deg1_explicit_lift(s));
}

DiffOperator quantize_deg2_explicit(const SymbolField& s) {
  return q_aff(deg2_explicit_lift(s));
}

SymbolSum d0_deg1_lift(const SymbolField& s, const Rational& t) {
  if (s.sig().superdim() != 0)
    throw std::domain_error("zero-superdimension map used with d != 0");
  if (s.degree() > 1) throw std::invalid_argument("degree at most one expected");
  SymbolSum out(s.sig(), s.weights());
  out.add_part(s);
  if (s.degree() == 1 && t != 0) out.add_part(scaled(sym_div(s), t));
  return out;
}

SymbolSum d0_deg2_lift(const SymbolField& s) {
  if (s.sig().superdim() != 0)
    throw std::domain_error("zero-superdimension map used with d != 0");
  if (s.degree() != 2) throw std::invalid_argument("degree-two symbol expected");
  SymbolSum out(s.sig(), s.weights());
  out.add_part(s);
  out.add_part(scaled(sym_div(s), Rational(1, 2)));
  return out;
}

DiffOperator quantize_d0_deg1(const SymbolField& s, const Rational& t) {
  return q_aff(d0_deg1_lift(s, t));
}

DiffOperator quantize_d0_deg2(const SymbolField& s) {
  return q_aff(d0_deg2_lift(s));
}

QuantizationResult quantize(const SymbolField& s, const QuantizeOptions& opt) {
  const SpaceSignature sig = s.sig();
  const Weights w = s.weights();
  const int k = s.degree();
  QuantizationResult res{false, false, {}, "", s, SymbolSum(sig, w),
                         DiffOperator(sig, w), {}};
  if (k > opt.degree_cap) {
    res.note = "degree cap exceeded";
    return res;
  }
  if (sig.superdim() == 0) {
    // every shift is resonant; the low-degree maps still exist
    if (k <= 1)
      res.lift = d0_deg1_lift(s, opt.d0_t);
    else if (k == 2)
      res.lift = d0_deg2_lift(s);
    else {
      res.resonant = true;
      res.witnesses.push_back({1, 0, 0, 0});
      res.note = "zero superdimension: no construction above degree two";
      return res;
    }
    res.op = q_aff(res.lift);
    res.ok = principal_symbol(res.op, k) == s || s.is_zero();
    res.note = "zero-superdimension family";
    return res;
  }

  ResonanceReport rr = is_resonant(w.delta, k, sig);
  if (rr.resonant) {
    res.resonant = true;
    res.witnesses = rr.witnesses;
    res.note = "resonant shift";
    return res;
  }

  auto projs = projectors(k, w.delta, sig);
  if (opt.reverse_projectors) std::reverse(projs.begin(), projs.end());
  std::map<int, Rational> residual_by_level;
  for (const auto& p : projs) {
    SymbolField comp = apply_poly_in_casimir(p.poly, s);
    if (comp.is_zero()) continue;
    const Rational& alpha = p.alpha;
    SymbolField calpha = casimir_c(comp);
    calpha -= scaled(comp, alpha);
    bool eigen = calpha.is_zero();
    const bool eigen_recursion = !opt.force_generalized && (p.multiplicity == 1 || eigen);
    const int msolve = eigen_recursion ? 1 : 2;

    SymbolField up1 = comp;                  // S_{k-l+1}
    SymbolField up2(sig, w, k);              // S_{k-l+2}
    res.lift.add_part(comp);
    for (int l = 1; l <= k; ++l) {
      const int kl = k - l;
      SymbolField rhs(sig, w, kl);
      if (eigen_recursion) {
        rhs -= op_n(up1);
      } else {
        SymbolField nu = op_n(up1);
        rhs -= casimir_c(nu);
        rhs -= op_n(casimir_c(up1));
        rhs += scaled(nu, 2 * alpha);
        rhs -= op_n(op_n(up2));
      }
      // invert (x - alpha)^msolve against the level minimal polynomial
      MinPoly level = min_poly(kl, w.delta, sig);
      UniPoly factor = UniPoly::constant(1);
      for (int t = 0; t < msolve; ++t) factor = factor * UniPoly::x_minus(alpha);
      ExtGcd g = unipoly_ext_gcd(factor, level.poly);
      if (g.g.degree() != 0)
        throw std::logic_error("resonance escaped the direct check");
      SymbolField sol = apply_poly_in_casimir(g.u, rhs);
      // exact residual of the defining equation
      SymbolField check = sol;
      for (int t = 0; t < msolve; ++t) {
        SymbolField c = casimir_c(check);
        c -= scaled(check, alpha);
        check = c;
      }
      check -= rhs;
      residual_by_level[kl] += check.coeff_mass();
      res.lift.add_part(sol);
      up2 = std::move(up1);
      up1 = std::move(sol);
    }
  }
  for (const auto& [lvl, mass] : residual_by_level) res.residuals.emplace_back(lvl, mass);
  res.op = q_aff(res.lift);
  bool top_ok = s.is_zero() || principal_symbol(res.op, k) == s;
  bool residuals_ok = true;
  for (const auto& [lvl, mass] : res.residuals)
    if (mass != 0) residuals_ok = false;
  res.ok = top_ok && residuals_ok;
  return res;
}

}  // namespace ospq
