#include "ospquant/structops.hpp"

#include <doctest.h>

#include <random>

#include "test_util.hpp"

using namespace ospq;

namespace {

const SpaceSignature kSig{1, 0, 1};
const Weights kW{Rational(1, 2), Rational(1, 3)};

SymbolField mono(SpaceSignature sig, Weights w, FiberKey k, SuperPoly c) {
  return SymbolField::monomial(sig, w, k, c);
}

SymbolField random_symbol(SpaceSignature sig, Weights w, int k, std::mt19937_64& rng,
                          int coeff_deg = 2, int nterms = 3) {
  SymbolField out(sig, w, k);
  auto basis = fiber_basis(sig, k);
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  for (int t = 0; t < nterms; ++t)
    out.add_term(basis[pick(rng)], testutil::random_poly(sig, rng, coeff_deg, -1, 2));
  return out;
}

Rational b_ks(int k, int s, int d) { return Rational(2 * s) * (d + 2 * (k - s - 1)); }

}  // namespace

TEST_CASE("interior product values") {
  SuperPoly one = SuperPoly::constant(kSig, 1);
  SymbolField e1e1 = mono(kSig, kW, FiberKey{{2}, 0}, one);
  GVec eps1 = testutil::basis_vec(kSig, 1);
  SymbolField r = interior(eps1, e1e1);
  CHECK(r == mono(kSig, kW, FiberKey{{1}, 0}, Rational(2) * one));

  SymbolField deg0 = mono(kSig, kW, FiberKey{{0}, 0}, one);
  CHECK(interior(eps1, deg0).is_zero());
  CHECK(interior(testutil::basis_vec(kSig, 2), deg0).is_zero());

  // odd contractions on e2 v e3 (odd slots 1 and 2)
  SymbolField e2e3 = mono(kSig, kW, FiberKey{{0}, 3}, one);
  CHECK(interior(testutil::basis_vec(kSig, 2), e2e3) ==
        mono(kSig, kW, FiberKey{{0}, 2}, one));
  CHECK(interior(testutil::basis_vec(kSig, 3), e2e3) ==
        mono(kSig, kW, FiberKey{{0}, 1}, -one));
}

TEST_CASE("trace operator values and the two routes") {
  SuperPoly one = SuperPoly::constant(kSig, 1);
  CHECK(op_t(mono(kSig, kW, FiberKey{{1}, 0}, one)).is_zero());
  CHECK(op_t(mono(kSig, kW, FiberKey{{2}, 0}, one)) ==
        mono(kSig, kW, FiberKey{{0}, 0}, Rational(2) * one));
  CHECK(op_t(mono(kSig, kW, FiberKey{{0}, 3}, one)) ==
        mono(kSig, kW, FiberKey{{0}, 0}, Rational(-2) * one));

  std::mt19937_64 rng(73);
  for (SpaceSignature sig : {SpaceSignature{1, 0, 1}, {2, 1, 1}, {1, 1, 2}}) {
    Weights w{Rational(1, 2), Rational(2, 7)};
    for (int k = 0; k <= 4; ++k) {
      for (const auto& m : fiber_basis(sig, k)) {
        SymbolField s = mono(sig, w, m, SuperPoly::constant(sig, 1));
        CHECK(op_t(s) == op_t_contraction(s));
      }
      SymbolField s = random_symbol(sig, w, k, rng);
      CHECK(op_t(s) == op_t_contraction(s));
    }
  }
}

TEST_CASE("T of R of the unit symbol is twice the superdimension") {
  for (SpaceSignature sig :
       {SpaceSignature{1, 0, 1}, {2, 1, 1}, {2, 0, 1}, {1, 1, 0}}) {
    Weights w{Rational(0), Rational(0)};
    SymbolField unit = mono(sig, w, FiberKey{std::vector<int>(sig.even_count(), 0), 0},
                            SuperPoly::constant(sig, 1));
    SymbolField tr = op_t(op_r(unit));
    SymbolField expect = unit;
    expect *= Rational(2 * sig.superdim());
    CHECK(tr == expect);
  }
}

TEST_CASE("commutator of R powers with T") {
  // [R^s, T] = -b_{k,s} R^{s-1} on the degree k-2s fiber space
  for (SpaceSignature sig : {SpaceSignature{1, 0, 1}, {1, 1, 1}, {2, 2, 1}}) {
    Weights w{Rational(1, 2), Rational(1, 3)};
    const int d = sig.superdim();
    for (int k = 0; k <= 4; ++k)
      for (int s = 1; s <= 2; ++s) {
        if (k - 2 * s < 0) continue;
        const int base = k - 2 * s;
        auto rpow = [&](int pw, const SymbolField& x) {
          SymbolField y = x;
          for (int t = 0; t < pw; ++t) y = op_r(y);
          return y;
        };
        for (const auto& m : fiber_basis(sig, base)) {
          SymbolField x = mono(sig, w, m, SuperPoly::constant(sig, 1));
          SymbolField lhs = op_t(rpow(s, x));  // T R^s x
          SymbolField rhs = rpow(s, op_t(x));  // R^s T x
          SymbolField corr = rpow(s - 1, x);
          corr *= b_ks(k, s, d);
          rhs += corr;  // R^s T x + b_{k,s} R^{s-1} x
          CHECK(lhs == rhs);
        }
      }
  }
}

TEST_CASE("product formula for iterated traces") {
  // R^{s+1} T^{s+1} = prod_{i=0..s} (R T - b_{k,i}) on the degree-k fiber
  for (SpaceSignature sig : {SpaceSignature{1, 0, 1}, {2, 2, 1}}) {
    Weights w{Rational(1, 3), Rational(2, 5)};
    const int d = sig.superdim();
    for (int k = 0; k <= 4; ++k)
      for (int s = 0; s <= 2; ++s) {
        auto lhs_op = [&](const SymbolField& x) {
          SymbolField y = x;
          for (int t = 0; t <= s; ++t) y = op_t(y);
          for (int t = 0; t <= s; ++t) y = op_r(y);
          return y;
        };
        auto rhs_op = [&](const SymbolField& x) {
          SymbolField y = x;
          for (int i = s; i >= 0; --i) {
            SymbolField rt = op_r(op_t(y));
            SymbolField by = y;
            by *= b_ks(k, i, d);
            rt -= by;
            y = rt;
          }
          return y;
        };
        for (const auto& m : fiber_basis(sig, k)) {
          SymbolField x = mono(sig, w, m, SuperPoly::constant(sig, 1));
          CHECK(lhs_op(x) == rhs_op(x));
        }
      }
  }
}

TEST_CASE("divergence, gradient, laplacian") {
  std::mt19937_64 rng(79);
  SuperPoly f = testutil::random_poly(kSig, rng, 3);
  SymbolField s = mono(kSig, kW, FiberKey{{1}, 0}, f);
  CHECK(sym_div(s) == mono(kSig, kW, FiberKey{{0}, 0}, f.partial(1)));

  SymbolField c0 = mono(kSig, kW, FiberKey{{0}, 0}, SuperPoly::constant(kSig, 1));
  CHECK(sym_grad(c0).is_zero());

  // div o G = Delta on functions, hence div o G0 = Delta0 two degrees up
  for (SpaceSignature sig : {SpaceSignature{1, 0, 1}, {2, 1, 1}}) {
    Weights w{Rational(1, 2), Rational(1, 5)};
    for (int trial = 0; trial < 6; ++trial) {
      SymbolField u = random_symbol(sig, w, 0, rng, 3);
      CHECK(sym_div(sym_grad(u)) == sym_laplace(u));
      SymbolField s2 = random_symbol(sig, w, 2, rng, 3);
      CHECK(sym_div(op_g0(s2)) == op_delta0(s2));
    }
  }
}

TEST_CASE("gamma: defect definition equals the closed formula") {
  std::mt19937_64 rng(83);
  for (SpaceSignature sig : {SpaceSignature{1, 0, 1}, {1, 1, 1}}) {
    Weights w{Rational(1, 2), Rational(1, 3)};
    for (const auto& g : osp_generators(sig)) {
      if (g.grade != 1) continue;
      GVec h = g.phi.xi;
      for (int k = 0; k <= 3; ++k)
        for (const auto& m : fiber_basis(sig, k)) {
          SymbolField s = mono(sig, w, m, testutil::random_poly(sig, rng, 2, -1, 2));
          SymbolSum def = gamma_def(g, s);
          SymbolField closed = gamma_closed(h, s);
          CHECK(def == SymbolSum(closed));
        }
    }
  }
}

TEST_CASE("gamma vanishes on g_{-1} and g_0 and shifts degree by one") {
  std::mt19937_64 rng(89);
  for (const auto& g : osp_generators(kSig)) {
    SymbolField s = random_symbol(kSig, kW, 2, rng);
    SymbolSum def = gamma_def(g, s);
    if (g.grade != 1) {
      CHECK(def.is_zero());
    } else {
      for (const auto& [deg, part] : def.parts()) CHECK(deg == 1);
    }
  }
}

TEST_CASE("gamma has constant coefficients") {
  // gamma(h)(f (x) v) = +/- f gamma(h)(1 (x) v) per coefficient parity
  std::mt19937_64 rng(97);
  for (const auto& g : osp_generators(kSig)) {
    if (g.grade != 1) continue;
    GVec h = g.phi.xi;
    const int hp = g.field.parity();
    for (int k = 1; k <= 3; ++k)
      for (const auto& m : fiber_basis(kSig, k))
        for (int fp = 0; fp <= 1; ++fp) {
          SuperPoly f = testutil::random_poly(kSig, rng, 2, fp, 2);
          SymbolField s = mono(kSig, kW, m, f);
          SymbolField lhs = gamma_closed(h, s);
          SymbolField unit = mono(kSig, kW, m, SuperPoly::constant(kSig, 1));
          SymbolField gu = gamma_closed(h, unit);
          SymbolField rhs(kSig, kW, k - 1);
          for (const auto& [m2, c] : gu.terms())
            rhs.add_term(m2, (hp && fp) ? -(f * c) : f * c);
          CHECK(lhs == rhs);
        }
  }
}

TEST_CASE("gamma on degree-one symbols is the weighted contraction") {
  std::mt19937_64 rng(101);
  for (const auto& g : osp_generators(kSig)) {
    if (g.grade != 1) continue;
    GVec h = g.phi.xi;
    SymbolField s = random_symbol(kSig, kW, 1, rng);
    SymbolField expect = interior(h, s);
    expect *= -(kW.lambda * kSig.superdim());
    CHECK(gamma_closed(h, s) == expect);
  }
}

TEST_CASE("N in low degrees") {
  std::mt19937_64 rng(103);
  for (SpaceSignature sig : {SpaceSignature{1, 0, 1}, {2, 1, 1}, {1, 1, 1}}) {
    Weights w{Rational(1, 2), Rational(3, 7)};
    Rational lam_d = w.lambda * sig.superdim();
    SymbolField s0 = random_symbol(sig, w, 0, rng);
    CHECK(op_n(s0).is_zero());
    SymbolField s1 = random_symbol(sig, w, 1, rng);
    SymbolField expect1 = sym_div(s1);
    expect1 *= Rational(-2) * lam_d;
    CHECK(op_n(s1) == expect1);
    SymbolField s2 = random_symbol(sig, w, 2, rng);
    SymbolField expect2 = sym_div(s2);
    expect2 *= Rational(-2) * (lam_d + 1);
    expect2 += op_g0(s2);
    CHECK(op_n(s2) == expect2);
  }
}

TEST_CASE("three casimir routes agree") {
  std::mt19937_64 rng(107);
  for (SpaceSignature sig : {SpaceSignature{1, 0, 1}, {1, 1, 1}}) {
    Weights w{Rational(1, 2), Rational(1, 3)};
    for (int k = 0; k <= 3; ++k)
      for (int trial = 0; trial < 3; ++trial) {
        SymbolField s = random_symbol(sig, w, k, rng, 2, 2);
        SymbolField closed = casimir_c(s, CasimirMode::ClosedForm);
        CHECK(casimir_c(s, CasimirMode::Decomposed) == closed);
        CHECK(casimir_c(s, CasimirMode::DualBasis) == closed);
      }
  }
}

TEST_CASE("full-sum casimir over the extended index set") {
  // -1/2 sum_{i,j} (-1)^i beta(O_j^i) beta(O_i^j), every generator realized
  // through the block decomposition; independent of the dual-basis route
  std::mt19937_64 rng(211);
  for (SpaceSignature sig : {SpaceSignature{1, 0, 1}, {1, 1, 1}}) {
    Weights w{Rational(1, 2), Rational(1, 3)};
    FormPair forms = build_forms(sig);
    const int N = sig.dims() + 2;
    std::vector<std::vector<VectorField>> fields(
        N, std::vector<VectorField>(N, VectorField(sig, 0)));
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) {
        GradedMatrix g = generator_O(forms.G, i, j);
        if (!g.is_zero()) fields[i][j] = realize(decompose_phi(g));
      }
    for (int k = 0; k <= 2; ++k) {
      SymbolField s = random_symbol(sig, w, k, rng, 2, 2);
      SymbolField full(sig, w, k);
      for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
          if (fields[i][j].is_zero() || fields[j][i].is_zero()) continue;
          SymbolField t = lie_symbol(fields[j][i], lie_symbol(fields[i][j], s));
          t *= Rational(forms.G.index_parity(i) ? 1 : -1, 2);
          full += t;
        }
      CHECK(full == casimir_c(s, CasimirMode::DualBasis));
      CHECK(full == casimir_c(s, CasimirMode::ClosedForm));
    }
  }
}

TEST_CASE("casimir scalar on degree-zero symbols") {
  for (SpaceSignature sig : {SpaceSignature{1, 0, 1}, {2, 1, 1}, {1, 1, 0}}) {
    Weights w{Rational(2, 3), Rational(4, 5)};
    Rational d(sig.superdim());
    std::mt19937_64 rng(109);
    SymbolField s = random_symbol(sig, w, 0, rng);
    SymbolField expect = s;
    expect *= d * d * w.delta * (1 - w.delta);
    CHECK(casimir_c(s) == expect);
  }
}

TEST_CASE("casimir commutes with the whole realized algebra") {
  std::mt19937_64 rng(113);
  for (const auto& g : osp_generators(kSig)) {
    SymbolField s = random_symbol(kSig, kW, 2, rng, 2, 2);
    CHECK(casimir_c(lie_symbol(g.field, s)) == lie_symbol(g.field, casimir_c(s)));
  }
}

TEST_CASE("the two casimirs differ by N") {
  std::mt19937_64 rng(127);
  for (SpaceSignature sig : {SpaceSignature{1, 0, 1}, {1, 1, 1}}) {
    Weights w{Rational(1, 2), Rational(1, 3)};
    for (int k = 0; k <= 3; ++k) {
      SymbolField s = random_symbol(sig, w, k, rng, 2, 2);
      SymbolSum curly = casimir_curly(s);
      SymbolSum expect = SymbolSum(casimir_c(s));
      expect += SymbolSum(op_n(s));
      CHECK(curly == expect);
    }
  }
}

TEST_CASE("casimir vanishes on low degrees when the superdimension is zero") {
  std::mt19937_64 rng(131);
  for (SpaceSignature sig : {SpaceSignature{2, 0, 1}, {1, 1, 1}}) {
    REQUIRE(sig.superdim() == 0);
    Weights w{Rational(1, 2), Rational(5, 9)};
    CHECK(casimir_c(random_symbol(sig, w, 0, rng)).is_zero());
    CHECK(casimir_c(random_symbol(sig, w, 1, rng)).is_zero());
  }
}

TEST_CASE("divergence is a cocycle along divergence-free fields") {
  // on degree-one symbols; in higher degree the defect of [L_X, div] is
  // what forces the fixed correction coefficient
  std::mt19937_64 rng(137);
  for (SpaceSignature sig : {SpaceSignature{2, 0, 1}, {1, 1, 1}}) {
    Weights w{Rational(1, 2), Rational(1, 3)};
    for (const auto& g : osp_generators(sig)) {
      REQUIRE(g.field.divergence().is_zero());
      SymbolField s = random_symbol(sig, w, 1, rng, 2, 2);
      CHECK(lie_symbol(g.field, sym_div(s)) == sym_div(lie_symbol(g.field, s)));
    }
  }
}

TEST_CASE("operator handles record their degree shifts") {
  std::mt19937_64 rng(139);
  for (const auto& h : operator_handles(kSig)) {
    for (int k = 2; k <= 4; ++k) {
      SymbolField s = random_symbol(kSig, kW, k, rng, 2, 2);
      SymbolField r = h.apply(s);
      if (!r.is_zero()) CHECK(r.degree() == k + h.degree_shift);
    }
  }
}

TEST_CASE("casimir matrices on the fiber basis") {
  Weights w{Rational(1, 2), Rational(1, 3)};
  for (SpaceSignature sig : {SpaceSignature{1, 0, 1}, {2, 0, 1}}) {
    for (int k = 0; k <= 3; ++k) {
      RatMat c = matrix_on_fiber(sig, w, k, 0,
                                 [](const SymbolField& s) { return casimir_c(s); });
      RatMat dual = matrix_on_fiber(sig, w, k, 0, [](const SymbolField& s) {
        return casimir_c(s, CasimirMode::DualBasis);
      });
      CHECK(c == dual);
      // C - R o T is scalar on the fiber
      RatMat rt = matrix_on_fiber(
          sig, w, k, 0, [](const SymbolField& s) { return op_r(op_t(s)); });
      rt *= Rational(-1);
      rt += c;
      for (int i = 0; i < rt.rows; ++i)
        for (int j = 0; j < rt.cols; ++j)
          if (i != j) CHECK(rt.at(i, j) == 0);
    }
  }
}
