#include "ospquant/weyl.hpp"

#include <doctest.h>

#include <random>

#include "test_util.hpp"

using namespace ospq;

namespace {

const SpaceSignature kSig{1, 0, 1};
const Weights kW{Rational(1, 2), Rational(1, 3)};

DiffOperator random_dop(SpaceSignature sig, Weights w, std::mt19937_64& rng,
                        int max_order = 2, int nterms = 3) {
  DiffOperator out(sig, w);
  std::uniform_int_distribution<int> expo(0, max_order);
  std::uniform_int_distribution<std::uint64_t> mask(
      0, (std::uint64_t(1) << sig.odd_count()) - 1);
  for (int t = 0; t < nterms; ++t) {
    DerivKey k;
    k.even.assign(sig.even_count(), 0);
    int budget = max_order;
    for (int i = 0; i < sig.even_count(); ++i) {
      k.even[i] = expo(rng) % (budget + 1);
      budget -= k.even[i];
    }
    if (sig.odd_count() && budget > 0) {
      k.odd = mask(rng);
      while (static_cast<int>(subset_size(k.odd)) > budget) k.odd &= k.odd - 1;
    }
    out.add_term(k, testutil::random_poly(sig, rng, 2, -1, 2));
  }
  return out;
}

DiffOperator dth(int i, Weights w = kW) {
  return DiffOperator::coordinate_derivative(kSig, w, 1 + i);
}

}  // namespace

TEST_CASE("application of simple operators") {
  SuperPoly x1 = SuperPoly::variable(kSig, 1);
  SuperPoly th1 = SuperPoly::variable(kSig, 2);
  SuperPoly th2 = SuperPoly::variable(kSig, 3);
  DiffOperator dx = DiffOperator::coordinate_derivative(kSig, kW, 1);
  CHECK(dx.apply(x1 * x1) == Rational(2) * x1);

  DiffOperator th1dth1(kSig, kW);
  {
    DerivKey k;
    k.even = {0};
    k.odd = 1;
    th1dth1.add_term(k, th1);
  }
  CHECK(th1dth1.apply(th1) == th1);

  // golden value for the application order: the rightmost derivative in
  // the written word acts first
  DiffOperator dd(kSig, kW);
  {
    DerivKey k;
    k.even = {0};
    k.odd = 3;
    dd.add_term(k, SuperPoly::constant(kSig, 1));
  }
  CHECK(dd.apply(th1 * th2) == SuperPoly::constant(kSig, -1));
}

TEST_CASE("composition by the super Leibniz rule") {
  SuperPoly x1 = SuperPoly::variable(kSig, 1);
  SuperPoly th1 = SuperPoly::variable(kSig, 2);
  SuperPoly th2 = SuperPoly::variable(kSig, 3);
  Weights w0{Rational(0), Rational(0)};

  DiffOperator dx = DiffOperator::coordinate_derivative(kSig, w0, 1);
  DiffOperator mulx = DiffOperator::multiplication(kSig, w0, x1);
  DiffOperator c1 = dop_compose(dx, mulx);
  DiffOperator expect1 =
      DiffOperator::multiplication(kSig, w0, SuperPoly::constant(kSig, 1));
  {
    DerivKey k;
    k.even = {1};
    expect1.add_term(k, x1);
  }
  CHECK(c1 == expect1);

  DiffOperator dt1 = dth(1, w0);
  DiffOperator mth1 = DiffOperator::multiplication(kSig, w0, th1);
  DiffOperator c2 = dop_compose(dt1, mth1);
  DiffOperator expect2 =
      DiffOperator::multiplication(kSig, w0, SuperPoly::constant(kSig, 1));
  {
    DerivKey k;
    k.even = {0};
    k.odd = 1;
    expect2.add_term(k, -th1);
  }
  CHECK(c2 == expect2);

  // (th1 d_th2) o (th2 d_th1) = th1 d_th1 + th1 th2 d_th1 d_th2
  DiffOperator a(kSig, w0), b(kSig, w0);
  {
    DerivKey k;
    k.even = {0};
    k.odd = 2;
    a.add_term(k, th1);
    DerivKey k2;
    k2.even = {0};
    k2.odd = 1;
    b.add_term(k2, th2);
  }
  DiffOperator c3 = dop_compose(a, b);
  DiffOperator expect3(kSig, w0);
  {
    DerivKey k;
    k.even = {0};
    k.odd = 1;
    expect3.add_term(k, th1);
    DerivKey k2;
    k2.even = {0};
    k2.odd = 3;
    expect3.add_term(k2, th1 * th2);
  }
  CHECK(c3 == expect3);
}

TEST_CASE("composition contract against application") {
  std::mt19937_64 rng(43);
  Weights w0{Rational(2, 3), Rational(0)};
  for (int trial = 0; trial < 40; ++trial) {
    DiffOperator a = random_dop(kSig, w0, rng);
    DiffOperator b = random_dop(kSig, w0, rng);
    SuperPoly f = testutil::random_poly(kSig, rng, 3);
    CHECK(dop_compose(a, b).apply(f) == a.apply(b.apply(f)));
  }
}

TEST_CASE("composition is associative") {
  std::mt19937_64 rng(47);
  Weights w0{Rational(0), Rational(0)};
  for (int trial = 0; trial < 15; ++trial) {
    DiffOperator a = random_dop(kSig, w0, rng, 2, 2);
    DiffOperator b = random_dop(kSig, w0, rng, 2, 2);
    DiffOperator c = random_dop(kSig, w0, rng, 2, 2);
    CHECK(dop_compose(dop_compose(a, b), c) == dop_compose(a, dop_compose(b, c)));
  }
}

TEST_CASE("weight mismatch is rejected") {
  DiffOperator a(kSig, Weights{Rational(1), Rational(1)});
  DiffOperator b(kSig, Weights{Rational(0), Rational(1)});
  CHECK_NOTHROW(dop_compose(a, b));
  DiffOperator c(kSig, Weights{Rational(0), Rational(0)});
  CHECK_THROWS_AS(dop_compose(a, c), std::invalid_argument);
}

TEST_CASE("total symbol and affine quantization invert each other") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 20; ++trial) {
    DiffOperator d = random_dop(kSig, kW, rng, 3, 4);
    CHECK(q_aff(sigma_aff(d)) == d);
  }
  SuperPoly f = testutil::random_poly(kSig, rng, 2);
  FiberKey e1{{1}, 0};
  DiffOperator d = q_aff(SymbolField::monomial(kSig, kW, e1, f));
  DiffOperator expect(kSig, kW);
  DerivKey k{{1}, 0};
  expect.add_term(k, f);
  CHECK(d == expect);
}

TEST_CASE("affine quantization in coordinate-free form") {
  // q_aff(f (x) v_1 v ... v v_k) = (-1)^k f L_{X^{v_1}} o ... o L_{X^{v_k}}
  std::mt19937_64 rng(59);
  std::uniform_int_distribution<int> gen(1, kSig.dims());
  for (int k = 1; k <= 3; ++k)
    for (int trial = 0; trial < 15; ++trial) {
      std::vector<int> word;
      for (int i = 0; i < k; ++i) word.push_back(gen(rng));
      auto norm = fiber_normalize(kSig, word);
      SuperPoly f = testutil::random_poly(kSig, rng, 2, -1, 2);
      DiffOperator acc = DiffOperator::multiplication(
          kSig, Weights{kW.lambda, Rational(0)}, SuperPoly::constant(kSig, 1));
      for (int i = 0; i < k; ++i) {
        VectorField x = realize_gminus(kSig, testutil::basis_vec(kSig, word[i]));
        acc = dop_compose(acc, lie_derivative_operator(x, kW.lambda));
      }
      DiffOperator rhs(kSig, kW);
      for (const auto& [key, c] : acc.terms())
        rhs.add_term(key, (k % 2 ? -f : f) * c);
      SymbolField lhs_sym(kSig, kW, k);
      if (norm) {
        SuperPoly cf = f;
        if (norm->second < 0) cf = -cf;
        lhs_sym.add_term(norm->first, cf);
      }
      CHECK(q_aff(lhs_sym) == rhs);
    }
}

TEST_CASE("principal symbol") {
  SuperPoly x1 = SuperPoly::variable(kSig, 1);
  DiffOperator d(kSig, kW);
  {
    DerivKey k{{1}, 1};  // x1 d_x1 d_th1
    d.add_term(k, x1);
    DerivKey k2{{1}, 0};
    d.add_term(k2, SuperPoly::constant(kSig, 1));
  }
  SymbolField top = principal_symbol(d, 2);
  SymbolField expect(kSig, kW, 2);
  expect.add_term(FiberKey{{1}, 1}, x1);
  CHECK(top == expect);
  CHECK(principal_symbol(d, 3).is_zero());
  CHECK_THROWS_AS(principal_symbol(d, 1), std::invalid_argument);
}

TEST_CASE("lie_dop basic values") {
  std::mt19937_64 rng(61);
  VectorField x = realize_gminus(kSig, testutil::basis_vec(kSig, 1));
  Weights w0{Rational(0), Rational(0)};
  DiffOperator d(kSig, w0);
  DerivKey k{{2}, 1};
  d.add_term(k, SuperPoly::constant(kSig, 3));
  CHECK(lie_dop(x, d).is_zero());

  SuperPoly f = testutil::random_poly(kSig, rng, 2);
  DiffOperator mf = DiffOperator::multiplication(kSig, w0, f);
  GVec eps1 = testutil::basis_vec(kSig, 1);
  VectorField xh = realize_gone(kSig, eps1);
  DiffOperator lf = lie_dop(xh, mf);
  CHECK(lf == DiffOperator::multiplication(kSig, w0, xh.apply(f)));
}

TEST_CASE("lie_dop is a representation of the realized algebra") {
  std::mt19937_64 rng(67);
  auto gens = osp_generators(kSig);
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  for (int trial = 0; trial < 20; ++trial) {
    const auto& g = gens[pick(rng)];
    const auto& h = gens[pick(rng)];
    DiffOperator d = random_dop(kSig, kW, rng, 2, 2);
    GradedMatrix bracket = compose_phi(g.phi).super_commutator(compose_phi(h.phi));
    VectorField xb = realize(decompose_phi(bracket));
    DiffOperator lhs = lie_dop(xb, d);
    DiffOperator rhs = lie_dop(g.field, lie_dop(h.field, d));
    DiffOperator cross = lie_dop(h.field, lie_dop(g.field, d));
    if (g.field.parity() && h.field.parity())
      rhs += cross;
    else
      rhs -= cross;
    CHECK(lhs == rhs);
  }
}

TEST_CASE("curly action matches the tensor action on g_{-1} and g_0") {
  std::mt19937_64 rng(71);
  for (const auto& g : osp_generators(kSig)) {
    if (g.grade == 1) continue;
    for (int k = 0; k <= 2; ++k) {
      SymbolField s(kSig, kW, k);
      auto basis = fiber_basis(kSig, k);
      std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
      s.add_term(basis[pick(rng)], testutil::random_poly(kSig, rng, 2, -1, 2));
      SymbolSum lhs = curly_l(g.field, s);
      CHECK(lhs == SymbolSum(lie_symbol(g.field, s)));
    }
  }
}
