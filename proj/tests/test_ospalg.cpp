#include "ospquant/ospalg.hpp"

#include <doctest.h>

#include <random>
#include <vector>

#include "test_util.hpp"

using namespace ospq;

namespace {

GVec small_e(SpaceSignature sig, int i) { return testutil::basis_vec(sig, i); }

GVec small_eps(SpaceSignature sig, int i) { return testutil::basis_vec(sig, i); }

GradedMatrix phi_inv_gminus(SpaceSignature sig, int i) {
  PhiDecomposition d(sig, sig.parity(i));
  d.v = small_e(sig, i);
  return compose_phi(d);
}

GradedMatrix phi_inv_gone(SpaceSignature sig, int i) {
  PhiDecomposition d(sig, sig.parity(i));
  d.xi = small_eps(sig, i);
  return compose_phi(d);
}

std::vector<GradedMatrix> all_generators(SpaceSignature sig) {
  FormPair forms = build_forms(sig);
  std::vector<GradedMatrix> out;
  const int N = sig.dims() + 2;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      GradedMatrix g = generator_O(forms.G, i, j);
      if (!g.is_zero()) out.push_back(std::move(g));
    }
  return out;
}

}  // namespace

TEST_CASE("form values") {
  SpaceSignature s101{1, 0, 1};
  FormPair f = build_forms(s101);
  CHECK(form_eval(f.G0, small_e(s101, 1), small_e(s101, 1)) == 1);
  // odd block: omega0(e2, e3) = e3^t J e2 with J = [[0,1],[-1,0]]
  CHECK(form_eval(f.G0, small_e(s101, 2), small_e(s101, 3)) == -1);
  CHECK(form_eval(f.G0, small_e(s101, 3), small_e(s101, 2)) == 1);

  SpaceSignature s110{1, 1, 0};
  FormPair f2 = build_forms(s110);
  CHECK(form_eval(f2.G0, small_e(s110, 2), small_e(s110, 2)) == -1);
}

TEST_CASE("form supersymmetry and parity") {
  for (SpaceSignature sig : {SpaceSignature{1, 0, 1}, {2, 1, 1}, {1, 1, 2}}) {
    FormPair f = build_forms(sig);
    CHECK(f.G.parity_consistent());
    CHECK(f.G0.parity_consistent());
    const int n = sig.dims();
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        Rational a = form_eval(f.G0, small_e(sig, i), small_e(sig, j));
        Rational b = form_eval(f.G0, small_e(sig, j), small_e(sig, i));
        if (sig.parity(i) && sig.parity(j))
          CHECK(a == -b);
        else
          CHECK(a == b);
      }
  }
}

TEST_CASE("musical isomorphisms") {
  SpaceSignature sig{1, 0, 1};
  FormPair f = build_forms(sig);
  GVec fl = flat(f.G0, small_e(sig, 1));
  CHECK(fl.c == small_eps(sig, 1).c);
  // sharp(eps^2) is read off the inverse of the odd block
  GVec sh = sharp(f.G0, small_eps(sig, 2));
  CHECK(sh.c == small_e(sig, 3).c);
  for (int i = 1; i <= sig.dims(); ++i) {
    GVec v = small_e(sig, i);
    CHECK(sharp(f.G0, flat(f.G0, v)).c == v.c);
  }
  // big space round trip as well
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    GVec v;
    v.parity = 0;
    for (int i = 0; i < f.G.dim(); ++i) v.c.push_back(testutil::small_rational(rng));
    CHECK(sharp(f.G, flat(f.G, v)).c == v.c);
    v.c.clear();
  }
}

TEST_CASE("generators preserve the form and vanish as stated") {
  for (SpaceSignature sig : {SpaceSignature{1, 0, 1}, {1, 1, 0}, {2, 1, 1}}) {
    FormPair forms = build_forms(sig);
    const int N = sig.dims() + 2;
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) {
        GradedMatrix g = generator_O(forms.G, i, j);
        CHECK(g.parity_consistent());
        CHECK(check_osp(g, forms.G));
        if (j == ext_pi(sig, i) && forms.G.index_parity(i) == 0)
          CHECK(g.is_zero());
      }
  }
}

TEST_CASE("generator relation under pi") {
  for (SpaceSignature sig : {SpaceSignature{1, 0, 1}, {1, 1, 1}}) {
    FormPair forms = build_forms(sig);
    const int N = sig.dims() + 2;
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) {
        int pi = forms.G.index_parity(i), pj = forms.G.index_parity(j);
        int a = -((pi & pj) ? -1 : 1) * ext_sign_s(sig, ext_pi(sig, j)) *
                ext_sign_s(sig, i);
        GradedMatrix lhs = generator_O(forms.G, ext_pi(sig, j), ext_pi(sig, i));
        GradedMatrix rhs = generator_O(forms.G, i, j);
        rhs *= Rational(a);
        CHECK(lhs == rhs);
      }
  }
}

TEST_CASE("check_osp rejects a bare rank-one matrix") {
  SpaceSignature sig{1, 0, 1};
  FormPair forms = build_forms(sig);
  GradedMatrix m(sig, true, 0);
  m.set(ext_pos_of_small(sig, 1), ext_pos_of_small(sig, 1), 1);
  CHECK_FALSE(check_osp(m, forms.G));
  CHECK(check_osp(GradedMatrix(sig, true, 0), forms.G));
  CHECK_THROWS_AS(decompose_phi(m), std::invalid_argument);
}

TEST_CASE("supertrace values") {
  SpaceSignature sig{2, 1, 1};
  CHECK(GradedMatrix::identity(sig, true).supertrace() == sig.superdim() + 2);
  CHECK(euler_element(sig).supertrace() == 0);
  FormPair forms = build_forms(sig);
  GradedMatrix g = generator_O(forms.G, 1, 3);
  CHECK(g.supertrace() == 0);
  // every osp element is supertraceless
  for (const auto& m : all_generators(sig)) CHECK(m.supertrace() == 0);
}

TEST_CASE("phi decomposition of the distinguished generators") {
  SpaceSignature sig{1, 1, 1};
  FormPair forms = build_forms(sig);
  const int op = ext_pos_oprime(sig);

  GradedMatrix eoo = generator_O(forms.G, op, op);
  PhiDecomposition d = decompose_phi(eoo);
  CHECK(d.a1 == 1);
  CHECK(d.b0.is_zero());
  CHECK(d.v.is_zero());
  CHECK(d.xi.is_zero());
  CHECK(eoo == euler_element(sig));

  for (int i = 1; i <= sig.dims(); ++i) {
    GradedMatrix gi = generator_O(forms.G, ext_pos_of_small(sig, i), op);
    PhiDecomposition di = decompose_phi(gi);
    CHECK(di.v.c == small_e(sig, i).c);
    CHECK(di.b0.is_zero());
    CHECK(di.a1 == 0);
    CHECK(di.xi.is_zero());
    CHECK(gi == phi_inv_gminus(sig, i));

    GradedMatrix hi = generator_O(forms.G, op, ext_pos_of_small(sig, i));
    PhiDecomposition ei = decompose_phi(hi);
    CHECK(ei.xi.c == small_eps(sig, i).c);
    CHECK(ei.v.is_zero());
    CHECK(ei.b0.is_zero());
    CHECK(ei.a1 == 0);
    CHECK(hi == phi_inv_gone(sig, i));
  }
}

TEST_CASE("phi round trip and small-block osp membership") {
  for (SpaceSignature sig : {SpaceSignature{1, 0, 1}, {1, 1, 1}, {2, 1, 1}}) {
    FormPair forms = build_forms(sig);
    for (const auto& m : all_generators(sig)) {
      PhiDecomposition d = decompose_phi(m);
      CHECK(compose_phi(d) == m);
      CHECK(check_osp(d.b0, forms.G0));
    }
  }
}

TEST_CASE("g_{-1} and g_1 are abelian") {
  SpaceSignature sig{1, 1, 1};
  for (int i = 1; i <= sig.dims(); ++i)
    for (int j = 1; j <= sig.dims(); ++j) {
      CHECK(phi_inv_gminus(sig, i).super_commutator(phi_inv_gminus(sig, j)).is_zero());
      CHECK(phi_inv_gone(sig, i).super_commutator(phi_inv_gone(sig, j)).is_zero());
    }
}

TEST_CASE("bracket of v with xi matches the rank-one formula") {
  for (SpaceSignature sig : {SpaceSignature{1, 0, 1}, {1, 1, 1}}) {
    FormPair forms = build_forms(sig);
    const int n = sig.dims();
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        GradedMatrix lhs =
            phi_inv_gminus(sig, i).super_commutator(phi_inv_gone(sig, j));
        PhiDecomposition d = decompose_phi(lhs);
        CHECK(d.v.is_zero());
        CHECK(d.xi.is_zero());
        // v (x) xi - (-1)^{v xi} xi^sharp (x) v^flat + (-1)^{v xi} <xi,v> Id
        GVec v = small_e(sig, i), xi = small_eps(sig, j);
        int koszul = (sig.parity(i) & sig.parity(j)) ? -1 : 1;
        GradedMatrix expect(sig, false, (sig.parity(i) + sig.parity(j)) & 1);
        expect.set(i - 1, j - 1, 1);
        GVec xs = sharp(forms.G0, xi);
        GVec vf = flat(forms.G0, v);
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b) {
            Rational val = expect.at(a, b);
            val -= Rational(koszul) * xs.c[a] * vf.c[b];
            expect.set(a, b, val);
          }
        if (i == j) {
          GradedMatrix id = GradedMatrix::identity(sig, false);
          id *= Rational(koszul);
          expect += id;
        }
        CHECK(d.g0_matrix() == expect);
      }
  }
}

TEST_CASE("sum of brackets [e_i, eps^i] is -d times the Euler element") {
  for (SpaceSignature sig : {SpaceSignature{1, 0, 1}, {1, 1, 1}, {2, 1, 1}}) {
    GradedMatrix acc(sig, true, 0);
    for (int i = 1; i <= sig.dims(); ++i)
      acc += phi_inv_gminus(sig, i).super_commutator(phi_inv_gone(sig, i));
    GradedMatrix expect = euler_element(sig);
    expect *= Rational(-sig.superdim());
    CHECK(acc == expect);
  }
}

TEST_CASE("ad of the Euler element grades the algebra") {
  SpaceSignature sig{1, 1, 1};
  GradedMatrix e = euler_element(sig);
  for (int i = 1; i <= sig.dims(); ++i) {
    GradedMatrix u = phi_inv_gminus(sig, i);
    GradedMatrix bu = e.super_commutator(u);
    u *= Rational(-1);
    CHECK(bu == u);
    GradedMatrix w = phi_inv_gone(sig, i);
    CHECK(e.super_commutator(w) == w);
  }
  FormPair forms = build_forms(sig);
  for (int i = 1; i <= sig.dims(); ++i)
    for (int j = 1; j <= sig.dims(); ++j) {
      GradedMatrix g0 = generator_O(forms.G, ext_pos_of_small(sig, i),
                                    ext_pos_of_small(sig, j));
      CHECK(e.super_commutator(g0).is_zero());
    }
}

TEST_CASE("killing form closed expression on generators") {
  SpaceSignature sig{1, 1, 1};
  FormPair forms = build_forms(sig);
  const int N = sig.dims() + 2;
  auto a_of = [&](int i, int j) {
    int pi = forms.G.index_parity(i), pj = forms.G.index_parity(j);
    return -((pi & pj) ? -1 : 1) * ext_sign_s(sig, ext_pi(sig, j)) *
           ext_sign_s(sig, i);
  };
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      for (int k = 0; k < N; ++k)
        for (int l = 0; l < N; ++l) {
          Rational got = killing(generator_O(forms.G, i, j),
                                 generator_O(forms.G, k, l));
          Rational expect = 0;
          if (j == k && i == l) expect += 1;
          if (j == ext_pi(sig, l) && i == ext_pi(sig, k))
            expect += a_of(ext_pi(sig, i), ext_pi(sig, j));
          expect *= forms.G.index_parity(i) ? 1 : -1;
          CHECK(got == expect);
        }
}

TEST_CASE("killing form values") {
  SpaceSignature sig{2, 1, 1};
  GradedMatrix e = euler_element(sig);
  CHECK(killing(e, e) == -1);
  CHECK(killing(e, GradedMatrix(sig, true, 0)) == 0);
}

TEST_CASE("dual basis pairing is the identity") {
  for (SpaceSignature sig : {SpaceSignature{1, 0, 1}, {1, 1, 0}, {1, 1, 1}}) {
    auto pairs = dual_basis(sig);
    CHECK(static_cast<int>(pairs.size()) == osp_dimension(sig));
    for (std::size_t a = 0; a < pairs.size(); ++a)
      for (std::size_t b = 0; b < pairs.size(); ++b) {
        Rational k = killing(pairs[a].basis, pairs[b].dual);
        CHECK(k == (a == b ? 1 : 0));
      }
  }
}

TEST_CASE("so(2,2) has dimension six") {
  CHECK(osp_dimension(SpaceSignature{1, 1, 0}) == 6);
  CHECK(static_cast<int>(dual_basis(SpaceSignature{1, 1, 0}).size()) == 6);
}

TEST_CASE("bracket closure and super Jacobi") {
  SpaceSignature sig{1, 0, 1};
  FormPair forms = build_forms(sig);
  auto gens = all_generators(sig);
  for (const auto& a : gens)
    for (const auto& b : gens) CHECK(check_osp(a.super_commutator(b), forms.G));

  std::mt19937_64 rng(23);
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  for (int trial = 0; trial < 60; ++trial) {
    const auto& a = gens[pick(rng)];
    const auto& b = gens[pick(rng)];
    const auto& c = gens[pick(rng)];
    GradedMatrix lhs = a.super_commutator(b.super_commutator(c));
    GradedMatrix rhs = a.super_commutator(b).super_commutator(c);
    GradedMatrix mid = b.super_commutator(a.super_commutator(c));
    if ((a.parity() & b.parity()) & 1)
      rhs -= mid;
    else
      rhs += mid;
    CHECK(lhs == rhs);
  }
}

TEST_CASE("killing form is invariant") {
  SpaceSignature sig{1, 0, 1};
  auto gens = all_generators(sig);
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  for (int trial = 0; trial < 80; ++trial) {
    const auto& a = gens[pick(rng)];
    const auto& b = gens[pick(rng)];
    const auto& c = gens[pick(rng)];
    CHECK(killing(a.super_commutator(b), c) == killing(a, b.super_commutator(c)));
  }
}
