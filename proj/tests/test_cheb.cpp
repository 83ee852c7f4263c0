#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "skein/algebra.hpp"
#include "skein/cheb.hpp"
#include "skein/curves.hpp"
#include "skein/error.hpp"
#include "skein/surface.hpp"

using namespace skein;

namespace {

const IdealTriangulation& torus() {
  static IdealTriangulation T = IdealTriangulation::preset("punctured_torus");
  return T;
}

const RingMode kGen = RingMode::generic_mode();

using ZP = std::vector<BigInt>;

ZP zmul(const ZP& a, const ZP& b) {
  if (a.empty() || b.empty()) return {};
  ZP r(a.size() + b.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

}  // namespace

TEST_CASE("small Chebyshev polynomials") {
  CHECK(cheb_poly(0).coeffs == ZP{2});
  CHECK(cheb_poly(1).coeffs == ZP{0, 1});
  CHECK(cheb_poly(2).coeffs == ZP{-2, 0, 1});
  CHECK(cheb_poly(3).coeffs == ZP{0, -3, 0, 1});
  CHECK(cheb_poly(5).coeffs == ZP{0, 5, 0, -5, 0, 1});
  CHECK_THROWS_AS(cheb_poly(-1), Error);
}

TEST_CASE("closed form agrees with the recursion") {
  for (int k = 0; k <= 30; ++k) {
    CAPTURE(k);
    CHECK(cheb_poly(k).coeffs == cheb_poly_closed_form(k).coeffs);
  }
}

TEST_CASE("monomials in the Chebyshev basis") {
  // x^0 = (1/2) T_0, x^2 = T_2 + T_0, x^5 = T_5 + 5 T_3 + 10 T_1.
  auto m0 = power_to_cheb(0);
  REQUIRE(m0.size() == 1);
  CHECK(m0[0] == std::pair<int, Dyadic>{0, Dyadic::half()});
  auto m2 = power_to_cheb(2);
  REQUIRE(m2.size() == 2);
  CHECK(m2[0] == std::pair<int, Dyadic>{0, Dyadic::one()});
  CHECK(m2[1] == std::pair<int, Dyadic>{2, Dyadic::one()});
  auto m5 = power_to_cheb(5);
  REQUIRE(m5.size() == 3);
  CHECK(m5[0] == std::pair<int, Dyadic>{1, Dyadic(10)});
  CHECK(m5[1] == std::pair<int, Dyadic>{3, Dyadic(5)});
  CHECK(m5[2] == std::pair<int, Dyadic>{5, Dyadic::one()});
}

TEST_CASE("power_to_cheb inverts the polynomial expansion") {
  for (int m = 0; m <= 12; ++m) {
    CAPTURE(m);
    // Sum c_k T_k must equal x^m, computed with doubled integer coefficients
    // to stay in Z (each c_k is a dyadic with exponent <= 1).
    ZP sum;
    for (const auto& [k, c] : power_to_cheb(m)) {
      ZP term = cheb_poly(k).coeffs;
      BigInt num = c.numerator();
      unsigned ex = c.exponent();
      REQUIRE(ex <= 1);
      for (BigInt& t : term) t *= num * (ex == 0 ? 2 : 1);
      if (term.size() > sum.size()) sum.resize(term.size(), BigInt(0));
      for (std::size_t i = 0; i < term.size(); ++i) sum[i] += term[i];
    }
    ZP want(static_cast<std::size_t>(m) + 1, BigInt(0));
    want[static_cast<std::size_t>(m)] = 2;  // doubled x^m
    CHECK(sum == want);
  }
}

TEST_CASE("threaded element canonical form") {
  ThreadedElement t(kGen);
  CHECK(t.is_zero());
  Coloring s = {1, 1, 0};
  Coloring r = {0, 1, 1};
  // Unsorted keys are sorted.
  t.add_term({{s, 2}, {r, 1}}, Coefficient::one(kGen));
  REQUIRE(t.terms().size() == 1);
  ThreadKey key = t.terms().begin()->first;
  CHECK(key[0].first == r);
  CHECK(key[1].first == s);
  // k = 0 factors fold into the coefficient as a factor of 2.
  ThreadedElement u(kGen);
  u.add_term({{s, 0}}, Coefficient::one(kGen));
  REQUIRE(u.terms().size() == 1);
  CHECK(u.terms().begin()->first.empty());
  CHECK(u.terms().begin()->second == Coefficient::from_dyadic(kGen, Dyadic(2)));
  // Cancellation removes the term.
  ThreadedElement v(kGen);
  v.add_term({{s, 1}}, Coefficient::one(kGen));
  v.add_term({{s, 1}}, -Coefficient::one(kGen));
  CHECK(v.is_zero());
}

TEST_CASE("to_threaded on basic inputs") {
  // A single curve is T_1 of itself.
  SkeinElement x = SkeinElement::diagram(kGen, {1, 1, 0});
  ThreadedElement t = to_threaded(torus(), x);
  REQUIRE(t.terms().size() == 1);
  CHECK(t.terms().begin()->first == ThreadKey{{Coloring{1, 1, 0}, 1}});
  CHECK(t.terms().begin()->second.is_one());
  // The doubled curve: x^2 = T_2 + T_0 gives (S,2) with 1 and the unit with 2.
  ThreadedElement d = to_threaded(torus(), SkeinElement::diagram(kGen, {2, 2, 0}));
  REQUIRE(d.terms().size() == 2);
  ThreadedElement want(kGen);
  want.add_term({{{1, 1, 0}, 2}}, Coefficient::one(kGen));
  want.add_term({}, Coefficient::from_dyadic(kGen, Dyadic(2)));
  CHECK(d == want);
  // The unit maps to the empty key.
  ThreadedElement e = to_threaded(torus(), SkeinElement::unit(kGen, 3));
  REQUIRE(e.terms().size() == 1);
  CHECK(e.terms().begin()->first.empty());
  CHECK(e.terms().begin()->second.is_one());
}

TEST_CASE("expand_threaded inverts to_threaded") {
  for (const Coloring& f : admissible_colorings(torus(), 6)) {
    CAPTURE(f[0]);
    CAPTURE(f[1]);
    CAPTURE(f[2]);
    SkeinElement x = SkeinElement::diagram(kGen, f);
    CHECK(expand_threaded(torus(), to_threaded(torus(), x)) == x);
  }
  // A combination with coefficients.
  SkeinElement mix = SkeinElement::diagram(kGen, {2, 2, 0}).scaled(
                         Coefficient::monomial(kGen, 3, Dyadic::half())) +
                     SkeinElement::diagram(kGen, {1, 1, 2}).scaled(
                         Coefficient::monomial(kGen, -1, Dyadic(3)));
  CHECK(expand_threaded(torus(), to_threaded(torus(), mix)) == mix);
}

TEST_CASE("threading map") {
  // tau on a single curve at N=3 expands T_3: S^3 - 3S -> {3S: 1, S: -3}.
  Coloring s = {1, 1, 0};
  SkeinElement tau = thread_tau(torus(), SkeinElement::diagram(kGen, s), 3);
  SkeinElement want = SkeinElement::zero(kGen);
  want.add_term({3, 3, 0}, Coefficient::one(kGen));
  want.add_term(s, Coefficient::from_dyadic(kGen, Dyadic(-3)));
  CHECK(tau == want);
  // tau of the unit is the unit.
  CHECK(thread_tau(torus(), SkeinElement::unit(kGen, 3), 3) ==
        SkeinElement::unit(kGen, 3));
  // The symbol of tau(S) is the single key N * f_S.
  Symbol sym = symbol(tau);
  REQUIRE(sym.leading.size() == 1);
  CHECK(sym.leading.begin()->first == Coloring{3, 3, 0});
  // tau of a doubled curve threads each copy: T_3(S)^2 expanded.
  SkeinElement tau2 = thread_tau(torus(), SkeinElement::diagram(kGen, {2, 2, 0}), 3);
  SkeinElement by_hand = SkeinElement::zero(kGen);
  // (S^3 - 3S)^2 = S^6 - 6 S^4 + 9 S^2 with parallel copies adding colorings.
  by_hand.add_term({6, 6, 0}, Coefficient::one(kGen));
  by_hand.add_term({4, 4, 0}, Coefficient::from_dyadic(kGen, Dyadic(-6)));
  by_hand.add_term({2, 2, 0}, Coefficient::from_dyadic(kGen, Dyadic(9)));
  CHECK(tau2 == by_hand);
  CHECK_THROWS_AS(thread_tau(torus(), SkeinElement::diagram(kGen, s), 4), Error);
}

TEST_CASE("reduction modulo N in the threaded basis") {
  Coloring s = {1, 1, 0};
  RingMode g = kGen;
  // (S,3) at N=3 is already reduced.
  ThreadedElement t3(g);
  t3.add_term({{s, 3}}, Coefficient::one(g));
  CHECK(reduce_mod_N(t3, 3) == t3);
  // (S,4) at N=3: T_4 = T_3 T_1 - T_2.
  ThreadedElement t4(g);
  t4.add_term({{s, 4}}, Coefficient::one(g));
  ThreadedElement want(g);
  want.add_term({{s, 3}, {s, 1}}, Coefficient::one(g));
  want.add_term({{s, 2}}, -Coefficient::one(g));
  ThreadedElement got = reduce_mod_N(t4, 3);
  CHECK(got == want);
  // Reduction preserves the expanded element and is idempotent.
  CHECK(expand_threaded(torus(), got) == expand_threaded(torus(), t4));
  CHECK(reduce_mod_N(got, 3) == got);
  // Every reduced key has at most one multiple-of-N exponent and one
  // residual exponent below N per component.
  ThreadedElement t8(g);
  t8.add_term({{s, 8}}, Coefficient::one(g));
  ThreadedElement r8 = reduce_mod_N(t8, 3);
  CHECK(expand_threaded(torus(), r8) == expand_threaded(torus(), t8));
  for (const auto& [key, coeff] : r8.terms()) {
    int residues = 0;
    for (const auto& [comp, k] : key) {
      CHECK(k >= 1);
      if (k % 3 != 0) {
        ++residues;
        CHECK(k < 3);
      }
    }
    CHECK(residues <= 1);
  }
}

TEST_CASE("annulus reduction basics") {
  // T_m for m < N is a basis vector.
  for (int N : {3, 5}) {
    for (int m = 0; m < N; ++m) {
      AnnulusElement e = annulus_reduce(m, N);
      REQUIRE(e.coords.size() == static_cast<std::size_t>(N));
      for (int i = 0; i < N; ++i) {
        if (i == m) {
          CHECK(e.coords[static_cast<std::size_t>(i)] == PolyT{Dyadic::one()});
        } else {
          CHECK(e.coords[static_cast<std::size_t>(i)].empty());
        }
      }
    }
    // T_N itself reduces to (t/2) e_0 (T_N = t and t e_0 = t * (T_0/2)).
    AnnulusElement en = annulus_reduce(N, N);
    CHECK(en.coords[0] == PolyT{Dyadic::zero(), Dyadic::half()});
  }
}

TEST_CASE("annulus multiplication matrices") {
  // k = 0: T_0 = 2 acts as 2 * identity.
  auto m0 = annulus_mult_matrix(0, 3);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i == j) {
        CHECK(m0[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] ==
              PolyT{Dyadic(2)});
      } else {
        CHECK(m0[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].empty());
      }
    }
  }
  // Trace at k = N is N * t; at k coprime to N it vanishes.
  CHECK(annulus_matrix_trace(annulus_mult_matrix(3, 3)) ==
        PolyT{Dyadic::zero(), Dyadic(3)});
  CHECK(annulus_matrix_trace(annulus_mult_matrix(1, 3)).empty());
  CHECK(annulus_matrix_trace(annulus_mult_matrix(2, 3)).empty());
  CHECK(annulus_matrix_trace(annulus_mult_matrix(5, 5)) ==
        PolyT{Dyadic::zero(), Dyadic(5)});
}
