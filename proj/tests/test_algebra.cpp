#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skein/algebra.hpp"
#include "skein/curves.hpp"
#include "skein/error.hpp"
#include "skein/rng.hpp"
#include "skein/surface.hpp"

using namespace skein;

namespace {

const IdealTriangulation& torus() {
  static IdealTriangulation T = IdealTriangulation::preset("punctured_torus");
  return T;
}

const RingMode kGen = RingMode::generic_mode();

SkeinElement dia(const Coloring& f) { return SkeinElement::diagram(kGen, f); }

Coefficient mono(long e, long c = 1) { return Coefficient::monomial(kGen, e, Dyadic(c)); }

}  // namespace

TEST_CASE("element construction and canonical form") {
  SkeinElement x = SkeinElement::zero(kGen);
  CHECK(x.is_zero());
  CHECK(weight(x) == -1);
  x.add_term({1, 1, 0}, mono(0));
  x.add_term({1, 1, 0}, mono(0, -1));
  CHECK(x.is_zero());  // cancelled back to zero
  x.add_term({1, 1, 2}, mono(2));
  x.add_term({0, 1, 1}, mono(0, 3));
  CHECK(x.terms().size() == 2);
  CHECK(weight(x) == 4);
  SkeinElement u = SkeinElement::unit(kGen, 3);
  CHECK(u.terms().size() == 1);
  CHECK(weight(u) == 0);
  CHECK(u.terms().begin()->first == Coloring{0, 0, 0});
}

TEST_CASE("unit laws") {
  SkeinElement u = SkeinElement::unit(kGen, 3);
  for (const Coloring& f : admissible_colorings(torus(), 4)) {
    SkeinElement x = dia(f);
    CHECK(product(torus(), u, x) == x);
    CHECK(product(torus(), x, u) == x);
  }
}

TEST_CASE("pinning product") {
  SkeinElement got = product(torus(), dia({1, 0, 1}), dia({0, 1, 1}));
  SkeinElement want = SkeinElement::zero(kGen);
  want.add_term({1, 1, 2}, mono(1));
  want.add_term({1, 1, 0}, mono(-1));
  CHECK(got == want);
}

TEST_CASE("parallel copies multiply to the doubled diagram") {
  CHECK(product(torus(), dia({1, 1, 0}), dia({1, 1, 0})) == dia({2, 2, 0}));
  CHECK(product(torus(), dia({0, 1, 1}), dia({0, 1, 1})) == dia({0, 2, 2}));
}

TEST_CASE("bilinearity") {
  SkeinElement x = dia({1, 0, 1}).scaled(mono(2)) + dia({1, 1, 0}).scaled(mono(0, 3));
  SkeinElement y = dia({0, 1, 1}) - dia({1, 1, 0});
  SkeinElement z = dia({1, 1, 2});
  SkeinElement lhs = product(torus(), x + y, z);
  SkeinElement rhs = product(torus(), x, z) + product(torus(), y, z);
  CHECK(lhs == rhs);
  CHECK(product(torus(), x.scaled(mono(3)), z) == product(torus(), x, z).scaled(mono(3)));
  CHECK(product(torus(), SkeinElement::zero(kGen), z).is_zero());
}

TEST_CASE("leading exponents of the pinning pair are antisymmetric") {
  CHECK(leading_exponent(torus(), {1, 0, 1}, {0, 1, 1}) == 1);
  CHECK(leading_exponent(torus(), {0, 1, 1}, {1, 0, 1}) == -1);
  CHECK(leading_exponent(torus(), {1, 1, 0}, {1, 1, 0}) == 0);
}

TEST_CASE("symbol extracts the top-weight part") {
  SkeinElement p = product(torus(), dia({1, 0, 1}), dia({0, 1, 1}));
  Symbol s = symbol(p);
  CHECK(s.weight == 4);
  REQUIRE(s.leading.size() == 1);
  CHECK(s.leading.begin()->first == Coloring{1, 1, 2});
  CHECK(s.leading.begin()->second == mono(1));
  CHECK_THROWS_AS(symbol(SkeinElement::zero(kGen)), Error);
}

TEST_CASE("bar is an anti-homomorphism on products") {
  SkeinElement x = dia({1, 0, 1});
  SkeinElement y = dia({1, 1, 2});
  CHECK(product(torus(), x, y).bar() == product(torus(), y, x));
  SkeinElement mixed = dia({1, 0, 1}).scaled(mono(3)) + dia({0, 1, 1}).scaled(mono(-2, 5));
  CHECK(mixed.bar().bar() == mixed);
}

TEST_CASE("associativity on a hand-picked triple") {
  SkeinElement x = dia({1, 0, 1});
  SkeinElement y = dia({0, 1, 1});
  SkeinElement z = dia({1, 1, 0});
  SkeinElement lhs = product(torus(), product(torus(), x, y), z);
  SkeinElement rhs = product(torus(), x, product(torus(), y, z));
  CHECK(lhs == rhs);
  CHECK(!lhs.is_zero());
}

TEST_CASE("specialization commutes with the product") {
  RingMode q = RingMode::cyclotomic(3);
  SkeinElement x = dia({1, 0, 1}) + dia({1, 1, 0}).scaled(mono(2));
  SkeinElement y = dia({0, 1, 1});
  SkeinElement spec_after = product(torus(), x, y).specialize(q);
  SkeinElement spec_before = product(torus(), x.specialize(q), y.specialize(q));
  CHECK(spec_after == spec_before);
  CHECK(spec_after.mode() == q);
}

TEST_CASE("mode mismatches are rejected") {
  RingMode q = RingMode::cyclotomic(3);
  SkeinElement x = dia({1, 0, 1});
  SkeinElement y = SkeinElement::diagram(q, {0, 1, 1});
  CHECK_THROWS_AS(product(torus(), x, y), Error);
  CHECK_THROWS_AS(x + y, Error);
}

TEST_CASE("products agree across worker counts") {
  Rng rng(7);
  std::vector<Coloring> pool = admissible_colorings(torus(), 5);
  for (int i = 0; i < 5; ++i) {
    SkeinElement x = random_element(rng, kGen, pool, 3);
    SkeinElement y = random_element(rng, kGen, pool, 3);
    SkeinElement seq = product(torus(), x, y, kDefaultCrossingBound, 1);
    SkeinElement par = product(torus(), x, y, kDefaultCrossingBound, 4);
    CHECK(seq == par);
  }
}

TEST_CASE("crossing bound errors identify the offending pair") {
  try {
    product(torus(), dia({2, 2, 2}), dia({2, 2, 2}), 3);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == "crossing_bound");
    CHECK(std::string(e.what()).find("2,2,2") != std::string::npos);
  }
}

TEST_CASE("four-punctured sphere products stay admissible") {
  IdealTriangulation S = IdealTriangulation::preset("four_punctured_sphere");
  std::vector<Coloring> pool = admissible_colorings(S, 4);
  REQUIRE(!pool.empty());
  Rng rng(11);
  for (int i = 0; i < 10; ++i) {
    const Coloring& f = rng.pick(pool);
    const Coloring& g = rng.pick(pool);
    SkeinElement p = product(S, SkeinElement::diagram(kGen, f), SkeinElement::diagram(kGen, g));
    CHECK(!p.is_zero());
    for (const auto& [col, coeff] : p.terms()) {
      CHECK(is_admissible(S, col));
      CHECK(!coeff.is_zero());
    }
    CHECK(symbol(p).leading.begin()->first == geometric_sum(f, g));
  }
}
