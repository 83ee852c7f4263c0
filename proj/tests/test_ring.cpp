#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skein/coefficient.hpp"
#include "skein/dyadic.hpp"
#include "skein/error.hpp"

using namespace skein;

TEST_CASE("dyadic canonical form") {
  CHECK(Dyadic(BigInt(4), 2) == Dyadic(1));           // 4/4 = 1
  CHECK(Dyadic(BigInt(6), 1) == Dyadic(3));           // 6/2 = 3
  CHECK(Dyadic(BigInt(0), 7) == Dyadic::zero());
  CHECK(Dyadic(BigInt(3), 1).str() == "3/2^1");
  CHECK(Dyadic(5).str() == "5/2^0");
  CHECK(Dyadic(BigInt(-8), 3) == Dyadic(-1));
  CHECK(Dyadic::half().doubled() == Dyadic::one());
  CHECK(Dyadic(3).halved().str() == "3/2^1");
}

TEST_CASE("dyadic arithmetic") {
  Dyadic a(BigInt(3), 1);  // 3/2
  Dyadic b(BigInt(1), 2);  // 1/4
  CHECK((a + b).str() == "7/2^2");
  CHECK((a - b).str() == "5/2^2");
  CHECK((a * b).str() == "3/2^3");
  CHECK((-a).str() == "-3/2^1");
  CHECK(a + (-a) == Dyadic::zero());
  CHECK(a * Dyadic::zero() == Dyadic::zero());
  CHECK(Dyadic::one().is_one());
  CHECK(Dyadic(BigInt(2), 1).is_one());
  CHECK(Dyadic(BigInt(7), 0).is_integer());
  CHECK(!Dyadic::half().is_integer());
}

TEST_CASE("dyadic parse round trips") {
  for (const char* s : {"0/2^0", "1/2^0", "-3/2^2", "7/2^1", "12345678901234567891/2^5"}) {
    CHECK(Dyadic::parse(s).str() == s);
  }
  // Non-canonical input normalizes: an even numerator sheds factors of two.
  CHECK(Dyadic::parse("12345678901234567890/2^5").str() == "6172839450617283945/2^4");
  CHECK(Dyadic::parse("5") == Dyadic(5));
  CHECK(Dyadic::parse("-5") == Dyadic(-5));
  CHECK(Dyadic::parse("3/4") == Dyadic(BigInt(3), 2));
  CHECK(Dyadic::parse("6/2") == Dyadic(3));
  CHECK_THROWS_AS(Dyadic::parse(""), Error);
  CHECK_THROWS_AS(Dyadic::parse("1/3"), Error);
  CHECK_THROWS_AS(Dyadic::parse("x"), Error);
  CHECK_THROWS_AS(Dyadic::parse("1/2^"), Error);
}

TEST_CASE("generic coefficient arithmetic") {
  RingMode g = RingMode::generic_mode();
  Coefficient a = Coefficient::monomial(g, 2, Dyadic(1));   // A^2
  Coefficient b = Coefficient::monomial(g, -2, Dyadic(1));  // A^-2
  Coefficient s = a + b;
  CHECK(s.terms().size() == 2);
  CHECK((a - a).is_zero());
  CHECK((a * b).is_one());
  CHECK(Coefficient::one(g).is_one());
  CHECK((s * s).terms().size() == 3);  // A^4 + 2 + A^-4
  CHECK((s * s).terms().at(0) == Dyadic(2));
  CHECK(Coefficient::loop_scalar(g) == -(a + b));
  CHECK(a.is_monomial());
  CHECK(!s.is_monomial());
}

TEST_CASE("generic bar involution") {
  RingMode g = RingMode::generic_mode();
  Coefficient c = Coefficient::monomial(g, 3, Dyadic(5)) +
                  Coefficient::monomial(g, -1, Dyadic::half());
  Coefficient cb = c.bar();
  CHECK(cb.terms().at(-3) == Dyadic(5));
  CHECK(cb.terms().at(1) == Dyadic::half());
  CHECK(cb.bar() == c);
  CHECK(Coefficient::loop_scalar(g).bar() == Coefficient::loop_scalar(g));
}

TEST_CASE("cyclotomic polynomials") {
  // Phi_6 = x^2 - x + 1, Phi_10 = x^4 - x^3 + x^2 - x + 1, Phi_2 = x + 1.
  CHECK(cyclotomic_polynomial(2) == std::vector<BigInt>{1, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<BigInt>{1, -1, 1});
  CHECK(cyclotomic_polynomial(10) == std::vector<BigInt>{1, -1, 1, -1, 1});
  CHECK(cyclotomic_polynomial(14) == std::vector<BigInt>{1, -1, 1, -1, 1, -1, 1});
}

TEST_CASE("cyclotomic mode basics") {
  RingMode q = RingMode::cyclotomic(3);  // A a primitive 6th root: A^2 = A - 1
  Coefficient a2 = Coefficient::monomial(q, 2, Dyadic(1));
  Coefficient expect = Coefficient::monomial(q, 1, Dyadic(1)) -
                       Coefficient::one(q);
  CHECK(a2 == expect);
  CHECK(a2.coords().size() == 2);
  // A^6 = (A^2)^3 should be -1... actually A is a primitive 2N-th root with
  // 2N = 6, so A^6 = 1 and A^3 = -1.
  CHECK(Coefficient::monomial(q, 3, Dyadic(1)) == -Coefficient::one(q));
  CHECK(Coefficient::monomial(q, 6, Dyadic(1)).is_one());
  // The trivial-loop scalar -A^2 - A^-2 equals 1 at this root.
  CHECK(Coefficient::loop_scalar(q).is_one());
  CHECK_THROWS_AS(RingMode::cyclotomic(2), Error);
  CHECK_THROWS_AS(RingMode::cyclotomic(1), Error);
  CHECK_THROWS_AS(RingMode::cyclotomic(-3), Error);
}

TEST_CASE("cyclotomic bar and inverses") {
  for (int N : {3, 5, 7}) {
    RingMode q = RingMode::cyclotomic(N);
    Coefficient a = Coefficient::monomial(q, 1, Dyadic(1));
    Coefficient ainv = Coefficient::monomial(q, -1, Dyadic(1));
    CHECK((a * ainv).is_one());
    CHECK(a.bar() == ainv);
    Coefficient mix = Coefficient::monomial(q, 2, Dyadic(3)) +
                      Coefficient::monomial(q, 0, Dyadic::half());
    CHECK(mix.bar().bar() == mix);
    CHECK((mix * mix.bar()).bar() == mix * mix.bar());
  }
}

TEST_CASE("specialization generic -> cyclotomic") {
  RingMode g = RingMode::generic_mode();
  RingMode q = RingMode::cyclotomic(5);
  Coefficient c = Coefficient::monomial(g, 7, Dyadic(2)) +
                  Coefficient::monomial(g, -3, Dyadic::half());
  Coefficient spec = c.specialize(q);
  CHECK(spec.mode() == q);
  Coefficient direct = Coefficient::monomial(q, 7, Dyadic(2)) +
                       Coefficient::monomial(q, -3, Dyadic::half());
  CHECK(spec == direct);
  // Specialization is a ring homomorphism.
  Coefficient d = Coefficient::monomial(g, 1, Dyadic(1)) - Coefficient::one(g);
  CHECK((c * d).specialize(q) == c.specialize(q) * d.specialize(q));
  CHECK((c + d).specialize(q) == c.specialize(q) + d.specialize(q));
  // Identity on matching mode; no generalization.
  CHECK(spec.specialize(q) == spec);
  CHECK_THROWS_AS(spec.specialize(g), Error);
  // Accessor mode guards.
  CHECK_THROWS_AS(spec.terms(), Error);
  CHECK_THROWS_AS(c.coords(), Error);
  CHECK_THROWS_AS(c + spec, Error);
}
