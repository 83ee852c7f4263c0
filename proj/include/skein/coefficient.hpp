#pragma once

#include <map>
#include <string>
#include <vector>

#include "skein/dyadic.hpp"

namespace skein {

// Coefficient ring mode.  N == 0 selects the generic ring Z[1/2][A, A^-1];
// N odd and >= 3 selects the quotient Z[1/2][A] / (Phi_2N(A)), i.e. the
// specialization of A to a primitive 2N-th root of unity.
struct RingMode {
  int N = 0;

  bool generic() const { return N == 0; }
  bool operator==(const RingMode& o) const { return N == o.N; }
  bool operator!=(const RingMode& o) const { return N != o.N; }
  static RingMode generic_mode() { return RingMode{0}; }
  static RingMode cyclotomic(int N);  // validates N odd, >= 3
  std::string str() const;
};

// nth cyclotomic polynomial over Z, computed by exact division of x^n - 1 by
// the product of the cyclotomic polynomials of the proper divisors of n.
// Returned dense, constant term first, leading coefficient 1.  Memoized.
const std::vector<BigInt>& cyclotomic_polynomial(int n);

// Element of the coefficient ring in one of the two modes.
//
// Generic: sparse Laurent polynomial, exponent -> nonzero Dyadic.
// Cyclotomic: dense power-basis vector of length deg Phi_2N = phi(2N),
// coordinates of the class modulo Phi_2N.  Both forms are canonical, so
// equality is structural.
class Coefficient {
 public:
  Coefficient() : mode_{0} {}  // generic zero
  explicit Coefficient(RingMode mode);

  static Coefficient zero(RingMode mode) { return Coefficient(mode); }
  static Coefficient one(RingMode mode) { return monomial(mode, 0, Dyadic::one()); }
  static Coefficient from_dyadic(RingMode mode, const Dyadic& d) {
    return monomial(mode, 0, d);
  }
  // c * A^exponent in the given mode (negative exponents fine in both modes).
  static Coefficient monomial(RingMode mode, long exponent, const Dyadic& c);
  // Scalar of a trivial loop: -A^2 - A^-2.
  static Coefficient loop_scalar(RingMode mode);

  const RingMode& mode() const { return mode_; }
  bool is_zero() const;
  bool is_one() const;

  Coefficient operator-() const;
  Coefficient operator+(const Coefficient& o) const;
  Coefficient operator-(const Coefficient& o) const;
  Coefficient operator*(const Coefficient& o) const;
  Coefficient& operator+=(const Coefficient& o) { return *this = *this + o; }
  Coefficient& operator-=(const Coefficient& o) { return *this = *this - o; }
  Coefficient& operator*=(const Coefficient& o) { return *this = *this * o; }
  bool operator==(const Coefficient& o) const;
  bool operator!=(const Coefficient& o) const { return !(*this == o); }

  // Ring involution A -> A^-1 (coefficientwise identity on Z[1/2]).
  Coefficient bar() const;

  // Generic -> cyclotomic specialization (A to the root).  Identity when the
  // target mode equals the current mode; error on cyclotomic -> generic.
  Coefficient specialize(RingMode target) const;

  // Generic accessors.
  const std::map<long, Dyadic>& terms() const;
  // True when the value is d * A^e for a single exponent e (generic mode).
  bool is_monomial() const;

  // Cyclotomic accessors.
  const std::vector<Dyadic>& coords() const;

  std::string str() const;

 private:
  void require_same_mode(const Coefficient& o) const;

  RingMode mode_;
  std::map<long, Dyadic> terms_;   // generic
  std::vector<Dyadic> coords_;     // cyclotomic, size phi(2N)
};

}  // namespace skein
