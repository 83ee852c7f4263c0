#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace skein {

using BigInt = boost::multiprecision::cpp_int;

// Element of Z[1/2]: numerator / 2^exponent, kept canonical at all times
// (numerator odd or zero; exponent zero when the numerator is zero).
// Canonical form makes equality structural and the string form unique.
class Dyadic {
 public:
  Dyadic() : num_(0), exp_(0) {}
  Dyadic(long n) : num_(n), exp_(0) { canonicalize(); }  // NOLINT: implicit by design
  Dyadic(BigInt n) : num_(std::move(n)), exp_(0) { canonicalize(); }
  Dyadic(BigInt numerator, unsigned exponent)
      : num_(std::move(numerator)), exp_(exponent) {
    canonicalize();
  }

  static Dyadic zero() { return Dyadic(); }
  static Dyadic one() { return Dyadic(1); }
  static Dyadic half() { return Dyadic(1, 1); }

  const BigInt& numerator() const { return num_; }
  unsigned exponent() const { return exp_; }

  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return exp_ == 0 && num_ == 1; }
  bool is_integer() const { return exp_ == 0; }

  Dyadic operator-() const;
  Dyadic operator+(const Dyadic& o) const;
  Dyadic operator-(const Dyadic& o) const;
  Dyadic operator*(const Dyadic& o) const;
  Dyadic& operator+=(const Dyadic& o) { return *this = *this + o; }
  Dyadic& operator-=(const Dyadic& o) { return *this = *this - o; }
  Dyadic& operator*=(const Dyadic& o) { return *this = *this * o; }

  // Exact division by 2^k (always defined in Z[1/2]).
  Dyadic halved(unsigned k = 1) const { return Dyadic(num_, exp_ + k); }
  Dyadic doubled() const { return *this * Dyadic(2); }

  bool operator==(const Dyadic& o) const { return num_ == o.num_ && exp_ == o.exp_; }
  bool operator!=(const Dyadic& o) const { return !(*this == o); }

  // Canonical string "p/2^k" (e.g. "3/2^1", "5/2^0", "0/2^0").
  std::string str() const;

  // Accepts "p", "p/2^k", or "p/q" with q a literal power of two.  Any other
  // denominator is a domain error: the ring is Z[1/2], not Q.
  static Dyadic parse(const std::string& text);

 private:
  void canonicalize();

  BigInt num_;
  unsigned exp_;
};

}  // namespace skein
