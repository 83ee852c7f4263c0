#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "skein/algebra.hpp"
#include "skein/coefficient.hpp"
#include "skein/curves.hpp"
#include "skein/error.hpp"

namespace skein {

// Deterministic sampler: a fixed engine (mt19937_64, whose output sequence is
// pinned by the standard) with plain modulo draws, so identical seeds give
// identical samples on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t raw() { return eng_(); }

  // Uniform in [0, n).
  int below(int n) {
    if (n <= 0) fail("domain", "empty sample range");
    return static_cast<int>(eng_() % static_cast<std::uint64_t>(n));
  }

  // Uniform in [lo, hi].
  long range(long lo, long hi) {
    if (hi < lo) fail("domain", "empty sample range");
    return lo + static_cast<long>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  template <typename T>
  const T& pick(const std::vector<T>& pool) {
    if (pool.empty()) fail("domain", "cannot sample from an empty pool");
    return pool[static_cast<std::size_t>(below(static_cast<int>(pool.size())))];
  }

 private:
  std::mt19937_64 eng_;
};

// A random nonzero dyadic p / 2^k with |p| <= 8, k <= 2.
inline Dyadic random_dyadic(Rng& rng) {
  long p = rng.range(-8, 8);
  if (p == 0) p = 1;
  return Dyadic(BigInt(p), static_cast<unsigned>(rng.below(3)));
}

// A random coefficient: 1 to 3 monomials with exponents in [-4, 4].
inline Coefficient random_coefficient(Rng& rng, const RingMode& mode) {
  Coefficient c = Coefficient::zero(mode);
  int terms = 1 + rng.below(3);
  for (int i = 0; i < terms; ++i)
    c += Coefficient::monomial(mode, rng.range(-4, 4), random_dyadic(rng));
  if (c.is_zero()) c = Coefficient::one(mode);
  return c;
}

// A random element supported on 1 to max_terms colorings drawn from the pool.
inline SkeinElement random_element(Rng& rng, const RingMode& mode,
                                   const std::vector<Coloring>& pool, int max_terms) {
  SkeinElement x(mode);
  int terms = 1 + rng.below(max_terms);
  for (int i = 0; i < terms; ++i) x.add_term(rng.pick(pool), random_coefficient(rng, mode));
  return x;
}

}  // namespace skein
