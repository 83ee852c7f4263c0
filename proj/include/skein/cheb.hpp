#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "skein/algebra.hpp"
#include "skein/coefficient.hpp"
#include "skein/curves.hpp"
#include "skein/surface.hpp"

namespace skein {

// Chebyshev polynomial of the first kind, normalized so that T_0 = 2,
// T_1 = x, T_{n+1} = x T_n - T_{n-1}.  Dense integer coefficients,
// constant term first.
struct ChebPoly {
  int k = 0;
  std::vector<BigInt> coeffs;
};

// By the recursion (memoized).
ChebPoly cheb_poly(int k);

// Independent closed form: T_k = sum_i (-1)^i k/(k-i) C(k-i,i) x^(k-2i)
// for k >= 1 (and T_0 = 2), used to cross-check the recursion.
ChebPoly cheb_poly_closed_form(int k);

// x^m in the T-basis: the (k, c) pairs with x^m = sum c * T_k.  Exact over
// Z[1/2] (T_0 = 2 makes halving necessary); sorted by k, zero terms omitted.
std::vector<std::pair<int, Dyadic>> power_to_cheb(int m);

// A basis label for a product of threaded components: factors (J, k) meaning
// T_k applied to the simple closed curve with coloring J.  Kept sorted; the
// empty key is the unit.  Factors with k = 0 never appear (T_0 = 2 folds
// into the coefficient).
using ThreadKey = std::vector<std::pair<Coloring, int>>;

// A linear combination of threaded products with ring coefficients.
class ThreadedElement {
 public:
  ThreadedElement() : mode_(RingMode::generic_mode()) {}
  explicit ThreadedElement(RingMode mode) : mode_(mode) {}

  static ThreadedElement zero(RingMode mode) { return ThreadedElement(mode); }

  const RingMode& mode() const { return mode_; }
  const std::map<ThreadKey, Coefficient>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Canonicalizes: sorts the key, folds each k = 0 factor into the
  // coefficient as a factor of 2, and drops terms that cancel to zero.
  void add_term(ThreadKey key, const Coefficient& c);

  bool operator==(const ThreadedElement& o) const {
    return mode_ == o.mode_ && terms_ == o.terms_;
  }
  bool operator!=(const ThreadedElement& o) const { return !(*this == o); }

  std::string str() const;

 private:
  RingMode mode_;
  std::map<ThreadKey, Coefficient> terms_;
};

// Basis change simple-diagram -> threaded: each coloring is decomposed into
// primitive components with multiplicities, and each multiplicity m is
// rewritten through x^m = sum c T_k independently per component.
ThreadedElement to_threaded(const IdealTriangulation& T, const SkeinElement& x);

// Inverse basis change: substitute the T_k expansions and multiply out.
// Parallel copies of disjoint components multiply by adding colorings, so no
// skein product is needed.  Repeated components within one key are allowed
// (the factor polynomials are multiplied first).
SkeinElement expand_threaded(const IdealTriangulation& T, const ThreadedElement& t);

// Threading map: every component of every diagram is threaded with T_N (a
// component of multiplicity m contributes T_N(J)^m), expanded back to the
// simple-diagram basis.
SkeinElement thread_tau(const IdealTriangulation& T, const SkeinElement& x, int N);

// Rewrites every factor exponent k >= N through T_k = T_N T_{k-N} - T_{|k-2N|}
// until each component carries at most a pair of factors (J, aN), (J, r) with
// r < N: coefficients in the threaded-multiple-of-N subalgebra times residual
// exponents below N.  The expanded element is unchanged.
ThreadedElement reduce_mod_N(const ThreadedElement& t, int N);

// --- Independent annulus model ---------------------------------------------
//
// The skein algebra of the annulus is the polynomial ring on one loop x; over
// the subring generated by t = T_N(x) it is a free module with basis
// T_0(x), ..., T_{N-1}(x).  Everything below is computed purely from the
// Chebyshev product-to-sum identity, independent of the surface engine.

// Dense polynomial in t over Z[1/2], constant term first, trailing zeros
// stripped (so equality is structural).
using PolyT = std::vector<Dyadic>;

PolyT poly_t_add(const PolyT& a, const PolyT& b);
PolyT poly_t_scale(const PolyT& a, const Dyadic& s);
PolyT poly_t_shift(const PolyT& a);  // multiply by t

// Coordinates of an element in the basis T_0, ..., T_{N-1} over Z[1/2][t].
struct AnnulusElement {
  std::vector<PolyT> coords;  // length N
};

AnnulusElement annulus_reduce(int m, int N);  // T_m(x) in the basis

// Matrix of multiplication by T_k on the basis, entries M[i][j] = coefficient
// of T_i in T_k * T_j after reduction.
std::vector<std::vector<PolyT>> annulus_mult_matrix(int k, int N);

PolyT annulus_matrix_trace(const std::vector<std::vector<PolyT>>& M);

}  // namespace skein
