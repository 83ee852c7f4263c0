#pragma once

#include <map>
#include <string>

#include "skein/coefficient.hpp"
#include "skein/curves.hpp"
#include "skein/planar.hpp"
#include "skein/surface.hpp"

namespace skein {

// A finite linear combination of simple-diagram basis elements, stored as a
// canonical map from edge-coordinate vectors to nonzero coefficients.  The
// all-zeros coloring is the empty diagram, i.e. the unit of the algebra.
class SkeinElement {
 public:
  SkeinElement() : mode_(RingMode::generic_mode()) {}
  explicit SkeinElement(RingMode mode) : mode_(mode) {}

  static SkeinElement zero(RingMode mode) { return SkeinElement(mode); }
  static SkeinElement unit(RingMode mode, int edge_count);
  static SkeinElement diagram(RingMode mode, const Coloring& f);

  const RingMode& mode() const { return mode_; }
  const std::map<Coloring, Coefficient>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Adds c * [f], keeping the representation canonical (no zero terms).
  void add_term(const Coloring& f, const Coefficient& c);

  SkeinElement operator+(const SkeinElement& o) const;
  SkeinElement operator-(const SkeinElement& o) const;
  SkeinElement operator-() const;
  SkeinElement scaled(const Coefficient& c) const;

  // Coefficient-wise bar involution A -> A^-1; diagrams are fixed.
  SkeinElement bar() const;

  // Maps a generic-coefficient element into the cyclotomic quotient.
  SkeinElement specialize(RingMode target) const;

  bool operator==(const SkeinElement& o) const {
    return mode_ == o.mode_ && terms_ == o.terms_;
  }
  bool operator!=(const SkeinElement& o) const { return !(*this == o); }

  std::string str() const;

 private:
  RingMode mode_;
  std::map<Coloring, Coefficient> terms_;
};

// Total edge-intersection count of the heaviest diagram in x; -1 for zero.
int weight(const SkeinElement& x);

// Top-weight part of a nonzero element in the weight filtration.
struct Symbol {
  int weight = 0;
  std::map<Coloring, Coefficient> leading;
};

Symbol symbol(const SkeinElement& x);

// The stacking product (left factor drawn over the right), extended
// bilinearly; each basis pair goes through canonical placement, the Kauffman
// state sum, and normal-position reduction.  jobs > 1 distributes basis
// pairs (or, for a single pair, state ranges) across threads with a
// deterministic merge.
SkeinElement product(const IdealTriangulation& T, const SkeinElement& x, const SkeinElement& y,
                     int crossing_bound = kDefaultCrossingBound, int jobs = 1);

// Exponent e with [f]*[g] = A^e [f+g] + lower-weight terms; fails if the
// coefficient on f+g is not a single power of A with unit coefficient.
long leading_exponent(const IdealTriangulation& T, const Coloring& f, const Coloring& g,
                      int crossing_bound = kDefaultCrossingBound);

}  // namespace skein
