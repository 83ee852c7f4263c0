#pragma once

#include <vector>

#include "skein/surface.hpp"

namespace skein {

// Normal coordinates of a curve system: one count per edge, indexed by the
// triangulation's edge order.  The zero coloring is the empty diagram.
using Coloring = std::vector<int>;

// Nonnegative everywhere, and per triangle:
//  - embedded triangle (three distinct edges): the three counts have even sum
//    and satisfy all triangle inequalities;
//  - folded triangle (one edge doubled): with y the single edge and x the
//    doubled one, f(y) + 2 f(x) is even and f(y) <= 2 f(x).
bool is_admissible(const IdealTriangulation& T, const Coloring& f);

int weight(const Coloring& f);
Coloring geometric_sum(const Coloring& f, const Coloring& g);  // edgewise +
// gcd of the entries; error on the zero coloring.
int gcd_coloring(const Coloring& f);
// f / n for odd n dividing every entry; the result is admissible whenever f
// is (parity survives division by an odd number).
Coloring scale_down(const IdealTriangulation& T, const Coloring& f, int n);

// Connected components of the curve system with multiplicities, components
// sorted lexicographically.  Requires an embedded-only triangulation.
struct ComponentMultiplicity {
  Coloring component;
  int multiplicity = 0;

  bool operator==(const ComponentMultiplicity& o) const {
    return component == o.component && multiplicity == o.multiplicity;
  }
};
using Decomposition = std::vector<ComponentMultiplicity>;

Decomposition decompose(const IdealTriangulation& T, const Coloring& f);

// All admissible colorings with 0 < weight(f) <= bound, sorted
// lexicographically.
std::vector<Coloring> admissible_colorings(const IdealTriangulation& T, int bound);

// Indivisible admissible colorings of weight <= bound: no split f = s + t
// with s, t admissible and nonzero.  Sorted lexicographically.  Completeness
// beyond the bound is not certified here; callers surface that caveat.
std::vector<Coloring> hilbert_basis(const IdealTriangulation& T, int bound);

// --- internals shared with the planar module ---

// Arcs of the unique non-crossing corner matching of one triangle, as pairs
// of (edge, position) endpoints with positions 1..f(e) counted along each
// edge's orientation.  Arc count at corner i (between slots i and i+1) is
// (f_i + f_{i+1} - f_{i+2}) / 2.
struct MatchedArc {
  int edge_a = -1, pos_a = 0;
  int edge_b = -1, pos_b = 0;
};
std::vector<MatchedArc> triangle_matching(const IdealTriangulation& T, int tri,
                                          const Coloring& f);

}  // namespace skein
