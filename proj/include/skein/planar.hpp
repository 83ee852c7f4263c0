#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "skein/coefficient.hpp"
#include "skein/curves.hpp"
#include "skein/surface.hpp"

namespace skein {

// A chord inside one triangle: endpoints as boundary positions, plus the ids
// of the crossings it carries, sorted along the chord starting from e1.
struct PlacedChord {
  int e1 = -1, e2 = -1;
  std::vector<int> xids;
};

// A crossing of a left-factor chord u over a right-factor chord v, with the
// local rotation pinned: p_u is u's e1 endpoint, and p_v is the v endpoint
// lying inside the counterclockwise boundary arc from u.e1 to u.e2, so the
// boundary order reads p_u, p_v, q_u, q_v counterclockwise.
struct PlacedCrossing {
  int tri = -1;
  int u = -1, v = -1;    // chord indices within the triangle's chord list
  int ku = -1, kv = -1;  // sorted positions of this crossing along u and v
  bool pv_is_v_start = false;  // p_v == chords[v].e1
};

struct TrianglePicture {
  std::vector<int> bpoint;        // boundary position -> global point id
  std::vector<PlacedChord> chords;  // left-factor chords first
  int left_count = 0;
  std::vector<int> xids;          // global crossing ids in this triangle
};

// Canonical superposition of two curve systems: on every edge the left
// factor's points occupy positions 1..f(e) along the edge orientation and the
// right factor's the remaining g(e), and each factor keeps its own
// non-crossing corner matching in every triangle.  Crossings happen only
// inside triangles, between left and right chords whose endpoints interleave.
class PlacedProduct {
 public:
  const IdealTriangulation& surface() const { return *T_; }
  const Coloring& left() const { return left_; }
  const Coloring& right() const { return right_; }
  const Coloring& merged() const { return merged_; }
  const std::vector<TrianglePicture>& triangles() const { return tris_; }
  const std::vector<PlacedCrossing>& crossings() const { return crossings_; }
  int crossing_count() const { return static_cast<int>(crossings_.size()); }
  int point_count() const { return npoints_; }

  struct PointSide {
    int tri = -1;
    int bpos = -1;
  };
  const std::array<PointSide, 2>& point_sides(int pid) const {
    return point_sides_[static_cast<std::size_t>(pid)];
  }
  int point_edge(int pid) const { return point_edge_[static_cast<std::size_t>(pid)]; }

 private:
  friend PlacedProduct place(const IdealTriangulation&, const Coloring&, const Coloring&);

  const IdealTriangulation* T_ = nullptr;
  Coloring left_, right_, merged_;
  std::vector<TrianglePicture> tris_;
  std::vector<PlacedCrossing> crossings_;
  std::vector<std::array<PointSide, 2>> point_sides_;
  std::vector<int> point_edge_;
  int npoints_ = 0;
};

PlacedProduct place(const IdealTriangulation& T, const Coloring& f, const Coloring& g);

// One Kauffman state: a smoothing choice per crossing (true = A) and the
// resulting crossingless picture as a boundary-point pairing per triangle,
// together with the count of loops closed up entirely inside each triangle.
struct ResolvedState {
  std::vector<bool> choices;
  std::vector<std::vector<int>> pairings;  // per triangle: bpos -> bpos
  std::vector<int> internal_loops;         // per triangle
};

inline constexpr int kDefaultCrossingBound = 20;
// Hard ceiling: 2^n states stop being tractable long before this.
inline constexpr int kMaxCrossingBound = 30;

// All 2^n states with their monomials A^(#A - #A^-1), in state-index order
// (crossing j's choice is bit j).  Refuses placements above the bound.
std::vector<std::pair<Coefficient, ResolvedState>> resolve(
    const PlacedProduct& P, RingMode mode, int crossing_bound = kDefaultCrossingBound);

struct NormalizedState {
  int trivial_loops = 0;
  Coloring coloring;
};

// Removes returning arcs (an arc with both endpoints on the same edge is
// spliced across that edge, deleting two points) until every surviving loop
// is in normal position, counting loops that vanish entirely as trivial.
// Each splice strictly decreases the point count, so reduction terminates.
NormalizedState normalize_state(const PlacedProduct& P, const ResolvedState& s);

// Full state sum: for each output coloring, the accumulated Laurent
// polynomial in A (integer coefficients), summing over all 2^n states
// A^(#A - #A^-1) * (-A^2 - A^-2)^(trivial loops).  jobs > 1 splits the state
// range across threads; exact integer arithmetic keeps the result identical.
using LaurentInt = std::map<long, BigInt>;
std::map<Coloring, LaurentInt> state_sum(const PlacedProduct& P,
                                         int crossing_bound = kDefaultCrossingBound,
                                         int jobs = 1);

}  // namespace skein
