#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <set>

#include "skein/curves.hpp"
#include "skein/error.hpp"
#include "skein/planar.hpp"
#include "skein/surface.hpp"

using namespace skein;

namespace {

const IdealTriangulation& torus() {
  static IdealTriangulation T = IdealTriangulation::preset("punctured_torus");
  return T;
}

LaurentInt laurent(std::initializer_list<std::pair<long, long>> terms) {
  LaurentInt p;
  for (auto [e, c] : terms) p[e] = BigInt(c);
  return p;
}

}  // namespace

TEST_CASE("placement geometry of the pinning example") {
  PlacedProduct P = place(torus(), {1, 0, 1}, {0, 1, 1});
  CHECK(P.merged() == Coloring{1, 1, 2});
  CHECK(P.point_count() == 4);
  CHECK(P.crossing_count() == 1);
  // The crossing joins a left chord and a right chord in one triangle.
  REQUIRE(P.crossings().size() == 1);
  const PlacedCrossing& x = P.crossings()[0];
  const TrianglePicture& pic = P.triangles()[static_cast<std::size_t>(x.tri)];
  CHECK(x.u < pic.left_count);
  CHECK(x.v >= pic.left_count);
  // Every point lies on exactly two triangle sides.
  for (int p = 0; p < P.point_count(); ++p) {
    auto sides = P.point_sides(p);
    CHECK(sides[0].tri >= 0);
    CHECK(sides[1].tri >= 0);
    bool distinct = sides[0].tri != sides[1].tri || sides[0].bpos != sides[1].bpos;
    CHECK(distinct);
  }
}

TEST_CASE("parallel copies of a curve still cross under block placement") {
  // Both factors (1,1,0): the left copy is drawn over the right copy and the
  // two arcs interleave once in each triangle.
  PlacedProduct P = place(torus(), {1, 1, 0}, {1, 1, 0});
  CHECK(P.crossing_count() == 2);
  // All smoothings collapse to the doubled curve with total coefficient 1.
  auto sum = state_sum(P);
  REQUIRE(sum.size() == 1);
  CHECK(sum.at(Coloring{2, 2, 0}) == laurent({{0, 1}}));
}

TEST_CASE("resolve enumerates all smoothing states in index order") {
  PlacedProduct P = place(torus(), {1, 1, 0}, {1, 1, 0});
  auto states = resolve(P, RingMode::generic_mode());
  REQUIRE(states.size() == 4);
  for (std::size_t s = 0; s < states.size(); ++s) {
    const auto& [coeff, st] = states[s];
    REQUIRE(st.choices.size() == 2);
    CHECK(st.choices[0] == ((s & 1u) != 0));
    CHECK(st.choices[1] == ((s & 2u) != 0));
    // Monomial A^(#A - #A^-1).
    int pop = int(st.choices[0]) + int(st.choices[1]);
    long expo = 2 * pop - 2;
    CHECK(coeff == Coefficient::monomial(RingMode::generic_mode(), expo, Dyadic(1)));
    // Pairings are involutions without fixed points on each triangle boundary.
    for (const auto& pairing : st.pairings) {
      for (std::size_t b = 0; b < pairing.size(); ++b) {
        int q = pairing[b];
        REQUIRE(q >= 0);
        REQUIRE(q < static_cast<int>(pairing.size()));
        CHECK(q != static_cast<int>(b));
        CHECK(pairing[static_cast<std::size_t>(q)] == static_cast<int>(b));
      }
    }
  }
}

TEST_CASE("state normalization matches the two-crossing bracket identity") {
  // Two parallel copies crossing twice form the classical two-crossing
  // picture: one state keeps both copies, the A^2/A^-2 states splice to a
  // single contractible loop, and the remaining state yields two trivial
  // loops, so that delta^2 + (A^2 + A^-2) delta cancels exactly.
  PlacedProduct P = place(torus(), {1, 1, 0}, {1, 1, 0});
  auto states = resolve(P, RingMode::generic_mode());
  int trivial_total = 0;
  std::multiset<Coloring> outcomes;
  for (const auto& [coeff, st] : states) {
    NormalizedState n = normalize_state(P, st);
    trivial_total += n.trivial_loops;
    outcomes.insert(n.coloring);
  }
  CHECK(outcomes.count(Coloring{2, 2, 0}) == 1);
  CHECK(outcomes.count(Coloring{0, 0, 0}) == 3);
  CHECK(trivial_total == 4);
}

TEST_CASE("full state sum reproduces the pinning bracket") {
  PlacedProduct P = place(torus(), {1, 0, 1}, {0, 1, 1});
  auto sum = state_sum(P);
  REQUIRE(sum.size() == 2);
  CHECK(sum.at(Coloring{1, 1, 2}) == laurent({{1, 1}}));
  CHECK(sum.at(Coloring{1, 1, 0}) == laurent({{-1, 1}}));
}

TEST_CASE("state sum is independent of the worker count") {
  // Heavy enough to engage the threaded path (2^8 states).
  PlacedProduct P = place(torus(), {2, 2, 2}, {2, 2, 2});
  REQUIRE(P.crossing_count() == 8);
  auto seq = state_sum(P, kDefaultCrossingBound, 1);
  auto par = state_sum(P, kDefaultCrossingBound, 4);
  CHECK(seq == par);
}

TEST_CASE("unit placements have no crossings") {
  PlacedProduct P = place(torus(), {0, 0, 0}, {1, 1, 2});
  CHECK(P.crossing_count() == 0);
  auto sum = state_sum(P);
  REQUIRE(sum.size() == 1);
  CHECK(sum.at(Coloring{1, 1, 2}) == laurent({{0, 1}}));
}

TEST_CASE("crossing budget enforcement") {
  PlacedProduct P = place(torus(), {1, 1, 0}, {1, 1, 0});
  CHECK_THROWS_AS(resolve(P, RingMode::generic_mode(), 1), Error);
  CHECK_THROWS_AS(state_sum(P, 1), Error);
  try {
    state_sum(P, 1);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == "crossing_bound");
  }
  // The environment variable overrides the passed bound.
  setenv("SKEINLAB_MAX_CROSSINGS", "2", 1);
  CHECK(state_sum(P, 1).size() == 1);
  setenv("SKEINLAB_MAX_CROSSINGS", "1", 1);
  CHECK_THROWS_AS(state_sum(P), Error);
  unsetenv("SKEINLAB_MAX_CROSSINGS");
  CHECK(state_sum(P).size() == 1);
}

TEST_CASE("placement rejects folded surfaces and bad colorings") {
  IdealTriangulation F = IdealTriangulation::validate(
      {"a", "b", "c"},
      {
          Triangle{{Slot{0, true}, Slot{0, false}, Slot{1, false}}},
          Triangle{{Slot{1, true}, Slot{2, true}, Slot{2, false}}},
      });
  CHECK_THROWS_AS(place(F, {1, 0, 2}, {1, 0, 2}), Error);
  CHECK_THROWS_AS(place(torus(), {1, 0, 0}, {0, 1, 1}), Error);
  CHECK_THROWS_AS(place(torus(), {1, 0, 1}, {1, 1, 1}), Error);
}

TEST_CASE("left factor occupies the leading edge positions") {
  PlacedProduct P = place(torus(), {1, 0, 1}, {0, 1, 1});
  CHECK(P.left() == Coloring{1, 0, 1});
  CHECK(P.right() == Coloring{0, 1, 1});
  // Edge a carries one left point only; edge c carries left then right.
  int e_a = torus().edge_index("a");
  int e_c = torus().edge_index("c");
  int a_points = 0, c_points = 0;
  for (int p = 0; p < P.point_count(); ++p) {
    if (P.point_edge(p) == e_a) ++a_points;
    if (P.point_edge(p) == e_c) ++c_points;
  }
  CHECK(a_points == 1);
  CHECK(c_points == 2);
}
