#include "skein/surface.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "skein/error.hpp"

namespace skein {

namespace {

// Walk-around-a-vertex map on corners.  Corner (t, i) sits between slots i
// and i+1 of triangle t, at the head of slot i's traversal (equivalently the
// tail of slot i+1's).  Crossing the edge of slot i+1 lands on the corner of
// the edge's other slot in the neighboring triangle; with oriented gluing the
// matching corner there is the one at that slot's head.
std::pair<int, int> corner_step(const IdealTriangulation& T, int tri, int corner) {
  const Slot& cross = T.triangles()[static_cast<std::size_t>(tri)]
                          .slots[static_cast<std::size_t>((corner + 1) % 3)];
  const auto& refs = T.slots_of_edge(cross.edge);
  for (const auto& ref : refs)
    if (!(ref.tri == tri && ref.slot == (corner + 1) % 3)) return {ref.tri, ref.slot};
  fail("validate", "edge slot table corrupt");
}

}  // namespace

IdealTriangulation IdealTriangulation::validate(std::vector<std::string> edge_ids,
                                                std::vector<Triangle> triangles) {
  IdealTriangulation T;
  T.edge_ids_ = std::move(edge_ids);
  T.triangles_ = std::move(triangles);

  if (T.edge_ids_.empty() || T.triangles_.empty())
    fail("validate", "triangulation needs at least one edge and one triangle");
  {
    std::set<std::string> seen;
    for (const auto& id : T.edge_ids_) {
      if (id.empty()) fail("validate", "empty edge id");
      if (!seen.insert(id).second) fail("validate", "duplicate edge id '" + id + "'");
    }
  }
  if (2 * T.edge_count() != 3 * T.triangle_count())
    fail("validate", "edge/triangle count violates 2E = 3T (E=" +
                         std::to_string(T.edge_count()) +
                         ", T=" + std::to_string(T.triangle_count()) + ")");

  // Each edge must appear in exactly two slots.
  T.edge_slots_.assign(static_cast<std::size_t>(T.edge_count()), {});
  std::vector<int> uses(static_cast<std::size_t>(T.edge_count()), 0);
  for (int t = 0; t < T.triangle_count(); ++t) {
    for (int s = 0; s < 3; ++s) {
      const Slot& slot = T.triangles_[static_cast<std::size_t>(t)].slots[static_cast<std::size_t>(s)];
      if (slot.edge < 0 || slot.edge >= T.edge_count())
        fail("validate", "triangle " + std::to_string(t) + " references unknown edge");
      int& u = uses[static_cast<std::size_t>(slot.edge)];
      if (u >= 2)
        fail("validate", "edge '" + T.edge_ids_[static_cast<std::size_t>(slot.edge)] +
                             "' used by more than two slots");
      T.edge_slots_[static_cast<std::size_t>(slot.edge)][static_cast<std::size_t>(u)] = {t, s};
      ++u;
    }
  }
  for (int e = 0; e < T.edge_count(); ++e)
    if (uses[static_cast<std::size_t>(e)] != 2)
      fail("validate", "edge '" + T.edge_ids_[static_cast<std::size_t>(e)] +
                           "' used by " + std::to_string(uses[static_cast<std::size_t>(e)]) +
                           " slots (need 2)");

  // Oriented gluing: the two traversals of an edge run in opposite directions.
  for (int e = 0; e < T.edge_count(); ++e) {
    const auto& refs = T.edge_slots_[static_cast<std::size_t>(e)];
    bool a0 = T.triangles_[static_cast<std::size_t>(refs[0].tri)]
                  .slots[static_cast<std::size_t>(refs[0].slot)].along;
    bool a1 = T.triangles_[static_cast<std::size_t>(refs[1].tri)]
                  .slots[static_cast<std::size_t>(refs[1].slot)].along;
    if (a0 == a1)
      fail("validate", "orientation mismatch on edge '" +
                           T.edge_ids_[static_cast<std::size_t>(e)] +
                           "': both slots traverse it the same way");
  }

  // Connectivity of the gluing graph (triangles joined across shared edges).
  {
    std::vector<char> seen(static_cast<std::size_t>(T.triangle_count()), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
      int t = stack.back();
      stack.pop_back();
      for (const Slot& slot : T.triangles_[static_cast<std::size_t>(t)].slots) {
        for (const auto& ref : T.edge_slots_[static_cast<std::size_t>(slot.edge)]) {
          if (!seen[static_cast<std::size_t>(ref.tri)]) {
            seen[static_cast<std::size_t>(ref.tri)] = 1;
            stack.push_back(ref.tri);
          }
        }
      }
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end())
      fail("validate", "triangulation is not connected");
  }

  // Folded triangles (a repeated edge) are representable but flagged.
  T.embedded_only_ = true;
  for (const Triangle& tri : T.triangles_) {
    if (tri.slots[0].edge == tri.slots[1].edge || tri.slots[0].edge == tri.slots[2].edge ||
        tri.slots[1].edge == tri.slots[2].edge)
      T.embedded_only_ = false;
  }

  // Punctures: orbits of corners under the walk-around-a-vertex map.
  {
    std::vector<char> seen(static_cast<std::size_t>(3 * T.triangle_count()), 0);
    int orbits = 0;
    for (int t = 0; t < T.triangle_count(); ++t) {
      for (int c = 0; c < 3; ++c) {
        if (seen[static_cast<std::size_t>(3 * t + c)]) continue;
        ++orbits;
        int ct = t, cc = c;
        while (!seen[static_cast<std::size_t>(3 * ct + cc)]) {
          seen[static_cast<std::size_t>(3 * ct + cc)] = 1;
          auto [nt, nc] = corner_step(T, ct, cc);
          ct = nt;
          cc = nc;
        }
      }
    }
    T.puncture_count_ = orbits;
  }

  if ((2 - T.puncture_count_ - T.euler_characteristic()) % 2 != 0)
    fail("validate", "corner cycles inconsistent with Euler characteristic");

  return T;
}

int IdealTriangulation::edge_index(const std::string& id) const {
  for (int e = 0; e < edge_count(); ++e)
    if (edge_ids_[static_cast<std::size_t>(e)] == id) return e;
  fail("domain", "unknown edge id '" + id + "'");
}

bool IdealTriangulation::operator==(const IdealTriangulation& o) const {
  if (edge_ids_ != o.edge_ids_) return false;
  if (triangles_.size() != o.triangles_.size()) return false;
  for (std::size_t t = 0; t < triangles_.size(); ++t)
    if (!(triangles_[t].slots == o.triangles_[t].slots)) return false;
  return true;
}

namespace {

Triangle tri(Slot a, Slot b, Slot c) { return Triangle{{a, b, c}}; }

// Once-punctured torus: unit square with opposite sides identified, cut along
// a diagonal.  a = horizontal side, b = vertical side, c = diagonal.
IdealTriangulation make_punctured_torus() {
  return IdealTriangulation::validate(
      {"a", "b", "c"},
      {
          tri({0, true}, {1, true}, {2, false}),   // lower-right triangle
          tri({2, true}, {0, false}, {1, false}),  // upper-left triangle
      });
}

// Four-punctured sphere: boundary of a tetrahedron with its vertices removed.
// Edges named by their vertex pairs, oriented small -> large; faces oriented
// outward (counterclockwise seen from outside).
IdealTriangulation make_four_punctured_sphere() {
  // edge order: e12 e13 e14 e23 e24 e34
  return IdealTriangulation::validate(
      {"e12", "e13", "e14", "e23", "e24", "e34"},
      {
          tri({3, true}, {5, true}, {4, false}),   // face (2,3,4)
          tri({2, true}, {5, false}, {1, false}),  // face (1,4,3)
          tri({0, true}, {4, true}, {2, false}),   // face (1,2,4)
          tri({1, true}, {3, false}, {0, false}),  // face (1,3,2)
      });
}

// Genus-two surface with one puncture: octagon with side word a b a' b' c d c' d'
// (primes denote reversed traversal), fanned into six triangles by the five
// diagonals from the first vertex.
IdealTriangulation make_genus2_one_puncture() {
  // edge order: a b c d f1 f2 f3 f4 f5   (f_k = diagonal v0 -> v_{k+1})
  return IdealTriangulation::validate(
      {"a", "b", "c", "d", "f1", "f2", "f3", "f4", "f5"},
      {
          tri({0, true}, {1, true}, {4, false}),   // v0 v1 v2
          tri({4, true}, {0, false}, {5, false}),  // v0 v2 v3
          tri({5, true}, {1, false}, {6, false}),  // v0 v3 v4
          tri({6, true}, {2, true}, {7, false}),   // v0 v4 v5
          tri({7, true}, {3, true}, {8, false}),   // v0 v5 v6
          tri({8, true}, {2, false}, {3, false}),  // v0 v6 v7
      });
}

}  // namespace

const std::vector<std::string>& IdealTriangulation::preset_names() {
  static const std::vector<std::string> names = {
      "punctured_torus", "four_punctured_sphere", "genus2_one_puncture"};
  return names;
}

IdealTriangulation IdealTriangulation::preset(const std::string& name) {
  if (name == "punctured_torus") return make_punctured_torus();
  if (name == "four_punctured_sphere") return make_four_punctured_sphere();
  if (name == "genus2_one_puncture") return make_genus2_one_puncture();
  fail("domain", "unknown preset '" + name + "'");
}

}  // namespace skein
