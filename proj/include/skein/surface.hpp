#pragma once

#include <array>
#include <string>
#include <vector>

namespace skein {

// One side of a triangle: which edge it is glued to, and whether the
// counterclockwise boundary traversal of the triangle runs along the edge's
// chosen orientation (along == true) or against it.
struct Slot {
  int edge = -1;
  bool along = true;

  bool operator==(const Slot& o) const { return edge == o.edge && along == o.along; }
};

struct Triangle {
  std::array<Slot, 3> slots;  // counterclockwise boundary order
};

// Ideal triangulation of an oriented finite-type surface: a list of oriented
// edges and a list of triangles whose slots reference them.  Every edge is
// used by exactly two slots, and the two uses traverse it in opposite
// directions (oriented gluing).  Construction via validate() establishes all
// invariants; the struct is immutable afterwards by convention.
class IdealTriangulation {
 public:
  // Throws Error("validate", ...) when the data does not describe an oriented
  // surface: wrong slot counts, dangling references, same-direction gluing,
  // or a disconnected gluing graph.
  static IdealTriangulation validate(std::vector<std::string> edge_ids,
                                     std::vector<Triangle> triangles);

  // Built-in surfaces.  Names: punctured_torus (2 triangles / 3 edges),
  // four_punctured_sphere (4/6), genus2_one_puncture (6/9).
  static IdealTriangulation preset(const std::string& name);
  static const std::vector<std::string>& preset_names();

  int edge_count() const { return static_cast<int>(edge_ids_.size()); }
  int triangle_count() const { return static_cast<int>(triangles_.size()); }
  const std::vector<std::string>& edge_ids() const { return edge_ids_; }
  const std::vector<Triangle>& triangles() const { return triangles_; }
  int edge_index(const std::string& id) const;  // error when unknown

  // True when every triangle has three distinct edges (no folded triangles).
  bool embedded_only() const { return embedded_only_; }

  // Number of punctures = number of corner cycles of the walk-around-a-vertex
  // map.  Euler characteristic is triangle_count() - edge_count().
  int puncture_count() const { return puncture_count_; }
  int euler_characteristic() const { return triangle_count() - edge_count(); }
  // 2 - 2g - p = euler characteristic; genus derived from the corner count.
  int genus() const { return (2 - puncture_count_ - euler_characteristic()) / 2; }

  // The two slots carrying an edge, as (triangle, slot index) pairs in a
  // fixed order (document order).
  struct SlotRef {
    int tri = -1;
    int slot = -1;
  };
  const std::array<SlotRef, 2>& slots_of_edge(int edge) const {
    return edge_slots_[static_cast<std::size_t>(edge)];
  }

  bool operator==(const IdealTriangulation& o) const;

 private:
  IdealTriangulation() = default;

  std::vector<std::string> edge_ids_;
  std::vector<Triangle> triangles_;
  std::vector<std::array<SlotRef, 2>> edge_slots_;
  bool embedded_only_ = true;
  int puncture_count_ = 0;
};

}  // namespace skein
