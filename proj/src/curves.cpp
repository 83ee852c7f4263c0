#include "skein/curves.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "skein/error.hpp"

namespace skein {

namespace {

void require_size(const IdealTriangulation& T, const Coloring& f) {
  if (static_cast<int>(f.size()) != T.edge_count())
    fail("domain", "coloring has " + std::to_string(f.size()) + " entries, surface has " +
                       std::to_string(T.edge_count()) + " edges");
}

}  // namespace

bool is_admissible(const IdealTriangulation& T, const Coloring& f) {
  require_size(T, f);
  for (int v : f)
    if (v < 0) return false;
  for (const Triangle& tri : T.triangles()) {
    int e0 = tri.slots[0].edge, e1 = tri.slots[1].edge, e2 = tri.slots[2].edge;
    if (e0 != e1 && e1 != e2 && e0 != e2) {
      int a = f[static_cast<std::size_t>(e0)];
      int b = f[static_cast<std::size_t>(e1)];
      int c = f[static_cast<std::size_t>(e2)];
      if ((a + b + c) % 2 != 0) return false;
      if (a > b + c || b > a + c || c > a + b) return false;
    } else {
      // Folded: one edge appears twice.  y = the single edge, x = the doubled.
      int x, y;
      if (e0 == e1) {
        x = e0;
        y = e2;
      } else if (e1 == e2) {
        x = e1;
        y = e0;
      } else {
        x = e0;
        y = e1;
      }
      int fx = f[static_cast<std::size_t>(x)];
      int fy = f[static_cast<std::size_t>(y)];
      if ((fy + 2 * fx) % 2 != 0) return false;
      if (fy > 2 * fx) return false;
    }
  }
  return true;
}

int weight(const Coloring& f) {
  int w = 0;
  for (int v : f) w += v;
  return w;
}

Coloring geometric_sum(const Coloring& f, const Coloring& g) {
  if (f.size() != g.size()) fail("domain", "colorings live on different surfaces");
  Coloring s(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) s[i] = f[i] + g[i];
  return s;
}

int gcd_coloring(const Coloring& f) {
  int g = 0;
  for (int v : f) g = std::gcd(g, v);
  if (g == 0) fail("domain", "gcd of the zero coloring is undefined");
  return g;
}

Coloring scale_down(const IdealTriangulation& T, const Coloring& f, int n) {
  require_size(T, f);
  if (n <= 0 || n % 2 == 0)
    fail("domain", "scale_down requires an odd positive divisor, got " + std::to_string(n));
  Coloring r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] % n != 0)
      fail("domain", "coloring entry " + std::to_string(f[i]) + " not divisible by " +
                         std::to_string(n));
    r[i] = f[i] / n;
  }
  return r;
}

std::vector<MatchedArc> triangle_matching(const IdealTriangulation& T, int tri,
                                          const Coloring& f) {
  const Triangle& t = T.triangles()[static_cast<std::size_t>(tri)];
  int fv[3];
  for (int i = 0; i < 3; ++i) fv[i] = f[static_cast<std::size_t>(t.slots[static_cast<std::size_t>(i)].edge)];

  // Corner i lies between slots i and i+1; the number of arcs cutting it off
  // is (f_i + f_{i+1} - f_{i+2}) / 2.  Within slot i's traversal order the
  // first arcs_{i-1} points feed corner i-1 (at the traversal tail) and the
  // last arcs_i points feed corner i (at the head); nesting makes the
  // matching unique: the j-th arc at corner i (innermost first) joins
  // traversal position f_i - j of slot i to position 1 + j of slot i+1.
  int arcs[3];
  for (int i = 0; i < 3; ++i) {
    int v = fv[i] + fv[(i + 1) % 3] - fv[(i + 2) % 3];
    if (v < 0 || v % 2 != 0) fail("domain", "coloring not admissible in triangle matching");
    arcs[i] = v / 2;
  }

  auto edge_pos = [&](int slot, int trav) {
    const Slot& s = t.slots[static_cast<std::size_t>(slot)];
    int m = fv[slot];
    return s.along ? trav : m - trav + 1;
  };

  std::vector<MatchedArc> out;
  out.reserve(static_cast<std::size_t>(arcs[0] + arcs[1] + arcs[2]));
  for (int i = 0; i < 3; ++i) {
    int j1 = (i + 1) % 3;
    for (int j = 0; j < arcs[i]; ++j) {
      MatchedArc arc;
      arc.edge_a = t.slots[static_cast<std::size_t>(i)].edge;
      arc.pos_a = edge_pos(i, fv[i] - j);
      arc.edge_b = t.slots[static_cast<std::size_t>(j1)].edge;
      arc.pos_b = edge_pos(j1, 1 + j);
      out.push_back(arc);
    }
  }
  return out;
}

Decomposition decompose(const IdealTriangulation& T, const Coloring& f) {
  require_size(T, f);
  if (!T.embedded_only())
    fail("domain", "curve tracing requires an embedded-only triangulation");
  if (!is_admissible(T, f)) fail("domain", "coloring is not admissible");

  // Index marked points (edge, pos in 1..f(e)) and record, for each point,
  // its arc partner on each of its two sides.  Side s of a point is the
  // triangle slots_of_edge(edge)[s].tri; opposite-direction gluing makes the
  // position numbering along an edge the same from both sides.
  std::vector<int> base(f.size() + 1, 0);
  for (std::size_t e = 0; e < f.size(); ++e) base[e + 1] = base[e] + f[e];
  int npts = base[f.size()];
  if (npts == 0) return {};

  std::vector<int> edge_of(static_cast<std::size_t>(npts));
  for (std::size_t e = 0; e < f.size(); ++e)
    for (int k = base[e]; k < base[e + 1]; ++k) edge_of[static_cast<std::size_t>(k)] = static_cast<int>(e);

  auto pid = [&](int edge, int pos) { return base[static_cast<std::size_t>(edge)] + pos - 1; };
  auto side_of = [&](int edge, int tri) {
    return T.slots_of_edge(edge)[0].tri == tri ? 0 : 1;
  };

  std::vector<std::array<int, 2>> partner(static_cast<std::size_t>(npts), {-1, -1});
  for (int t = 0; t < T.triangle_count(); ++t) {
    for (const MatchedArc& arc : triangle_matching(T, t, f)) {
      int pa = pid(arc.edge_a, arc.pos_a);
      int pb = pid(arc.edge_b, arc.pos_b);
      partner[static_cast<std::size_t>(pa)][static_cast<std::size_t>(side_of(arc.edge_a, t))] = pb;
      partner[static_cast<std::size_t>(pb)][static_cast<std::size_t>(side_of(arc.edge_b, t))] = pa;
    }
  }

  // Trace loops: exit a point through one side, arrive at the partner point
  // in that triangle, continue through the partner's other side.
  std::vector<char> visited(static_cast<std::size_t>(npts), 0);
  std::map<Coloring, int> counts;
  for (int p0 = 0; p0 < npts; ++p0) {
    if (visited[static_cast<std::size_t>(p0)]) continue;
    Coloring comp(f.size(), 0);
    int p = p0;
    int exit_side = 0;
    do {
      visited[static_cast<std::size_t>(p)] = 1;
      ++comp[static_cast<std::size_t>(edge_of[static_cast<std::size_t>(p)])];
      int tri = T.slots_of_edge(edge_of[static_cast<std::size_t>(p)])[static_cast<std::size_t>(exit_side)].tri;
      int q = partner[static_cast<std::size_t>(p)][static_cast<std::size_t>(exit_side)];
      exit_side = side_of(edge_of[static_cast<std::size_t>(q)], tri) ^ 1;
      p = q;
    } while (!(p == p0 && exit_side == 0));
    ++counts[comp];
  }

  Decomposition out;
  for (const auto& [comp, mult] : counts) out.push_back({comp, mult});
  return out;
}

std::vector<Coloring> admissible_colorings(const IdealTriangulation& T, int bound) {
  if (bound < 0) fail("domain", "weight bound must be nonnegative");
  std::vector<Coloring> out;
  Coloring f(static_cast<std::size_t>(T.edge_count()), 0);
  // Depth-first enumeration of all nonnegative vectors with sum <= bound.
  std::function<void(std::size_t, int)> rec = [&](std::size_t e, int budget) {
    if (e == f.size()) {
      if (weight(f) > 0 && is_admissible(T, f)) out.push_back(f);
      return;
    }
    for (int v = 0; v <= budget; ++v) {
      f[e] = v;
      rec(e + 1, budget - v);
    }
    f[e] = 0;
  };
  rec(0, bound);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Coloring> hilbert_basis(const IdealTriangulation& T, int bound) {
  std::vector<Coloring> all = admissible_colorings(T, bound);
  std::vector<Coloring> basis;
  for (const Coloring& f : all) {
    bool divisible = false;
    // Candidate splits: admissible s of weight < weight(f) fitting under f.
    for (const Coloring& s : all) {
      if (weight(s) >= weight(f)) continue;
      bool fits = true;
      for (std::size_t i = 0; i < f.size() && fits; ++i) fits = s[i] <= f[i];
      if (!fits) continue;
      Coloring t(f.size());
      for (std::size_t i = 0; i < f.size(); ++i) t[i] = f[i] - s[i];
      if (weight(t) == 0) continue;
      if (is_admissible(T, t)) {
        divisible = true;
        break;
      }
    }
    if (!divisible) basis.push_back(f);
  }
  return basis;
}

}  // namespace skein
