#include "skein/planar.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <thread>
#include <utility>

#include "skein/error.hpp"

namespace skein {

namespace {

// Boundary position of the point (edge, pos) seen from slot s of a triangle:
// slots are traversed counterclockwise, each along or against its edge.
int boundary_pos(int slot_offset, bool along, int m, int pos) {
  return slot_offset + (along ? pos - 1 : m - pos);
}

}  // namespace

PlacedProduct place(const IdealTriangulation& T, const Coloring& f, const Coloring& g) {
  if (!T.embedded_only()) {
    fail("domain", "products require a triangulation without folded triangles");
  }
  if (!is_admissible(T, f) || !is_admissible(T, g)) {
    fail("domain", "both factors must be admissible edge-coordinate vectors");
  }

  PlacedProduct P;
  P.T_ = &T;
  P.left_ = f;
  P.right_ = g;
  const int E = T.edge_count();
  P.merged_.resize(E);
  for (int e = 0; e < E; ++e) P.merged_[e] = f[e] + g[e];

  // Global point ids: points of edge e are base[e] + (pos - 1), pos = 1..m(e).
  std::vector<int> base(static_cast<std::size_t>(E) + 1, 0);
  for (int e = 0; e < E; ++e) base[e + 1] = base[e] + P.merged_[e];
  P.npoints_ = base[E];
  P.point_edge_.resize(static_cast<std::size_t>(P.npoints_));
  for (int e = 0; e < E; ++e) {
    for (int k = 0; k < P.merged_[e]; ++k) P.point_edge_[base[e] + k] = e;
  }
  P.point_sides_.assign(static_cast<std::size_t>(P.npoints_), {});
  std::vector<int> sides_filled(static_cast<std::size_t>(P.npoints_), 0);

  const int ntri = T.triangle_count();
  P.tris_.resize(static_cast<std::size_t>(ntri));

  for (int t = 0; t < ntri; ++t) {
    const Triangle& tri = T.triangles()[t];
    TrianglePicture& tp = P.tris_[t];

    // Boundary points: slot 0, then slot 1, then slot 2, each traversed
    // counterclockwise around the triangle.
    std::array<int, 3> slot_offset{};
    int off = 0;
    for (int s = 0; s < 3; ++s) {
      slot_offset[s] = off;
      off += P.merged_[tri.slots[s].edge];
    }
    tp.bpoint.resize(static_cast<std::size_t>(off));
    for (int s = 0; s < 3; ++s) {
      const Slot& sl = tri.slots[s];
      const int m = P.merged_[sl.edge];
      for (int pos = 1; pos <= m; ++pos) {
        const int b = boundary_pos(slot_offset[s], sl.along, m, pos);
        const int pid = base[sl.edge] + pos - 1;
        tp.bpoint[b] = pid;
        int& k = sides_filled[pid];
        if (k >= 2) fail("domain", "internal error: point on more than two triangle sides");
        P.point_sides_[pid][k] = {t, b};
        ++k;
      }
    }

    // Chords of each factor, mapped into merged edge positions: the left
    // factor keeps its positions, the right factor is shifted past it.
    auto add_chords = [&](const Coloring& h, bool is_left) {
      const std::vector<MatchedArc> arcs = triangle_matching(T, t, h);
      for (const MatchedArc& a : arcs) {
        auto to_bpos = [&](int edge, int pos) {
          const int mpos = is_left ? pos : pos + f[edge];
          for (int s = 0; s < 3; ++s) {
            if (tri.slots[s].edge == edge) {
              return boundary_pos(slot_offset[s], tri.slots[s].along, P.merged_[edge], mpos);
            }
          }
          fail("domain", "internal error: edge not on triangle");
        };
        PlacedChord c;
        c.e1 = to_bpos(a.edge_a, a.pos_a);
        c.e2 = to_bpos(a.edge_b, a.pos_b);
        if (c.e2 < c.e1) std::swap(c.e1, c.e2);
        tp.chords.push_back(std::move(c));
      }
    };
    add_chords(f, true);
    tp.left_count = static_cast<int>(tp.chords.size());
    add_chords(g, false);

    // Crossings: a left chord u and right chord v cross exactly when v's
    // endpoints separate u's endpoints on the triangle boundary circle.
    const int perim = off;
    auto arc_dist = [&](int a, int b) { return (b - a + perim) % perim; };
    for (int ui = 0; ui < tp.left_count; ++ui) {
      for (int vi = tp.left_count; vi < static_cast<int>(tp.chords.size()); ++vi) {
        const PlacedChord& u = tp.chords[ui];
        const PlacedChord& v = tp.chords[vi];
        const int span = arc_dist(u.e1, u.e2);
        const int d1 = arc_dist(u.e1, v.e1);
        const int d2 = arc_dist(u.e1, v.e2);
        const bool in1 = d1 > 0 && d1 < span;
        const bool in2 = d2 > 0 && d2 < span;
        if (in1 == in2) continue;
        PlacedCrossing x;
        x.tri = t;
        x.u = ui;
        x.v = vi;
        x.pv_is_v_start = in1;
        const int xid = static_cast<int>(P.crossings_.size());
        P.crossings_.push_back(x);
        tp.xids.push_back(xid);
      }
    }

    // Order the crossings along each chord.  Walking a chord c from e1, the
    // crossings appear in the order of their partner endpoints inside the
    // counterclockwise boundary arc from c.e1 to c.e2: the region cut off by
    // c on that side is a disk, and the crossing chords enter it through
    // that arc without meeting each other twice.
    for (int ci = 0; ci < static_cast<int>(tp.chords.size()); ++ci) {
      PlacedChord& c = tp.chords[ci];
      std::vector<std::pair<int, int>> order;  // (arc distance of partner endpoint, xid)
      for (int xid : tp.xids) {
        const PlacedCrossing& x = P.crossings_[xid];
        int other = -1;
        if (x.u == ci) {
          other = x.v;
        } else if (x.v == ci) {
          other = x.u;
        } else {
          continue;
        }
        const PlacedChord& o = tp.chords[other];
        const int span = arc_dist(c.e1, c.e2);
        const int d1 = arc_dist(c.e1, o.e1);
        const int inside = (d1 > 0 && d1 < span) ? d1 : arc_dist(c.e1, o.e2);
        order.emplace_back(inside, xid);
      }
      std::sort(order.begin(), order.end());
      c.xids.clear();
      for (int k = 0; k < static_cast<int>(order.size()); ++k) {
        const int xid = order[k].second;
        c.xids.push_back(xid);
        PlacedCrossing& x = P.crossings_[xid];
        if (x.u == ci) x.ku = k;
        if (x.v == ci) x.kv = k;
      }
    }
  }

  for (int pid = 0; pid < P.npoints_; ++pid) {
    if (sides_filled[pid] != 2) {
      fail("domain", "internal error: point not on exactly two triangle sides");
    }
  }
  return P;
}

namespace {

// Resolves the chords of one triangle for a given smoothing assignment by
// walking segments: at each crossing the path leaves along the stub the
// chosen smoothing joins to the one it arrived on.
class TriWalker {
 public:
  TriWalker(const PlacedProduct& P, int t) : P_(&P), tp_(&P.triangles()[t]) {
    const int nb = static_cast<int>(tp_->bpoint.size());
    endpoint_chord_.assign(static_cast<std::size_t>(nb), {-1, false});
    gap_base_.resize(tp_->chords.size());
    int gaps = 0;
    for (std::size_t c = 0; c < tp_->chords.size(); ++c) {
      const PlacedChord& ch = tp_->chords[c];
      endpoint_chord_[ch.e1] = {static_cast<int>(c), true};
      endpoint_chord_[ch.e2] = {static_cast<int>(c), false};
      gap_base_[c] = gaps;
      gaps += static_cast<int>(ch.xids.size()) + 1;
    }
    gap_seen_.resize(static_cast<std::size_t>(gaps));
  }

  // Fills pairing (boundary position -> boundary position) and the number of
  // loops closed inside the triangle, for choices taken from state bits.
  void run(std::uint64_t state, std::vector<int>& pairing, int& loops) {
    const int nb = static_cast<int>(tp_->bpoint.size());
    pairing.assign(static_cast<std::size_t>(nb), -1);
    std::fill(gap_seen_.begin(), gap_seen_.end(), 0);
    loops = 0;

    for (int b = 0; b < nb; ++b) {
      if (pairing[b] >= 0) continue;
      const auto [c0, at_start] = endpoint_chord_[b];
      if (c0 < 0) fail("domain", "internal error: boundary point without a chord");
      int c = c0;
      int gap = at_start ? 0 : static_cast<int>(tp_->chords[c].xids.size());
      int dir = at_start ? +1 : -1;
      const int end = trace(state, c, gap, dir, /*stop_gap=*/-1, /*stop_dir=*/0);
      pairing[b] = end;
      pairing[end] = b;
    }

    // Anything not reached from the boundary closes up inside the triangle.
    for (std::size_t c = 0; c < tp_->chords.size(); ++c) {
      const int ngaps = static_cast<int>(tp_->chords[c].xids.size()) + 1;
      for (int g = 0; g < ngaps; ++g) {
        if (gap_seen_[gap_base_[c] + g]) continue;
        trace(state, static_cast<int>(c), g, +1, /*stop_gap=*/gap_base_[c] + g,
              /*stop_dir=*/+1);
        ++loops;
      }
    }
  }

 private:
  // Walks from segment `gap` of chord `c` in direction `dir` (+1 toward e2).
  // Returns the boundary position where the walk exits, or loops forever
  // until it returns to (stop_gap, stop_dir) when tracing a closed loop.
  int trace(std::uint64_t state, int c, int gap, int dir, int stop_gap, int stop_dir) {
    for (;;) {
      gap_seen_[gap_base_[c] + gap] = 1;
      const PlacedChord* ch = &tp_->chords[c];
      const int m = static_cast<int>(ch->xids.size());
      int node;  // index into [e1, x_0 .. x_{m-1}, e2]
      if (dir > 0) {
        node = gap + 1;
        if (node > m) return ch->e2;
      } else {
        node = gap;
        if (node == 0) return ch->e1;
      }
      const int xid = ch->xids[node - 1];
      const PlacedCrossing& x = P_->crossings()[xid];
      const bool a_smoothing = ((state >> xid) & 1u) != 0;

      // The stub we arrived on points back at the endpoint behind us.
      bool stub_p;  // true: the p-labelled stub of the chord we are on
      const bool on_u = (x.u == c);
      if (on_u) {
        stub_p = dir > 0;  // p_u is u's e1 endpoint
      } else {
        stub_p = (dir > 0) == x.pv_is_v_start;
      }
      // A joins p_u<->q_v and q_u<->p_v; A^-1 joins p_u<->p_v and q_u<->q_v:
      // an A-smoothing always flips the p/q label, A^-1 keeps it.
      const bool exit_toward_p = a_smoothing ? !stub_p : stub_p;
      bool toward_e1;
      if (on_u) {
        // Exiting along v toward p_v or q_v.
        toward_e1 = exit_toward_p ? x.pv_is_v_start : !x.pv_is_v_start;
      } else {
        // Exiting along u toward p_u (= e1) or q_u (= e2).
        toward_e1 = exit_toward_p;
      }
      const int k = on_u ? x.kv : x.ku;
      dir = toward_e1 ? -1 : +1;
      gap = (dir > 0) ? k + 1 : k;
      c = on_u ? x.v : x.u;
      if (stop_gap >= 0 && gap_base_[c] + gap == stop_gap && dir == stop_dir) {
        return -1;
      }
    }
  }

  const PlacedProduct* P_;
  const TrianglePicture* tp_;
  std::vector<std::pair<int, bool>> endpoint_chord_;
  std::vector<int> gap_base_;
  std::vector<char> gap_seen_;
};

// Traces the global loops of a crossingless picture and splices away
// returning arcs; reusable scratch keeps the per-state cost allocation-free.
class LoopTracer {
 public:
  explicit LoopTracer(const PlacedProduct& P) : P_(&P) {
    const int n = P.point_count();
    visited_.resize(static_cast<std::size_t>(n));
    seq_.resize(static_cast<std::size_t>(n));
    nxt_.resize(static_cast<std::size_t>(n));
    prv_.resize(static_cast<std::size_t>(n));
    alive_.resize(static_cast<std::size_t>(n));
    stack_.reserve(static_cast<std::size_t>(2 * n + 8));
    coloring_.resize(static_cast<std::size_t>(P.surface().edge_count()));
  }

  // pairings: per triangle, boundary position -> boundary position.
  void run(const std::vector<std::vector<int>>& pairings, int& trivial, Coloring& coloring) {
    const int n = P_->point_count();
    std::fill(visited_.begin(), visited_.end(), 0);
    std::fill(coloring_.begin(), coloring_.end(), 0);
    trivial = 0;

    for (int p0 = 0; p0 < n; ++p0) {
      if (visited_[p0]) continue;
      // Collect the loop through p0: alternate between the two sides of each
      // point, following the pairing inside the triangle on each side.
      int len = 0;
      int p = p0;
      int side = 0;
      do {
        visited_[p] = 1;
        seq_[len++] = p;
        const auto& ps = P_->point_sides(p)[side];
        const int qb = pairings[ps.tri][ps.bpos];
        const int q = P_->triangles()[ps.tri].bpoint[qb];
        // Continue out of q's other side.
        side = (P_->point_sides(q)[0].tri == ps.tri) ? 1 : 0;
        p = q;
      } while (!(p == p0 && side == 0));

      splice_loop(len, trivial);
    }
    coloring = coloring_;
  }

 private:
  void splice_loop(int len, int& trivial) {
    for (int i = 0; i < len; ++i) {
      nxt_[i] = (i + 1 == len) ? 0 : i + 1;
      prv_[i] = (i == 0) ? len - 1 : i - 1;
      alive_[i] = 1;
    }
    int live = len;
    stack_.clear();
    for (int i = 0; i < len; ++i) stack_.push_back(i);

    while (!stack_.empty()) {
      const int i = stack_.back();
      stack_.pop_back();
      if (!alive_[i]) continue;
      const int j = nxt_[i];
      if (P_->point_edge(seq_[i]) != P_->point_edge(seq_[j])) continue;
      // Returning arc: splice it away across its edge.
      alive_[i] = alive_[j] = 0;
      live -= 2;
      if (live == 0) {
        ++trivial;
        return;
      }
      const int p = prv_[i];
      const int q = nxt_[j];
      if (p == q) {
        // Would leave a single point, i.e. an arc meeting an edge once with
        // both ends: impossible when every edge borders two distinct
        // triangles.
        fail("domain", "internal error: loop reduced to a single point");
      }
      nxt_[p] = q;
      prv_[q] = p;
      stack_.push_back(p);
    }
    for (int i = 0; i < len; ++i) {
      if (alive_[i]) ++coloring_[static_cast<std::size_t>(P_->point_edge(seq_[i]))];
    }
  }

  const PlacedProduct* P_;
  std::vector<char> visited_;
  std::vector<int> seq_, nxt_, prv_;
  std::vector<char> alive_;
  std::vector<int> stack_;
  Coloring coloring_;
};

int effective_bound(int crossing_bound) {
  int bound = crossing_bound;
  if (const char* env = std::getenv("SKEINLAB_MAX_CROSSINGS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v > 0) bound = static_cast<int>(v);
  }
  return std::min(bound, kMaxCrossingBound);
}

void check_bound(const PlacedProduct& P, int crossing_bound) {
  const int bound = effective_bound(crossing_bound);
  if (P.crossing_count() > bound) {
    fail("crossing_bound",
         "placement has " + std::to_string(P.crossing_count()) +
             " crossings, above the resolution budget of " + std::to_string(bound));
  }
}

// Per-state machinery shared by resolve() and state_sum().
struct StateEngine {
  explicit StateEngine(const PlacedProduct& P) : tracer(P) {
    const int ntri = static_cast<int>(P.triangles().size());
    pairings.resize(static_cast<std::size_t>(ntri));
    internal.assign(static_cast<std::size_t>(ntri), 0);
    for (int t = 0; t < ntri; ++t) {
      if (P.triangles()[t].xids.empty()) {
        // No crossings: the pairing is the chords themselves, fixed.
        const TrianglePicture& tp = P.triangles()[t];
        pairings[t].assign(tp.bpoint.size(), -1);
        for (const PlacedChord& c : tp.chords) {
          pairings[t][c.e1] = c.e2;
          pairings[t][c.e2] = c.e1;
        }
      } else {
        walkers.emplace_back(t, TriWalker(P, t));
      }
    }
  }

  void load_state(std::uint64_t s) {
    for (auto& [t, w] : walkers) {
      w.run(s, pairings[static_cast<std::size_t>(t)], internal[static_cast<std::size_t>(t)]);
    }
  }

  std::vector<std::vector<int>> pairings;
  std::vector<int> internal;
  std::vector<std::pair<int, TriWalker>> walkers;
  LoopTracer tracer;
};

// (-A^2 - A^-2)^l as exponent -> integer coefficient.
std::vector<std::pair<long, BigInt>> delta_power(int l) {
  std::vector<std::pair<long, BigInt>> out;
  BigInt binom = 1;
  for (int j = 0; j <= l; ++j) {
    BigInt c = binom;
    if (l % 2 != 0) c = -c;
    out.emplace_back(static_cast<long>(4 * j - 2 * l), c);
    binom = binom * (l - j) / (j + 1);
  }
  return out;
}

}  // namespace

std::vector<std::pair<Coefficient, ResolvedState>> resolve(const PlacedProduct& P,
                                                           RingMode mode, int crossing_bound) {
  check_bound(P, crossing_bound);
  const int n = P.crossing_count();
  StateEngine eng(P);
  std::vector<std::pair<Coefficient, ResolvedState>> out;
  out.reserve(static_cast<std::size_t>(1) << n);
  for (std::uint64_t s = 0; s < (static_cast<std::uint64_t>(1) << n); ++s) {
    eng.load_state(s);
    ResolvedState rs;
    rs.choices.resize(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) rs.choices[j] = ((s >> j) & 1u) != 0;
    rs.pairings = eng.pairings;
    rs.internal_loops = eng.internal;
    const long expo = 2 * static_cast<long>(std::popcount(s)) - static_cast<long>(n);
    out.emplace_back(Coefficient::monomial(mode, expo, Dyadic(1)), std::move(rs));
  }
  return out;
}

NormalizedState normalize_state(const PlacedProduct& P, const ResolvedState& s) {
  LoopTracer tracer(P);
  NormalizedState ns;
  tracer.run(s.pairings, ns.trivial_loops, ns.coloring);
  for (int l : s.internal_loops) ns.trivial_loops += l;
  return ns;
}

namespace {

void sum_range(const PlacedProduct& P, std::uint64_t lo, std::uint64_t hi, int n,
               const std::vector<std::vector<std::pair<long, BigInt>>>& dpow,
               std::map<Coloring, LaurentInt>& acc) {
  StateEngine eng(P);
  int trivial = 0;
  Coloring coloring;
  for (std::uint64_t s = lo; s < hi; ++s) {
    eng.load_state(s);
    eng.tracer.run(eng.pairings, trivial, coloring);
    for (int l : eng.internal) trivial += l;
    const long expo = 2 * static_cast<long>(std::popcount(s)) - static_cast<long>(n);
    LaurentInt& poly = acc[coloring];
    for (const auto& [de, dc] : dpow[static_cast<std::size_t>(trivial)]) {
      BigInt& cell = poly[expo + de];
      cell += dc;
      if (cell == 0) poly.erase(expo + de);
    }
    if (poly.empty()) acc.erase(coloring);
  }
}

}  // namespace

std::map<Coloring, LaurentInt> state_sum(const PlacedProduct& P, int crossing_bound, int jobs) {
  check_bound(P, crossing_bound);
  const int n = P.crossing_count();
  const std::uint64_t total = static_cast<std::uint64_t>(1) << n;

  // Trivial loops per state: at most points/2 vanish by splicing, and each
  // loop closed inside a triangle takes at least two of its crossing slots,
  // so internal loops never exceed the crossing count.
  const int lmax = P.point_count() / 2 + n + 1;
  std::vector<std::vector<std::pair<long, BigInt>>> dpow;
  dpow.reserve(static_cast<std::size_t>(lmax) + 1);
  for (int l = 0; l <= lmax; ++l) dpow.push_back(delta_power(l));

  int workers = std::max(1, jobs);
  if (n < 12 || total < static_cast<std::uint64_t>(4 * workers)) workers = 1;

  if (workers == 1) {
    std::map<Coloring, LaurentInt> acc;
    sum_range(P, 0, total, n, dpow, acc);
    return acc;
  }

  std::vector<std::map<Coloring, LaurentInt>> parts(static_cast<std::size_t>(workers));
  std::vector<std::thread> threads;
  threads.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    const std::uint64_t lo = total * static_cast<std::uint64_t>(w) / workers;
    const std::uint64_t hi = total * static_cast<std::uint64_t>(w + 1) / workers;
    threads.emplace_back([&, w, lo, hi] { sum_range(P, lo, hi, n, dpow, parts[w]); });
  }
  for (std::thread& th : threads) th.join();

  std::map<Coloring, LaurentInt> acc = std::move(parts[0]);
  for (int w = 1; w < workers; ++w) {
    for (auto& [col, poly] : parts[w]) {
      LaurentInt& dst = acc[col];
      for (auto& [e, c] : poly) {
        BigInt& cell = dst[e];
        cell += c;
        if (cell == 0) dst.erase(e);
      }
      if (dst.empty()) acc.erase(col);
    }
  }
  return acc;
}

}  // namespace skein
