#include "skein/trace.hpp"

#include <algorithm>

#include "skein/error.hpp"

namespace skein {

namespace {

void require_odd_n(int N) {
  if (N < 3 || N % 2 == 0) fail("domain", "N must be odd and at least 3");
}

SkeinElement at_root(const SkeinElement& x, int N) {
  const RingMode target = RingMode::cyclotomic(N);
  if (x.mode() == target) return x;
  if (x.mode().generic()) return x.specialize(target);
  fail("mode_mismatch", "element is in " + x.mode().str() + ", expected generic or " + target.str());
}

}  // namespace

TraceResult trace(const ThreadedElement& t, int N) {
  require_odd_n(N);
  TraceResult out;
  out.value = ThreadedElement::zero(t.mode());
  for (const auto& [key, c] : t.terms()) {
    const bool kept = std::all_of(key.begin(), key.end(),
                                  [N](const auto& e) { return e.second % N == 0; });
    if (kept) {
      out.value.add_term(key, c);
    } else {
      ++out.dropped_terms;
    }
  }
  return out;
}

TraceResult trace(const IdealTriangulation& T, const SkeinElement& x, int N) {
  return trace(to_threaded(T, x), N);
}

bool cyclicity_check(const IdealTriangulation& T, const SkeinElement& x, const SkeinElement& y,
                     int N, int crossing_bound, int jobs) {
  require_odd_n(N);
  const SkeinElement xr = at_root(x, N);
  const SkeinElement yr = at_root(y, N);
  const TraceResult xy = trace(T, product(T, xr, yr, crossing_bound, jobs), N);
  const TraceResult yx = trace(T, product(T, yr, xr, crossing_bound, jobs), N);
  return xy.value == yx.value;
}

NonzeroCertificate nonzero_certificate(const IdealTriangulation& T, const SkeinElement& x,
                                       int N, int crossing_bound, int jobs) {
  require_odd_n(N);
  if (x.is_zero()) fail("domain", "the zero element admits no nonzero-trace certificate");
  const SkeinElement xr = at_root(x, N);
  const Symbol top = symbol(xr);

  // If a top coloring is already a product of N-th powers of its components,
  // its own threaded term survives the projection: no multiplier needed.
  for (const auto& [f, c] : top.leading) {
    const Decomposition dec = decompose(T, f);
    const bool pure = std::all_of(dec.begin(), dec.end(), [N](const ComponentMultiplicity& cm) {
      return cm.multiplicity % N == 0;
    });
    if (pure) {
      NonzeroCertificate cert;
      cert.multiplier.assign(static_cast<std::size_t>(T.edge_count()), 0);
      cert.witness = trace(T, xr, N);
      if (cert.witness.value.is_zero()) {
        fail("domain", "certificate failed: trace vanished on an N-divisible top term");
      }
      return cert;
    }
  }

  // Otherwise complete the first top coloring's component multiplicities
  // a_m N + r_m to full multiples of N by multiplying with prod_m J_m^(N-r_m).
  const Coloring& f0 = top.leading.begin()->first;
  const Decomposition dec = decompose(T, f0);
  Coloring multiplier(static_cast<std::size_t>(T.edge_count()), 0);
  for (const ComponentMultiplicity& cm : dec) {
    const int r = cm.multiplicity % N;
    const int copies = N - r;
    for (std::size_t e = 0; e < multiplier.size(); ++e) {
      multiplier[e] += copies * cm.component[e];
    }
  }

  NonzeroCertificate cert;
  cert.multiplier = multiplier;
  const SkeinElement m = SkeinElement::diagram(xr.mode(), multiplier);
  cert.witness = trace(T, product(T, m, xr, crossing_bound, jobs), N);
  if (cert.witness.value.is_zero()) {
    fail("domain", "certificate failed: trace of multiplier * x vanished");
  }
  return cert;
}

}  // namespace skein
