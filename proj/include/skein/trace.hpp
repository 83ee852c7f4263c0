#pragma once

#include "skein/algebra.hpp"
#include "skein/cheb.hpp"
#include "skein/curves.hpp"
#include "skein/surface.hpp"

namespace skein {

// Image of an element under the trace: the part of its threaded expansion
// whose every Chebyshev exponent is a multiple of N.  dropped_terms counts
// the threaded basis terms the projection removed.
struct TraceResult {
  ThreadedElement value;
  int dropped_terms = 0;
};

TraceResult trace(const ThreadedElement& t, int N);
TraceResult trace(const IdealTriangulation& T, const SkeinElement& x, int N);

// Checks Tr(x*y) == Tr(y*x) exactly, with both products computed at a
// primitive 2N-th root of unity (generic inputs are specialized first).
bool cyclicity_check(const IdealTriangulation& T, const SkeinElement& x, const SkeinElement& y,
                     int N, int crossing_bound = kDefaultCrossingBound, int jobs = 1);

// Constructive witness that x generates no ideal inside the kernel of the
// trace: a multiplier diagram [M] (all-zeros when no multiplier is needed)
// with trace([M] * x) nonzero at the 2N-th root of unity.
struct NonzeroCertificate {
  Coloring multiplier;
  TraceResult witness;
};

NonzeroCertificate nonzero_certificate(const IdealTriangulation& T, const SkeinElement& x,
                                       int N, int crossing_bound = kDefaultCrossingBound,
                                       int jobs = 1);

}  // namespace skein
