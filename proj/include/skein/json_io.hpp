#pragma once

#include <string>

#include <json.hpp>

#include "skein/algebra.hpp"
#include "skein/cheb.hpp"
#include "skein/curves.hpp"
#include "skein/planar.hpp"
#include "skein/surface.hpp"
#include "skein/trace.hpp"

namespace skein {

// Insertion-ordered JSON keeps serialized output byte-stable.
using Json = nlohmann::ordered_json;

// Files and parsing ---------------------------------------------------------

Json read_json_file(const std::string& path);          // Error("io"/"parse")
void write_text_file(const std::string& path, const std::string& text);

// Surfaces -------------------------------------------------------------------

// {"edges": [{"id": "a"}, ...],
//  "triangles": [{"slots": [{"edge": "a", "along": true}, x3]}, ...]}
Json surface_to_json(const IdealTriangulation& T);
IdealTriangulation surface_from_json(const Json& j);

// Accepts a file path, or "preset:<name>" for a built-in surface.
IdealTriangulation load_surface(const std::string& source);

// Colorings and decompositions ------------------------------------------------

// {"a": 1, "b": 0, ...} with one key per edge id.
Json coloring_to_json(const IdealTriangulation& T, const Coloring& f);
Coloring coloring_from_json(const IdealTriangulation& T, const Json& j);

// [{"component": coloring, "multiplicity": m}, ...]
Json decomposition_to_json(const IdealTriangulation& T, const Decomposition& d);

// Coefficients ----------------------------------------------------------------

// Generic: [[exponent, "p/2^k"], ...] sorted by exponent.
// Cyclotomic: {"N": n, "coords": ["p/2^k", ...]}.
Json coefficient_to_json(const Coefficient& c);
Coefficient coefficient_from_json(const RingMode& mode, const Json& j);

// Elements ---------------------------------------------------------------------

// Sorted list of {"coloring": ..., "coeff": ...}.
Json element_to_json(const IdealTriangulation& T, const SkeinElement& x);
// Colorings are checked for admissibility on T; mode must match the coefficients.
SkeinElement element_from_json(const IdealTriangulation& T, const RingMode& mode, const Json& j);

// List of {"factors": [{"component": coloring, "k": int}, ...], "coeff": ...}.
Json threaded_to_json(const IdealTriangulation& T, const ThreadedElement& t);
ThreadedElement threaded_from_json(const IdealTriangulation& T, const RingMode& mode, const Json& j);

// Results ----------------------------------------------------------------------

Json trace_result_to_json(const IdealTriangulation& T, const TraceResult& r);
Json certificate_to_json(const IdealTriangulation& T, const NonzeroCertificate& c);

// Diagnostic dump of a placement: points per edge, chords per triangle with
// their boundary positions, and the crossing list.
Json placement_to_json(const PlacedProduct& P);

}  // namespace skein
