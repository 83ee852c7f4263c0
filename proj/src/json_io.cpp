#include "skein/json_io.hpp"

#include <fstream>
#include <sstream>
#include <string_view>

#include "skein/error.hpp"

namespace skein {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  fail("parse", where + ": " + what);
}

const Json& expect_object(const Json& j, const std::string& where) {
  if (!j.is_object()) bad(where, "expected a JSON object");
  return j;
}

const Json& expect_array(const Json& j, const std::string& where) {
  if (!j.is_array()) bad(where, "expected a JSON array");
  return j;
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  expect_object(j, where);
  auto it = j.find(key);
  if (it == j.end()) bad(where, std::string("missing field '") + key + "'");
  return *it;
}

std::string expect_string(const Json& j, const std::string& where) {
  if (!j.is_string()) bad(where, "expected a string");
  return j.get<std::string>();
}

long long expect_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) bad(where, "expected an integer");
  return j.get<long long>();
}

bool expect_bool(const Json& j, const std::string& where) {
  if (!j.is_boolean()) bad(where, "expected a boolean");
  return j.get<bool>();
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("io", "cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const nlohmann::json::parse_error& e) {
    fail("parse", "'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail("io", "cannot open '" + path + "' for writing");
  out << text;
  if (!out) fail("io", "write to '" + path + "' failed");
}

// Surfaces --------------------------------------------------------------------

Json surface_to_json(const IdealTriangulation& T) {
  Json edges = Json::array();
  for (const auto& id : T.edge_ids()) edges.push_back(Json{{"id", id}});
  Json tris = Json::array();
  for (const auto& tri : T.triangles()) {
    Json slots = Json::array();
    for (const auto& slot : tri.slots) {
      slots.push_back(Json{{"edge", T.edge_ids()[static_cast<std::size_t>(slot.edge)]},
                           {"along", slot.along}});
    }
    tris.push_back(Json{{"slots", std::move(slots)}});
  }
  return Json{{"edges", std::move(edges)}, {"triangles", std::move(tris)}};
}

IdealTriangulation surface_from_json(const Json& j) {
  const Json& jedges = expect_array(field(j, "edges", "surface"), "surface.edges");
  std::vector<std::string> ids;
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < jedges.size(); ++i) {
    const std::string where = "surface.edges[" + std::to_string(i) + "]";
    std::string id = expect_string(field(jedges[i], "id", where), where + ".id");
    if (!index.emplace(id, static_cast<int>(i)).second)
      bad(where, "duplicate edge id '" + id + "'");
    ids.push_back(std::move(id));
  }

  const Json& jtris = expect_array(field(j, "triangles", "surface"), "surface.triangles");
  std::vector<Triangle> tris;
  for (std::size_t t = 0; t < jtris.size(); ++t) {
    const std::string twhere = "surface.triangles[" + std::to_string(t) + "]";
    const Json& jslots = expect_array(field(jtris[t], "slots", twhere), twhere + ".slots");
    if (jslots.size() != 3) bad(twhere + ".slots", "expected exactly 3 slots");
    Triangle tri;
    for (std::size_t s = 0; s < 3; ++s) {
      const std::string swhere = twhere + ".slots[" + std::to_string(s) + "]";
      std::string id = expect_string(field(jslots[s], "edge", swhere), swhere + ".edge");
      auto it = index.find(id);
      if (it == index.end()) bad(swhere + ".edge", "unknown edge id '" + id + "'");
      tri.slots[s].edge = it->second;
      tri.slots[s].along = expect_bool(field(jslots[s], "along", swhere), swhere + ".along");
    }
    tris.push_back(tri);
  }
  return IdealTriangulation::validate(ids, tris);
}

IdealTriangulation load_surface(const std::string& source) {
  constexpr std::string_view kPrefix = "preset:";
  if (source.rfind(kPrefix, 0) == 0) return IdealTriangulation::preset(source.substr(kPrefix.size()));
  return surface_from_json(read_json_file(source));
}

// Colorings -------------------------------------------------------------------

Json coloring_to_json(const IdealTriangulation& T, const Coloring& f) {
  if (static_cast<int>(f.size()) != T.edge_count())
    fail("domain", "coloring has " + std::to_string(f.size()) + " entries, surface has " +
                       std::to_string(T.edge_count()) + " edges");
  Json out = Json::object();
  const auto& ids = T.edge_ids();
  for (std::size_t i = 0; i < ids.size(); ++i) out[ids[i]] = f[i];
  return out;
}

Coloring coloring_from_json(const IdealTriangulation& T, const Json& j) {
  expect_object(j, "coloring");
  if (j.size() != static_cast<std::size_t>(T.edge_count()))
    bad("coloring", "expected one entry per edge (" + std::to_string(T.edge_count()) +
                        "), got " + std::to_string(j.size()));
  Coloring f(static_cast<std::size_t>(T.edge_count()), 0);
  const auto& ids = T.edge_ids();
  for (std::size_t i = 0; i < ids.size(); ++i) {
    auto it = j.find(ids[i]);
    if (it == j.end()) bad("coloring", "missing edge '" + ids[i] + "'");
    long long v = expect_int(*it, "coloring." + ids[i]);
    if (v < 0) bad("coloring." + ids[i], "edge counts must be nonnegative");
    if (v > 1000000) bad("coloring." + ids[i], "edge count implausibly large");
    f[i] = static_cast<int>(v);
  }
  return f;
}

Json decomposition_to_json(const IdealTriangulation& T, const Decomposition& d) {
  Json out = Json::array();
  for (const auto& cm : d) {
    out.push_back(Json{{"component", coloring_to_json(T, cm.component)},
                       {"multiplicity", cm.multiplicity}});
  }
  return out;
}

// Coefficients ----------------------------------------------------------------

Json coefficient_to_json(const Coefficient& c) {
  if (c.mode().generic()) {
    Json out = Json::array();
    for (const auto& [expo, d] : c.terms()) out.push_back(Json::array({expo, d.str()}));
    return out;
  }
  Json coords = Json::array();
  for (const auto& d : c.coords()) coords.push_back(d.str());
  return Json{{"N", c.mode().N}, {"coords", std::move(coords)}};
}

Coefficient coefficient_from_json(const RingMode& mode, const Json& j) {
  // The sparse [[exponent, dyadic], ...] form is accepted in every mode: in a
  // cyclotomic ring each monomial lands through the specialization map, so
  // generic element files can be reused at a root of unity.  Output always
  // uses the mode's canonical form.
  if (mode.generic() || j.is_array()) {
    expect_array(j, "coeff");
    Coefficient c = Coefficient::zero(mode);
    for (std::size_t i = 0; i < j.size(); ++i) {
      const std::string where = "coeff[" + std::to_string(i) + "]";
      const Json& term = expect_array(j[i], where);
      if (term.size() != 2) bad(where, "expected [exponent, dyadic] pairs");
      long long e = expect_int(term[0], where + "[0]");
      Dyadic d = Dyadic::parse(expect_string(term[1], where + "[1]"));
      c += Coefficient::monomial(mode, static_cast<long>(e), d);
    }
    return c;
  }
  long long n = expect_int(field(j, "N", "coeff"), "coeff.N");
  if (n != mode.N)
    bad("coeff.N", "coefficient written at N=" + std::to_string(n) + " but N=" +
                       std::to_string(mode.N) + " requested");
  const Json& coords = expect_array(field(j, "coords", "coeff"), "coeff.coords");
  Coefficient c = Coefficient::zero(mode);
  for (std::size_t i = 0; i < coords.size(); ++i) {
    Dyadic d = Dyadic::parse(expect_string(coords[i], "coeff.coords[" + std::to_string(i) + "]"));
    if (!d.is_zero()) c += Coefficient::monomial(mode, static_cast<long>(i), d);
  }
  return c;
}

// Elements ---------------------------------------------------------------------

Json element_to_json(const IdealTriangulation& T, const SkeinElement& x) {
  Json out = Json::array();
  for (const auto& [f, c] : x.terms()) {
    out.push_back(Json{{"coloring", coloring_to_json(T, f)}, {"coeff", coefficient_to_json(c)}});
  }
  return out;
}

SkeinElement element_from_json(const IdealTriangulation& T, const RingMode& mode, const Json& j) {
  expect_array(j, "element");
  SkeinElement x(mode);
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string where = "element[" + std::to_string(i) + "]";
    Coloring f = coloring_from_json(T, field(j[i], "coloring", where));
    if (!is_admissible(T, f))
      fail("validate", where + ": coloring is not admissible on this surface");
    Coefficient c = coefficient_from_json(mode, field(j[i], "coeff", where));
    x.add_term(f, c);
  }
  return x;
}

Json threaded_to_json(const IdealTriangulation& T, const ThreadedElement& t) {
  Json out = Json::array();
  for (const auto& [key, c] : t.terms()) {
    Json factors = Json::array();
    for (const auto& [component, k] : key) {
      factors.push_back(Json{{"component", coloring_to_json(T, component)}, {"k", k}});
    }
    out.push_back(Json{{"factors", std::move(factors)}, {"coeff", coefficient_to_json(c)}});
  }
  return out;
}

ThreadedElement threaded_from_json(const IdealTriangulation& T, const RingMode& mode,
                                   const Json& j) {
  expect_array(j, "threaded");
  ThreadedElement t(mode);
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string where = "threaded[" + std::to_string(i) + "]";
    const Json& jfac = expect_array(field(j[i], "factors", where), where + ".factors");
    ThreadKey key;
    for (std::size_t a = 0; a < jfac.size(); ++a) {
      const std::string fwhere = where + ".factors[" + std::to_string(a) + "]";
      Coloring comp = coloring_from_json(T, field(jfac[a], "component", fwhere));
      if (!is_admissible(T, comp))
        fail("validate", fwhere + ": component is not admissible on this surface");
      if (weight(comp) == 0) fail("validate", fwhere + ": component must be a nonempty curve");
      long long k = expect_int(field(jfac[a], "k", fwhere), fwhere + ".k");
      if (k < 0) bad(fwhere + ".k", "thread exponents must be nonnegative");
      key.emplace_back(std::move(comp), static_cast<int>(k));
    }
    Coefficient c = coefficient_from_json(mode, field(j[i], "coeff", where));
    t.add_term(key, c);
  }
  return t;
}

// Results ----------------------------------------------------------------------

Json trace_result_to_json(const IdealTriangulation& T, const TraceResult& r) {
  return Json{{"value", threaded_to_json(T, r.value)}, {"dropped_terms", r.dropped_terms}};
}

Json certificate_to_json(const IdealTriangulation& T, const NonzeroCertificate& c) {
  return Json{{"multiplier", coloring_to_json(T, c.multiplier)},
              {"witness", trace_result_to_json(T, c.witness)}};
}

// Diagnostics -------------------------------------------------------------------

Json placement_to_json(const PlacedProduct& P) {
  const IdealTriangulation& T = P.surface();
  Json tris = Json::array();
  for (std::size_t t = 0; t < P.triangles().size(); ++t) {
    const TrianglePicture& pic = P.triangles()[t];
    Json chords = Json::array();
    for (std::size_t c = 0; c < pic.chords.size(); ++c) {
      const PlacedChord& ch = pic.chords[c];
      chords.push_back(Json{{"factor", static_cast<int>(c) < pic.left_count ? "left" : "right"},
                            {"from", ch.e1},
                            {"to", ch.e2},
                            {"crossings", ch.xids}});
    }
    tris.push_back(Json{{"triangle", t},
                        {"boundary_points", pic.bpoint},
                        {"chords", std::move(chords)}});
  }
  Json xs = Json::array();
  for (const PlacedCrossing& x : P.crossings()) {
    xs.push_back(Json{{"triangle", x.tri},
                      {"over_chord", x.u},
                      {"under_chord", x.v},
                      {"pos_on_over", x.ku},
                      {"pos_on_under", x.kv}});
  }
  return Json{{"left", coloring_to_json(T, P.left())},
              {"right", coloring_to_json(T, P.right())},
              {"merged", coloring_to_json(T, P.merged())},
              {"point_count", P.point_count()},
              {"crossing_count", P.crossing_count()},
              {"triangles", std::move(tris)},
              {"crossings", std::move(xs)}};
}

}  // namespace skein
