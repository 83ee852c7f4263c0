#include "skein/verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <sstream>

#include "skein/algebra.hpp"
#include "skein/cheb.hpp"
#include "skein/curves.hpp"
#include "skein/error.hpp"
#include "skein/json_io.hpp"
#include "skein/rng.hpp"
#include "skein/surface.hpp"
#include "skein/trace.hpp"

namespace skein {

namespace {

// --- check bookkeeping -------------------------------------------------------

class Checker {
 public:
  Checker(const std::string& name, const std::string& criterion) {
    r_.name = name;
    r_.criterion = criterion;
    r_.passed = true;
  }

  void check(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    r_.passed = false;
    if (failures_ <= 5) r_.notes.push_back("FAIL: " + what);
  }

  void note(const std::string& s) { r_.notes.push_back(s); }

  SuiteResult finish() {
    std::ostringstream tally;
    tally << checks_ << " checks, " << failures_ << " failures";
    r_.notes.push_back(tally.str());
    return r_;
  }

 private:
  SuiteResult r_;
  int checks_ = 0;
  int failures_ = 0;
};

std::string col_str(const Coloring& f) {
  std::string s = "(";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(f[i]);
  }
  return s + ")";
}

// --- independent dense-polynomial oracle for the Chebyshev identities --------

using ZPoly = std::vector<BigInt>;

ZPoly ztrim(ZPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

ZPoly zadd(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()), BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return ztrim(std::move(r));
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return ztrim(std::move(r));
}

ZPoly zcompose(const ZPoly& p, const ZPoly& q) {
  ZPoly acc;
  for (std::size_t i = p.size(); i-- > 0;) {
    acc = zmul(acc, q);
    acc = zadd(acc, ZPoly{p[i]});
  }
  return acc;
}

// --- suite bodies -------------------------------------------------------------

SuiteResult suite_cheb(std::uint64_t, int) {
  Checker c("chebyshev", "A1");
  auto P = [](int k) { return ztrim(cheb_poly(k).coeffs); };
  for (int m = 0; m <= 12; ++m) {
    for (int n = 0; n <= 12; ++n) {
      ZPoly lhs = zmul(P(m), P(n));
      ZPoly rhs = zadd(P(m + n), P(std::abs(m - n)));
      c.check(lhs == rhs,
              "product-to-sum at m=" + std::to_string(m) + ", n=" + std::to_string(n));
      ZPoly comp = zcompose(P(m), P(n));
      c.check(comp == P(m * n),
              "composition at m=" + std::to_string(m) + ", n=" + std::to_string(n));
    }
  }
  for (int k = 0; k <= 30; ++k) {
    c.check(cheb_poly(k).coeffs == cheb_poly_closed_form(k).coeffs,
            "closed form vs recursion at k=" + std::to_string(k));
  }
  c.note("product-to-sum and composition for m,n <= 12; closed form for k <= 30");
  return c.finish();
}

SuiteResult suite_hilbert(std::uint64_t, int) {
  Checker c("hilbert-basis", "A2");
  IdealTriangulation T = IdealTriangulation::preset("punctured_torus");
  std::vector<Coloring> basis = hilbert_basis(T, 6);
  std::vector<Coloring> expected = {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}};
  c.check(basis == expected, "punctured-torus basis up to weight 6");
  c.note("expected exactly {(0,1,1),(1,0,1),(1,1,0)}");
  return c.finish();
}

SuiteResult suite_golden(std::uint64_t, int jobs) {
  Checker c("golden-product", "A3");
  IdealTriangulation T = IdealTriangulation::preset("punctured_torus");
  RingMode gen = RingMode::generic_mode();
  SkeinElement prod = product(T, SkeinElement::diagram(gen, {1, 0, 1}),
                              SkeinElement::diagram(gen, {0, 1, 1}),
                              kDefaultCrossingBound, jobs);
  Json got = element_to_json(T, prod);
  Json want = Json::parse(golden_product_json());
  c.check(got == want, "product (1,0,1)*(0,1,1) differs from the frozen record");
  c.note("two terms; A on (1,1,2), A^-1 on (1,1,0)");
  return c.finish();
}

void leading_term_batch(Checker& c, Rng& rng, const IdealTriangulation& T, int bound,
                        int pairs, int jobs, const std::string& tag) {
  RingMode gen = RingMode::generic_mode();
  std::vector<Coloring> pool = admissible_colorings(T, bound);
  for (int i = 0; i < pairs; ++i) {
    Coloring f = rng.pick(pool);
    Coloring g = rng.pick(pool);
    std::string ctx = tag + " pair " + std::to_string(i) + ": " + col_str(f) + "*" + col_str(g);
    SkeinElement prod = product(T, SkeinElement::diagram(gen, f),
                                SkeinElement::diagram(gen, g), kDefaultCrossingBound, jobs);
    Symbol s = symbol(prod);
    Coloring top = geometric_sum(f, g);
    bool single = s.leading.size() == 1 && s.leading.begin()->first == top;
    c.check(single, ctx + ": symbol is not the single key f+g");
    if (!single) continue;
    const Coefficient& co = s.leading.begin()->second;
    bool unit = false;
    if (co.is_monomial()) {
      const Dyadic& d = co.terms().begin()->second;
      unit = d.is_one() || (-d).is_one();
    }
    c.check(unit, ctx + ": leading coefficient is not a unit monomial");
  }
}

SuiteResult suite_leading(std::uint64_t seed, int jobs) {
  Checker c("leading-term", "A4");
  Rng rng(seed);
  leading_term_batch(c, rng, IdealTriangulation::preset("punctured_torus"), 6, 200, jobs,
                     "torus");
  leading_term_batch(c, rng, IdealTriangulation::preset("four_punctured_sphere"), 4, 200,
                     jobs, "sphere");
  c.note("200 pairs of weight <= 6 on the punctured torus, 200 of weight <= 4 on the "
         "4-punctured sphere, seed " + std::to_string(seed));
  return c.finish();
}

SuiteResult suite_assoc(std::uint64_t seed, int jobs) {
  Checker c("associativity", "A5");
  Rng rng(seed);
  IdealTriangulation T = IdealTriangulation::preset("punctured_torus");
  RingMode gen = RingMode::generic_mode();
  std::vector<Coloring> pool = admissible_colorings(T, 3);
  for (int i = 0; i < 50; ++i) {
    SkeinElement x = SkeinElement::diagram(gen, rng.pick(pool));
    SkeinElement y = SkeinElement::diagram(gen, rng.pick(pool));
    SkeinElement z = SkeinElement::diagram(gen, rng.pick(pool));
    SkeinElement left = product(T, product(T, x, y, kDefaultCrossingBound, jobs), z,
                                kDefaultCrossingBound, jobs);
    SkeinElement right = product(T, x, product(T, y, z, kDefaultCrossingBound, jobs),
                                 kDefaultCrossingBound, jobs);
    c.check(left == right, "triple " + std::to_string(i));
  }
  c.note("50 diagram triples of weight <= 3 on the punctured torus, seed " +
         std::to_string(seed));
  return c.finish();
}

SuiteResult suite_bar(std::uint64_t seed, int jobs) {
  Checker c("bar-symmetry", "A6");
  Rng rng(seed);
  IdealTriangulation T = IdealTriangulation::preset("punctured_torus");
  RingMode gen = RingMode::generic_mode();
  std::vector<Coloring> pool = admissible_colorings(T, 6);
  for (int i = 0; i < 100; ++i) {
    Coloring f = rng.pick(pool);
    Coloring g = rng.pick(pool);
    SkeinElement xy = product(T, SkeinElement::diagram(gen, f),
                              SkeinElement::diagram(gen, g), kDefaultCrossingBound, jobs);
    SkeinElement yx = product(T, SkeinElement::diagram(gen, g),
                              SkeinElement::diagram(gen, f), kDefaultCrossingBound, jobs);
    c.check(xy.bar() == yx,
            "pair " + std::to_string(i) + ": " + col_str(f) + "," + col_str(g));
  }
  c.note("100 diagram pairs of weight <= 6 on the punctured torus, seed " +
         std::to_string(seed));
  return c.finish();
}

SuiteResult suite_central(std::uint64_t, int jobs) {
  Checker c("centrality", "A7");
  IdealTriangulation T = IdealTriangulation::preset("punctured_torus");
  RingMode q = RingMode::cyclotomic(3);
  std::vector<Coloring> basis = hilbert_basis(T, 6);
  std::vector<Coloring> pool = admissible_colorings(T, 4);
  for (const Coloring& S : basis) {
    SkeinElement tau = thread_tau(T, SkeinElement::diagram(q, S), 3);
    for (const Coloring& f : pool) {
      SkeinElement D = SkeinElement::diagram(q, f);
      SkeinElement lhs = product(T, tau, D, kDefaultCrossingBound, jobs);
      SkeinElement rhs = product(T, D, tau, kDefaultCrossingBound, jobs);
      c.check(lhs == rhs, "tau" + col_str(S) + " vs diagram " + col_str(f));
    }
  }
  c.note("threaded Hilbert-basis curves against all diagrams of weight <= 4, N=3");
  return c.finish();
}

SuiteResult suite_annulus(std::uint64_t, int) {
  Checker c("annulus-trace", "A8");
  for (int N : {3, 5}) {
    for (int k = 0; k <= 4 * N; ++k) {
      PolyT got = annulus_matrix_trace(annulus_mult_matrix(k, N));
      PolyT want;
      if (k % N == 0) {
        ChebPoly ta = cheb_poly(k / N);
        for (const BigInt& z : ta.coeffs) want.push_back(Dyadic(z * N));
        while (!want.empty() && want.back().is_zero()) want.pop_back();
      }
      c.check(got == want, "matrix trace at N=" + std::to_string(N) +
                               ", k=" + std::to_string(k));
    }
  }
  c.note("multiplication-matrix traces for N in {3,5}, k <= 4N");
  return c.finish();
}

SuiteResult suite_trace(std::uint64_t seed, int jobs) {
  Checker c("trace-properties", "A9");
  IdealTriangulation T = IdealTriangulation::preset("punctured_torus");
  std::vector<Coloring> basis = hilbert_basis(T, 6);
  for (int N : {3, 5}) {
    RingMode q = RingMode::cyclotomic(N);
    ThreadedElement one(q);
    one.add_term({}, Coefficient::one(q));
    TraceResult r1 = trace(one, N);
    c.check(r1.value == one && r1.dropped_terms == 0, "trace of the unit at N=" +
                                                          std::to_string(N));
    for (const Coloring& S : basis) {
      for (int k = 1; k < N; ++k) {
        ThreadedElement t(q);
        t.add_term({{S, k}}, Coefficient::one(q));
        TraceResult r = trace(t, N);
        c.check(r.value.is_zero() && r.dropped_terms == 1,
                "trace of T_" + std::to_string(k) + col_str(S) + " at N=" +
                    std::to_string(N) + " should vanish");
      }
      for (int k : {N, 2 * N}) {
        ThreadedElement t(q);
        t.add_term({{S, k}}, Coefficient::one(q));
        TraceResult r = trace(t, N);
        c.check(r.value == t && r.dropped_terms == 0,
                "trace of T_" + std::to_string(k) + col_str(S) + " at N=" +
                    std::to_string(N) + " should be fixed");
      }
    }
  }
  Rng rng(seed);
  RingMode gen = RingMode::generic_mode();
  std::vector<Coloring> pool = admissible_colorings(T, 4);
  for (int i = 0; i < 50; ++i) {
    SkeinElement x = random_element(rng, gen, pool, 2);
    SkeinElement y = random_element(rng, gen, pool, 2);
    c.check(cyclicity_check(T, x, y, 3, kDefaultCrossingBound, jobs),
            "cyclicity pair " + std::to_string(i));
  }
  c.note("unit/vanishing/fixed traces for N in {3,5}; 50 cyclicity pairs of weight <= 4 "
         "at N=3, seed " + std::to_string(seed));
  return c.finish();
}

SuiteResult suite_certificates(std::uint64_t seed, int jobs) {
  Checker c("certificates", "A10");
  Rng rng(seed);
  IdealTriangulation T = IdealTriangulation::preset("punctured_torus");
  RingMode gen = RingMode::generic_mode();
  std::vector<Coloring> pool = admissible_colorings(T, 3);
  pool.insert(pool.begin(), Coloring(static_cast<std::size_t>(T.edge_count()), 0));
  for (int i = 0; i < 100; ++i) {
    SkeinElement x = random_element(rng, gen, pool, 3);
    if (x.is_zero()) x = SkeinElement::unit(gen, T.edge_count());
    try {
      NonzeroCertificate cert = nonzero_certificate(T, x, 3, kDefaultCrossingBound, jobs);
      bool ok = !cert.witness.value.is_zero() && is_admissible(T, cert.multiplier);
      c.check(ok, "element " + std::to_string(i) + ": degenerate certificate");
    } catch (const Error& e) {
      c.check(false, "element " + std::to_string(i) + ": " + e.what());
    }
  }
  c.note("100 nonzero elements of weight <= 3 on the punctured torus at N=3, seed " +
         std::to_string(seed));
  return c.finish();
}

SuiteResult suite_roundtrips(std::uint64_t seed, int) {
  Checker c("round-trips", "A11");
  Rng rng(seed);
  RingMode gen = RingMode::generic_mode();
  IdealTriangulation torus = IdealTriangulation::preset("punctured_torus");
  std::vector<Coloring> pool6 = admissible_colorings(torus, 6);
  for (int i = 0; i < 100; ++i) {
    SkeinElement x = random_element(rng, gen, pool6, 3);
    ThreadedElement t = to_threaded(torus, x);
    c.check(expand_threaded(torus, t) == x, "threaded round trip " + std::to_string(i));
  }
  IdealTriangulation genus2 = IdealTriangulation::preset("genus2_one_puncture");
  struct Batch {
    const IdealTriangulation* T;
    std::vector<Coloring> pool;
    int count;
    const char* tag;
  };
  std::vector<Batch> batches;
  batches.push_back({&torus, admissible_colorings(torus, 10), 100, "torus"});
  batches.push_back({&genus2, admissible_colorings(genus2, 6), 100, "genus2"});
  for (auto& b : batches) {
    for (int i = 0; i < b.count; ++i) {
      Coloring f = rng.pick(b.pool);
      Decomposition d = decompose(*b.T, f);
      Coloring sum(f.size(), 0);
      bool components_ok = true;
      for (const auto& cm : d) {
        if (cm.multiplicity < 1) components_ok = false;
        for (int rep = 0; rep < cm.multiplicity; ++rep)
          sum = geometric_sum(sum, cm.component);
        Decomposition again = decompose(*b.T, cm.component);
        if (!(again.size() == 1 && again[0].component == cm.component &&
              again[0].multiplicity == 1))
          components_ok = false;
      }
      c.check(sum == f && components_ok,
              std::string(b.tag) + " reconstitution " + std::to_string(i) + " of " +
                  col_str(f));
    }
  }
  c.note("100 threaded round trips of weight <= 6; 100+100 decompositions on the torus "
         "(weight <= 10) and the genus-2 surface (weight <= 6), seed " +
         std::to_string(seed));
  return c.finish();
}

}  // namespace

const std::vector<std::pair<std::string, std::string>>& verification_suites() {
  static const std::vector<std::pair<std::string, std::string>> idx = {
      {"chebyshev", "A1"}, {"hilbert-basis", "A2"},   {"golden-product", "A3"},
      {"leading-term", "A4"},    {"associativity", "A5"},   {"bar-symmetry", "A6"},
      {"centrality", "A7"},      {"annulus-trace", "A8"},   {"trace-properties", "A9"},
      {"certificates", "A10"},   {"round-trips", "A11"},
  };
  return idx;
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed, int jobs) {
  using Fn = SuiteResult (*)(std::uint64_t, int);
  static const std::map<std::string, Fn> table = {
      {"chebyshev", suite_cheb},   {"hilbert-basis", suite_hilbert},
      {"golden-product", suite_golden},  {"leading-term", suite_leading},
      {"associativity", suite_assoc},    {"bar-symmetry", suite_bar},
      {"centrality", suite_central},     {"annulus-trace", suite_annulus},
      {"trace-properties", suite_trace}, {"certificates", suite_certificates},
      {"round-trips", suite_roundtrips},
  };
  auto it = table.find(name);
  if (it == table.end()) fail("domain", "unknown verification suite '" + name + "'");
  try {
    return it->second(seed, jobs);
  } catch (const Error& e) {
    SuiteResult r;
    r.name = name;
    for (const auto& [n, crit] : verification_suites())
      if (n == name) r.criterion = crit;
    r.passed = false;
    r.notes.push_back(std::string("ERROR (") + e.code() + "): " + e.what());
    return r;
  }
}

const char* golden_product_json() {
  return R"([
  {
    "coloring": {"a": 1, "b": 1, "c": 0},
    "coeff": [[-1, "1/2^0"]]
  },
  {
    "coloring": {"a": 1, "b": 1, "c": 2},
    "coeff": [[1, "1/2^0"]]
  }
])";
}

}  // namespace skein
