#include "skein/algebra.hpp"

#include <atomic>
#include <exception>
#include <sstream>
#include <thread>
#include <utility>
#include <vector>

#include "skein/error.hpp"

namespace skein {

namespace {

std::string coloring_str(const Coloring& f) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) os << ',';
    os << f[i];
  }
  os << ']';
  return os.str();
}

void require_same_mode(const RingMode& a, const RingMode& b) {
  if (a != b) {
    fail("mode_mismatch", "operands use different coefficient rings (" + a.str() + " vs " + b.str() + ")");
  }
}

Coefficient from_laurent(RingMode mode, const LaurentInt& poly) {
  Coefficient c = Coefficient::zero(mode);
  for (const auto& [e, n] : poly) {
    c += Coefficient::monomial(mode, e, Dyadic(n));
  }
  return c;
}

}  // namespace

SkeinElement SkeinElement::unit(RingMode mode, int edge_count) {
  SkeinElement x(mode);
  x.add_term(Coloring(static_cast<std::size_t>(edge_count), 0), Coefficient::one(mode));
  return x;
}

SkeinElement SkeinElement::diagram(RingMode mode, const Coloring& f) {
  SkeinElement x(mode);
  x.add_term(f, Coefficient::one(mode));
  return x;
}

void SkeinElement::add_term(const Coloring& f, const Coefficient& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(f);
  if (it == terms_.end()) {
    terms_.emplace(f, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

SkeinElement SkeinElement::operator+(const SkeinElement& o) const {
  require_same_mode(mode_, o.mode_);
  SkeinElement out = *this;
  for (const auto& [f, c] : o.terms_) out.add_term(f, c);
  return out;
}

SkeinElement SkeinElement::operator-(const SkeinElement& o) const { return *this + (-o); }

SkeinElement SkeinElement::operator-() const {
  SkeinElement out(mode_);
  for (const auto& [f, c] : terms_) out.terms_.emplace(f, -c);
  return out;
}

SkeinElement SkeinElement::scaled(const Coefficient& c) const {
  require_same_mode(mode_, c.mode());
  SkeinElement out(mode_);
  if (c.is_zero()) return out;
  for (const auto& [f, t] : terms_) {
    Coefficient p = t * c;
    if (!p.is_zero()) out.terms_.emplace(f, std::move(p));
  }
  return out;
}

SkeinElement SkeinElement::bar() const {
  SkeinElement out(mode_);
  for (const auto& [f, c] : terms_) out.terms_.emplace(f, c.bar());
  return out;
}

SkeinElement SkeinElement::specialize(RingMode target) const {
  SkeinElement out(target);
  for (const auto& [f, c] : terms_) out.add_term(f, c.specialize(target));
  return out;
}

std::string SkeinElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [f, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << '(' << c.str() << ")*" << coloring_str(f);
  }
  return os.str();
}

int weight(const SkeinElement& x) {
  int w = -1;
  for (const auto& [f, c] : x.terms()) w = std::max(w, weight(f));
  return w;
}

Symbol symbol(const SkeinElement& x) {
  if (x.is_zero()) fail("domain", "the zero element has no symbol");
  Symbol s;
  s.weight = weight(x);
  for (const auto& [f, c] : x.terms()) {
    if (weight(f) == s.weight) s.leading.emplace(f, c);
  }
  return s;
}

namespace {

struct PairTask {
  const Coloring* f;
  const Coloring* g;
  Coefficient scale;
};

std::map<Coloring, LaurentInt> bracket_pair(const IdealTriangulation& T, const Coloring& f,
                                            const Coloring& g, int crossing_bound, int jobs) {
  try {
    const PlacedProduct P = place(T, f, g);
    return state_sum(P, crossing_bound, jobs);
  } catch (const Error& e) {
    if (e.code() == "crossing_bound") {
      fail("crossing_bound",
           "pair " + coloring_str(f) + " * " + coloring_str(g) + ": " + e.what());
    }
    throw;
  }
}

}  // namespace

SkeinElement product(const IdealTriangulation& T, const SkeinElement& x, const SkeinElement& y,
                     int crossing_bound, int jobs) {
  require_same_mode(x.mode(), y.mode());
  const RingMode mode = x.mode();

  std::vector<PairTask> tasks;
  tasks.reserve(x.terms().size() * y.terms().size());
  for (const auto& [f, cf] : x.terms()) {
    for (const auto& [g, cg] : y.terms()) {
      tasks.push_back({&f, &g, cf * cg});
    }
  }

  std::vector<std::map<Coloring, LaurentInt>> brackets(tasks.size());

  if (jobs > 1 && tasks.size() > 1) {
    const int workers = static_cast<int>(
        std::min<std::size_t>(static_cast<std::size_t>(jobs), tasks.size()));
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(tasks.size());
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (;;) {
          const std::size_t i = next.fetch_add(1);
          if (i >= tasks.size()) return;
          try {
            brackets[i] = bracket_pair(T, *tasks[i].f, *tasks[i].g, crossing_bound, 1);
          } catch (...) {
            errors[i] = std::current_exception();
          }
        }
      });
    }
    for (std::thread& th : pool) th.join();
    for (const std::exception_ptr& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  } else {
    for (std::size_t i = 0; i < tasks.size(); ++i) {
      brackets[i] = bracket_pair(T, *tasks[i].f, *tasks[i].g, crossing_bound, jobs);
    }
  }

  SkeinElement out(mode);
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    for (const auto& [col, poly] : brackets[i]) {
      out.add_term(col, from_laurent(mode, poly) * tasks[i].scale);
    }
  }
  return out;
}

long leading_exponent(const IdealTriangulation& T, const Coloring& f, const Coloring& g,
                      int crossing_bound) {
  const RingMode mode = RingMode::generic_mode();
  const SkeinElement p = product(T, SkeinElement::diagram(mode, f),
                                 SkeinElement::diagram(mode, g), crossing_bound);
  const Coloring top = geometric_sum(f, g);
  const auto it = p.terms().find(top);
  if (it == p.terms().end()) {
    fail("domain", "no term on the geometric sum " + coloring_str(top) +
                       "; the leading-term property failed");
  }
  const Coefficient& c = it->second;
  if (!c.is_monomial()) {
    fail("domain", "leading coefficient " + c.str() + " is not a single power of A");
  }
  const auto& [expo, d] = *c.terms().begin();
  if (!(d == Dyadic(1))) {
    fail("domain", "leading coefficient " + c.str() + " is not a unit power of A");
  }
  return expo;
}

}  // namespace skein
