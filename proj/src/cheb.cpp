#include "skein/cheb.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <mutex>
#include <sstream>

#include "skein/error.hpp"

namespace skein {

namespace {

std::mutex cache_mutex;

void require_nonneg(int k, const char* what) {
  if (k < 0) fail("domain", std::string(what) + " must be nonnegative");
}

void require_odd_n(int N) {
  if (N < 3 || N % 2 == 0) fail("domain", "N must be odd and at least 3");
}

}  // namespace

ChebPoly cheb_poly(int k) {
  require_nonneg(k, "Chebyshev index");
  static std::deque<ChebPoly> table;  // guarded by cache_mutex
  std::lock_guard<std::mutex> lock(cache_mutex);
  if (table.empty()) {
    table.push_back({0, {BigInt(2)}});
    table.push_back({1, {BigInt(0), BigInt(1)}});
  }
  while (static_cast<int>(table.size()) <= k) {
    const int n = static_cast<int>(table.size());
    const std::vector<BigInt>& tn = table[n - 1].coeffs;
    const std::vector<BigInt>& tp = table[n - 2].coeffs;
    std::vector<BigInt> next(static_cast<std::size_t>(n) + 1, BigInt(0));
    for (std::size_t i = 0; i < tn.size(); ++i) next[i + 1] = tn[i];
    for (std::size_t i = 0; i < tp.size(); ++i) next[i] -= tp[i];
    table.push_back({n, std::move(next)});
  }
  return table[static_cast<std::size_t>(k)];
}

ChebPoly cheb_poly_closed_form(int k) {
  require_nonneg(k, "Chebyshev index");
  if (k == 0) return {0, {BigInt(2)}};
  std::vector<BigInt> c(static_cast<std::size_t>(k) + 1, BigInt(0));
  for (int i = 0; 2 * i <= k; ++i) {
    // binom = C(k - i, i)
    BigInt binom = 1;
    for (int j = 1; j <= i; ++j) binom = binom * (k - i - j + 1) / j;
    BigInt coef = binom * k / (k - i);  // exact
    if (i % 2 != 0) coef = -coef;
    c[static_cast<std::size_t>(k - 2 * i)] = coef;
  }
  return {k, std::move(c)};
}

std::vector<std::pair<int, Dyadic>> power_to_cheb(int m) {
  require_nonneg(m, "power");
  // row[k] = coefficient of T_k in x^m; built iteratively from
  // x * T_0 = 2 T_1 and x * T_k = T_{k+1} + T_{k-1}.
  static std::deque<std::vector<Dyadic>> rows;  // guarded by cache_mutex
  std::lock_guard<std::mutex> lock(cache_mutex);
  if (rows.empty()) rows.push_back({Dyadic::half()});  // x^0 = (1/2) T_0
  while (static_cast<int>(rows.size()) <= m) {
    const std::vector<Dyadic>& prev = rows.back();
    std::vector<Dyadic> next(prev.size() + 1, Dyadic::zero());
    for (std::size_t k = 0; k < prev.size(); ++k) {
      if (prev[k].is_zero()) continue;
      if (k == 0) {
        next[1] += prev[0].doubled();
      } else {
        next[k + 1] += prev[k];
        next[k - 1] += prev[k];
      }
    }
    rows.push_back(std::move(next));
  }
  std::vector<std::pair<int, Dyadic>> out;
  const std::vector<Dyadic>& row = rows[static_cast<std::size_t>(m)];
  for (std::size_t k = 0; k < row.size(); ++k) {
    if (!row[k].is_zero()) out.emplace_back(static_cast<int>(k), row[k]);
  }
  return out;
}

void ThreadedElement::add_term(ThreadKey key, const Coefficient& c) {
  if (c.is_zero()) return;
  Coefficient scaled = c;
  ThreadKey clean;
  clean.reserve(key.size());
  for (auto& [comp, k] : key) {
    if (k < 0) fail("domain", "threaded exponent must be nonnegative");
    if (k == 0) {
      scaled *= Coefficient::from_dyadic(mode_, Dyadic(2));
    } else {
      clean.emplace_back(std::move(comp), k);
    }
  }
  std::sort(clean.begin(), clean.end());
  auto it = terms_.find(clean);
  if (it == terms_.end()) {
    terms_.emplace(std::move(clean), std::move(scaled));
    return;
  }
  it->second += scaled;
  if (it->second.is_zero()) terms_.erase(it);
}

std::string ThreadedElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first_term = true;
  for (const auto& [key, c] : terms_) {
    if (!first_term) os << " + ";
    first_term = false;
    os << '(' << c.str() << ')';
    if (key.empty()) {
      os << "*1";
      continue;
    }
    for (const auto& [comp, k] : key) {
      os << "*T_" << k << '[';
      for (std::size_t i = 0; i < comp.size(); ++i) {
        if (i) os << ',';
        os << comp[i];
      }
      os << ']';
    }
  }
  return os.str();
}

namespace {

// One threaded factor group: a component coloring with the polynomial (in x)
// that is applied to it.
struct ComponentPoly {
  const Coloring* component;
  std::vector<BigInt> poly;  // constant first
};

std::vector<BigInt> zpoly_mul(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  std::vector<BigInt> out(a.size() + b.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// Expands scale * prod_i p_i(J_i) into the simple-diagram basis: a choice of
// monomial x^j from p_i contributes j parallel copies of J_i, and parallel
// copies of disjoint curves multiply by adding colorings.
void expand_groups(const RingMode& mode, const std::vector<ComponentPoly>& groups,
                   const Coefficient& scale, int edge_count, SkeinElement& out) {
  // Depth-first over groups, accumulating coloring and integer coefficient.
  struct Frame {
    std::size_t group;
    Coloring coloring;
    BigInt coef;
  };
  std::vector<Frame> work{{0, Coloring(static_cast<std::size_t>(edge_count), 0), BigInt(1)}};
  while (!work.empty()) {
    Frame fr = std::move(work.back());
    work.pop_back();
    if (fr.group == groups.size()) {
      out.add_term(fr.coloring,
                   scale * Coefficient::from_dyadic(mode, Dyadic(fr.coef)));
      continue;
    }
    const ComponentPoly& g = groups[fr.group];
    for (std::size_t j = 0; j < g.poly.size(); ++j) {
      if (g.poly[j] == 0) continue;
      Frame next{fr.group + 1, fr.coloring, fr.coef * g.poly[j]};
      for (std::size_t e = 0; e < next.coloring.size(); ++e) {
        next.coloring[e] += static_cast<int>(j) * (*g.component)[e];
      }
      work.push_back(std::move(next));
    }
  }
}

std::vector<ComponentPoly> key_groups(const ThreadKey& key) {
  std::vector<ComponentPoly> groups;
  for (const auto& [comp, k] : key) {
    const ChebPoly tk = cheb_poly(k);
    if (!groups.empty() && *groups.back().component == comp) {
      groups.back().poly = zpoly_mul(groups.back().poly, tk.coeffs);
    } else {
      groups.push_back({&comp, tk.coeffs});
    }
  }
  return groups;
}

}  // namespace

ThreadedElement to_threaded(const IdealTriangulation& T, const SkeinElement& x) {
  ThreadedElement out(x.mode());
  for (const auto& [f, c] : x.terms()) {
    const Decomposition dec = decompose(T, f);
    // Per component: the branches (k, dyadic) of x^multiplicity in T-basis,
    // with the T_0 = 2 scalar folded into the branch coefficient.
    struct Branches {
      const Coloring* component;
      std::vector<std::pair<int, Dyadic>> options;
    };
    std::vector<Branches> branches;
    branches.reserve(dec.size());
    for (const ComponentMultiplicity& cm : dec) {
      Branches b{&cm.component, power_to_cheb(cm.multiplicity)};
      for (auto& [k, d] : b.options) {
        if (k == 0) d = d.doubled();
      }
      branches.push_back(std::move(b));
    }

    struct Frame {
      std::size_t i;
      ThreadKey key;
      Dyadic coef;
    };
    std::vector<Frame> work{{0, {}, Dyadic::one()}};
    while (!work.empty()) {
      Frame fr = std::move(work.back());
      work.pop_back();
      if (fr.i == branches.size()) {
        out.add_term(std::move(fr.key), c * Coefficient::from_dyadic(x.mode(), fr.coef));
        continue;
      }
      const Branches& b = branches[fr.i];
      for (const auto& [k, d] : b.options) {
        Frame next{fr.i + 1, fr.key, fr.coef * d};
        if (k >= 1) next.key.emplace_back(*b.component, k);
        work.push_back(std::move(next));
      }
    }
  }
  return out;
}

SkeinElement expand_threaded(const IdealTriangulation& T, const ThreadedElement& t) {
  SkeinElement out(t.mode());
  for (const auto& [key, c] : t.terms()) {
    expand_groups(t.mode(), key_groups(key), c, T.edge_count(), out);
  }
  return out;
}

SkeinElement thread_tau(const IdealTriangulation& T, const SkeinElement& x, int N) {
  require_odd_n(N);
  const std::vector<BigInt> tn = cheb_poly(N).coeffs;
  SkeinElement out(x.mode());
  for (const auto& [f, c] : x.terms()) {
    const Decomposition dec = decompose(T, f);
    std::vector<ComponentPoly> groups;
    groups.reserve(dec.size());
    for (const ComponentMultiplicity& cm : dec) {
      std::vector<BigInt> poly{BigInt(1)};
      for (int i = 0; i < cm.multiplicity; ++i) poly = zpoly_mul(poly, tn);
      groups.push_back({&cm.component, std::move(poly)});
    }
    expand_groups(x.mode(), groups, c, T.edge_count(), out);
  }
  return out;
}

namespace {

void trim(PolyT& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

}  // namespace

PolyT poly_t_add(const PolyT& a, const PolyT& b) {
  PolyT out(std::max(a.size(), b.size()), Dyadic::zero());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  trim(out);
  return out;
}

PolyT poly_t_scale(const PolyT& a, const Dyadic& s) {
  if (s.is_zero()) return {};
  PolyT out = a;
  for (Dyadic& d : out) d *= s;
  trim(out);
  return out;
}

PolyT poly_t_shift(const PolyT& a) {
  if (a.empty()) return {};
  PolyT out(a.size() + 1, Dyadic::zero());
  for (std::size_t i = 0; i < a.size(); ++i) out[i + 1] = a[i];
  return out;
}

AnnulusElement annulus_reduce(int m, int N) {
  require_odd_n(N);
  require_nonneg(m, "Chebyshev index");
  AnnulusElement out;
  out.coords.assign(static_cast<std::size_t>(N), PolyT{});
  if (m < N) {
    out.coords[static_cast<std::size_t>(m)] = {Dyadic::one()};
    return out;
  }
  if (m == N) {
    // t itself: T_N = t * (T_0 / 2).
    out.coords[0] = {Dyadic::zero(), Dyadic::half()};
    return out;
  }
  // T_m = T_N * T_{m-N} - T_{|m-2N|}.
  const AnnulusElement a = annulus_reduce(m - N, N);
  const AnnulusElement b = annulus_reduce(std::abs(m - 2 * N), N);
  for (int r = 0; r < N; ++r) {
    out.coords[r] = poly_t_add(poly_t_shift(a.coords[r]),
                               poly_t_scale(b.coords[r], Dyadic(-1)));
  }
  return out;
}

std::vector<std::vector<PolyT>> annulus_mult_matrix(int k, int N) {
  require_odd_n(N);
  require_nonneg(k, "Chebyshev index");
  std::vector<std::vector<PolyT>> M(static_cast<std::size_t>(N),
                                    std::vector<PolyT>(static_cast<std::size_t>(N)));
  for (int j = 0; j < N; ++j) {
    // T_k * T_j = T_{k+j} + T_{|k-j|}.
    const AnnulusElement a = annulus_reduce(k + j, N);
    const AnnulusElement b = annulus_reduce(std::abs(k - j), N);
    for (int i = 0; i < N; ++i) {
      M[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          poly_t_add(a.coords[static_cast<std::size_t>(i)], b.coords[static_cast<std::size_t>(i)]);
    }
  }
  return M;
}

PolyT annulus_matrix_trace(const std::vector<std::vector<PolyT>>& M) {
  PolyT out;
  for (std::size_t i = 0; i < M.size(); ++i) out = poly_t_add(out, M[i][i]);
  return out;
}

ThreadedElement reduce_mod_N(const ThreadedElement& t, int N) {
  require_odd_n(N);
  ThreadedElement out(t.mode());

  // Per factor (J, k): branches (extra key entries, dyadic scale) obtained by
  // writing T_k = sum_r p_r(t) T_r and each p_r(t) in the T_a(t) basis, so a
  // branch is T_{aN} * T_r with T_0 factors folded as scalars.
  for (const auto& [key, c] : t.terms()) {
    struct Branch {
      ThreadKey entries;
      Dyadic scale;
    };
    std::vector<std::vector<Branch>> factor_branches;
    factor_branches.reserve(key.size());
    for (const auto& [comp, k] : key) {
      std::vector<Branch> branches;
      if (k < N) {
        branches.push_back({{{comp, k}}, Dyadic::one()});
      } else {
        const AnnulusElement red = annulus_reduce(k, N);
        for (int r = 0; r < N; ++r) {
          const PolyT& p = red.coords[static_cast<std::size_t>(r)];
          if (p.empty()) continue;
          // p(t) in the T_a(t) basis: coefficient of T_a is
          // sum_j p_j * c_{j,a} with x^j = sum_a c_{j,a} T_a.
          std::map<int, Dyadic> in_t_basis;
          for (std::size_t j = 0; j < p.size(); ++j) {
            if (p[j].is_zero()) continue;
            for (const auto& [a, d] : power_to_cheb(static_cast<int>(j))) {
              Dyadic& cell = in_t_basis[a];
              cell += p[j] * d;
            }
          }
          for (const auto& [a, d] : in_t_basis) {
            if (d.is_zero()) continue;
            Branch br;
            br.scale = d;
            if (a == 0) {
              br.scale = br.scale.doubled();  // T_0(t) = 2
            } else {
              br.entries.emplace_back(comp, a * N);
            }
            if (r == 0) {
              br.scale = br.scale.doubled();  // T_0(x) = 2
            } else {
              br.entries.emplace_back(comp, r);
            }
            branches.push_back(std::move(br));
          }
        }
      }
      factor_branches.push_back(std::move(branches));
    }

    struct Frame {
      std::size_t i;
      ThreadKey key;
      Dyadic coef;
    };
    std::vector<Frame> work{{0, {}, Dyadic::one()}};
    while (!work.empty()) {
      Frame fr = std::move(work.back());
      work.pop_back();
      if (fr.i == factor_branches.size()) {
        out.add_term(std::move(fr.key), c * Coefficient::from_dyadic(t.mode(), fr.coef));
        continue;
      }
      for (const Branch& br : factor_branches[fr.i]) {
        Frame next{fr.i + 1, fr.key, fr.coef * br.scale};
        for (const auto& entry : br.entries) next.key.push_back(entry);
        work.push_back(std::move(next));
      }
    }
  }
  return out;
}

}  // namespace skein
