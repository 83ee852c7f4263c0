#include "skein/coefficient.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <sstream>

#include "skein/error.hpp"

namespace skein {

RingMode RingMode::cyclotomic(int N) {
  if (N < 3 || N % 2 == 0)
    fail("domain", "cyclotomic mode requires odd N >= 3, got " + std::to_string(N));
  return RingMode{N};
}

std::string RingMode::str() const {
  return generic() ? "generic" : "cyclotomic:" + std::to_string(N);
}

namespace {

// Exact division of polynomials over Z, constant term first.  The divisor is
// monic here, so the quotient stays integral; any nonzero remainder is a bug.
std::vector<BigInt> exact_divide(std::vector<BigInt> num, const std::vector<BigInt>& den) {
  int dn = static_cast<int>(num.size()) - 1;
  int dd = static_cast<int>(den.size()) - 1;
  std::vector<BigInt> quot(dn - dd + 1);
  for (int i = dn; i >= dd; --i) {
    BigInt c = num[i];
    if (c == 0) continue;
    quot[i - dd] = c;
    for (int j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
  }
  for (const auto& r : num)
    if (r != 0) fail("domain", "inexact cyclotomic division");
  return quot;
}

}  // namespace

const std::vector<BigInt>& cyclotomic_polynomial(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<BigInt>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  if (n < 1) fail("domain", "cyclotomic index must be positive");

  std::function<const std::vector<BigInt>&(int)> get = [&](int m) -> const std::vector<BigInt>& {
    auto found = cache.find(m);
    if (found != cache.end()) return found->second;
    // x^m - 1
    std::vector<BigInt> num(m + 1);
    num[0] = -1;
    num[m] = 1;
    for (int d = 1; d < m; ++d)
      if (m % d == 0) num = exact_divide(std::move(num), get(d));
    return cache.emplace(m, std::move(num)).first->second;
  };
  return get(n);
}

Coefficient::Coefficient(RingMode mode) : mode_(mode) {
  if (!mode_.generic())
    coords_.assign(cyclotomic_polynomial(2 * mode_.N).size() - 1, Dyadic::zero());
}

namespace {

// Reduce a dense dyadic polynomial (constant term first) modulo the monic
// integer polynomial phi, in place; result truncated to deg phi coordinates.
void reduce_mod(std::vector<Dyadic>& p, const std::vector<BigInt>& phi) {
  int d = static_cast<int>(phi.size()) - 1;
  for (int i = static_cast<int>(p.size()) - 1; i >= d; --i) {
    if (p[i].is_zero()) continue;
    Dyadic c = p[i];
    for (int j = 0; j < d; ++j) p[i - d + j] -= c * Dyadic(phi[j]);
    p[i] = Dyadic::zero();
  }
  p.resize(d);
}

}  // namespace

Coefficient Coefficient::monomial(RingMode mode, long exponent, const Dyadic& c) {
  Coefficient r(mode);
  if (c.is_zero()) return r;
  if (mode.generic()) {
    r.terms_[exponent] = c;
    return r;
  }
  long period = 2L * mode.N;
  long e = exponent % period;
  if (e < 0) e += period;
  std::vector<Dyadic> p(static_cast<std::size_t>(e) + 1, Dyadic::zero());
  p[static_cast<std::size_t>(e)] = c;
  reduce_mod(p, cyclotomic_polynomial(2 * mode.N));
  r.coords_ = std::move(p);
  return r;
}

Coefficient Coefficient::loop_scalar(RingMode mode) {
  return monomial(mode, 2, Dyadic(-1)) + monomial(mode, -2, Dyadic(-1));
}

bool Coefficient::is_zero() const {
  if (mode_.generic()) return terms_.empty();
  for (const auto& c : coords_)
    if (!c.is_zero()) return false;
  return true;
}

bool Coefficient::is_one() const { return *this == one(mode_); }

void Coefficient::require_same_mode(const Coefficient& o) const {
  if (mode_ != o.mode_)
    fail("mode_mismatch",
         "coefficient mode mismatch: " + mode_.str() + " vs " + o.mode_.str());
}

Coefficient Coefficient::operator-() const {
  Coefficient r(mode_);
  if (mode_.generic()) {
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  } else {
    for (std::size_t i = 0; i < coords_.size(); ++i) r.coords_[i] = -coords_[i];
  }
  return r;
}

Coefficient Coefficient::operator+(const Coefficient& o) const {
  require_same_mode(o);
  Coefficient r(mode_);
  if (mode_.generic()) {
    r.terms_ = terms_;
    for (const auto& [e, c] : o.terms_) {
      auto it = r.terms_.find(e);
      if (it == r.terms_.end()) {
        r.terms_[e] = c;
      } else {
        it->second += c;
        if (it->second.is_zero()) r.terms_.erase(it);
      }
    }
  } else {
    for (std::size_t i = 0; i < coords_.size(); ++i)
      r.coords_[i] = coords_[i] + o.coords_[i];
  }
  return r;
}

Coefficient Coefficient::operator-(const Coefficient& o) const { return *this + (-o); }

Coefficient Coefficient::operator*(const Coefficient& o) const {
  require_same_mode(o);
  Coefficient r(mode_);
  if (mode_.generic()) {
    for (const auto& [e1, c1] : terms_)
      for (const auto& [e2, c2] : o.terms_) {
        Dyadic prod = c1 * c2;
        auto it = r.terms_.find(e1 + e2);
        if (it == r.terms_.end()) {
          r.terms_[e1 + e2] = prod;
        } else {
          it->second += prod;
          if (it->second.is_zero()) r.terms_.erase(it);
        }
      }
  } else {
    std::size_t d = coords_.size();
    std::vector<Dyadic> p(2 * d - 1, Dyadic::zero());
    for (std::size_t i = 0; i < d; ++i) {
      if (coords_[i].is_zero()) continue;
      for (std::size_t j = 0; j < d; ++j) {
        if (o.coords_[j].is_zero()) continue;
        p[i + j] += coords_[i] * o.coords_[j];
      }
    }
    reduce_mod(p, cyclotomic_polynomial(2 * mode_.N));
    r.coords_ = std::move(p);
  }
  return r;
}

bool Coefficient::operator==(const Coefficient& o) const {
  if (mode_ != o.mode_) return false;
  return mode_.generic() ? terms_ == o.terms_ : coords_ == o.coords_;
}

Coefficient Coefficient::bar() const {
  Coefficient r(mode_);
  if (mode_.generic()) {
    for (const auto& [e, c] : terms_) r.terms_[-e] = c;
    return r;
  }
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i].is_zero()) continue;
    r += monomial(mode_, -static_cast<long>(i), coords_[i]);
  }
  return r;
}

Coefficient Coefficient::specialize(RingMode target) const {
  if (target == mode_) return *this;
  if (!mode_.generic())
    fail("mode_mismatch", "cannot generalize a cyclotomic coefficient");
  Coefficient r(target);
  for (const auto& [e, c] : terms_) r += monomial(target, e, c);
  return r;
}

const std::map<long, Dyadic>& Coefficient::terms() const {
  if (!mode_.generic()) fail("mode_mismatch", "terms() requires generic mode");
  return terms_;
}

bool Coefficient::is_monomial() const {
  if (!mode_.generic()) fail("mode_mismatch", "is_monomial() requires generic mode");
  return terms_.size() == 1;
}

const std::vector<Dyadic>& Coefficient::coords() const {
  if (mode_.generic()) fail("mode_mismatch", "coords() requires cyclotomic mode");
  return coords_;
}

std::string Coefficient::str() const {
  std::ostringstream out;
  if (mode_.generic()) {
    if (terms_.empty()) return "0";
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (!first) out << " + ";
      first = false;
      out << c.str() << "*A^" << e;
    }
  } else {
    out << "[";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (i) out << ", ";
      out << coords_[i].str();
    }
    out << "] mod Phi_" << 2 * mode_.N;
  }
  return out.str();
}

}  // namespace skein
