#include "skein/dyadic.hpp"

#include <cstddef>

#include "skein/error.hpp"

namespace skein {

void Dyadic::canonicalize() {
  if (num_ == 0) {
    exp_ = 0;
    return;
  }
  while (exp_ > 0 && (num_ & 1) == 0) {
    num_ >>= 1;
    --exp_;
  }
}

Dyadic Dyadic::operator-() const {
  Dyadic r;
  r.num_ = -num_;
  r.exp_ = exp_;
  return r;
}

Dyadic Dyadic::operator+(const Dyadic& o) const {
  unsigned e = std::max(exp_, o.exp_);
  BigInt n = (num_ << (e - exp_)) + (o.num_ << (e - o.exp_));
  return Dyadic(std::move(n), e);
}

Dyadic Dyadic::operator-(const Dyadic& o) const { return *this + (-o); }

Dyadic Dyadic::operator*(const Dyadic& o) const {
  return Dyadic(num_ * o.num_, exp_ + o.exp_);
}

std::string Dyadic::str() const {
  return num_.str() + "/2^" + std::to_string(exp_);
}

namespace {

BigInt parse_bigint(const std::string& s) {
  if (s.empty()) fail("parse", "empty integer in dyadic literal");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) fail("parse", "sign without digits in dyadic literal");
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9')
      fail("parse", "bad integer in dyadic literal: '" + s + "'");
  return BigInt(s);
}

}  // namespace

Dyadic Dyadic::parse(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Dyadic(parse_bigint(text));
  BigInt num = parse_bigint(text.substr(0, slash));
  std::string den = text.substr(slash + 1);
  if (den.rfind("2^", 0) == 0) {
    BigInt e = parse_bigint(den.substr(2));
    if (e < 0 || e > 1000000)
      fail("parse", "dyadic exponent out of range: '" + text + "'");
    return Dyadic(std::move(num), static_cast<unsigned>(e));
  }
  // Plain denominator: allowed only when it is a power of two.
  BigInt d = parse_bigint(den);
  if (d <= 0) fail("parse", "bad denominator in '" + text + "'");
  unsigned e = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++e;
  }
  if (d != 1)
    fail("parse",
         "denominator must be a power of two (ring is Z[1/2]): '" + text + "'");
  return Dyadic(std::move(num), e);
}

}  // namespace skein
