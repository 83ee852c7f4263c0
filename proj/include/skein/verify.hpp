#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace skein {

// Result of one verification suite: a named batch of exact checks with
// human-readable notes.  `criterion` is the stable identifier used by the
// acceptance harness.
struct SuiteResult {
  std::string name;
  std::string criterion;
  bool passed = false;
  std::vector<std::string> notes;
};

// All suites as (name, criterion) in canonical order.
const std::vector<std::pair<std::string, std::string>>& verification_suites();

// Runs one suite by CLI name.  Unknown names raise Error("domain"); internal
// errors inside a suite are captured as a failed result, not rethrown.
SuiteResult run_suite(const std::string& name, std::uint64_t seed, int jobs);

// Frozen record of the orientation-pinning product on the punctured torus
// (the same document stored under tests/golden/).
const char* golden_product_json();

}  // namespace skein
