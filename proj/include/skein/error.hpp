#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace skein {

// Domain error with a stable machine-readable code ("parse", "validate",
// "mode_mismatch", "crossing_bound", "domain", "io").  The CLI maps these to
// exit status 1 plus an error JSON document; library callers catch them.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace skein
