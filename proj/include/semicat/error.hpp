#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace semicat {

// Thrown by validating constructors and operations.  `code` is a stable
// machine-readable identifier (see README); the CLI prints it on stderr as
// JSON and exits with status 2.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& detail)
      : std::runtime_error(code + ": " + detail), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

[[noreturn]] inline void fail(const std::string& code,
                              const std::string& detail) {
  throw Error(code, detail);
}

inline void require(bool cond, const std::string& code,
                    const std::string& detail) {
  if (!cond) fail(code, detail);
}

}  // namespace semicat
