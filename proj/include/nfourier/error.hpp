#pragma once

#include <stdexcept>
#include <string>

namespace nfourier {

/// Library error carrying a stable machine-readable code such as
/// "NonAssociative" or "DivisionByZero". The CLI maps these to exit code 2.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& message) {
  throw Error(code, message);
}

/// Internal invariant; a violation is a bug in this library, not bad input.
inline void require_internal(bool ok, const char* what) {
  if (!ok) throw std::logic_error(std::string("internal invariant violated: ") + what);
}

}  // namespace nfourier
