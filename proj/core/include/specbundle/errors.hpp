#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace specbundle {

/// Typed domain failure carrying a stable machine-readable code such as
/// "ToddViolation" or "NotNormalizable". The CLI maps these to exit code 1.
class DomainError : public std::runtime_error {
public:
  DomainError(std::string_view code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  const std::string& code() const noexcept { return code_; }

private:
  std::string code_;
};

/// Malformed request data (bad JSON shape, unparsable value, negative rank in
/// a point list). The CLI maps these to exit code 2.
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

[[noreturn]] inline void fail(std::string_view code, const std::string& message) {
  throw DomainError(code, message);
}

}  // namespace specbundle
