#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace ter {

// Violations of mathematical preconditions or closure conditions.
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string code, const std::string& detail)
      : std::runtime_error(code + ": " + detail), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

// Malformed input text, JSON or arguments.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The computation would exceed the configured desk-scale limits.
class ResourceCapExceeded : public DomainError {
 public:
  explicit ResourceCapExceeded(const std::string& detail)
      : DomainError("resource-cap-exceeded", detail) {}
};

}  // namespace ter
