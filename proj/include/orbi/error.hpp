#pragma once

#include <stdexcept>
#include <string>

namespace orbi {

/// Category of a failure; decides the CLI exit code.
enum class ErrorKind {
  Input,     ///< bad user data (exit 2)
  Internal,  ///< an internal assertion failed, e.g. a non-integral dimension (exit 3)
};

/// Every failure raised by the library carries a stable machine-readable
/// code such as "NonGroupTable" or "ElementNotInGroup".
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message,
        ErrorKind kind = ErrorKind::Input)
      : std::runtime_error(message), code_(std::move(code)), kind_(kind) {}

  const std::string& code() const noexcept { return code_; }
  ErrorKind kind() const noexcept { return kind_; }

 private:
  std::string code_;
  ErrorKind kind_;
};

}  // namespace orbi
