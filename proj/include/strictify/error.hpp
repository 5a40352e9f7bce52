#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace strictify {

enum class ErrorCode {
  TypeMismatch,
  UnknownName,
  DuplicateName,
  ArityMismatch,
  FlatteningMismatch,
  NotInvertible,
  DomainMismatch,
  Parse,
  Precondition,
  BudgetExceeded,
  Io,
};

std::string_view to_string(ErrorCode code);

/// Every failure in the library is reported through this one exception type;
/// `code()` lets callers (and the CLI's JSON output) dispatch on the kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace strictify
