#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace divgraph {

enum class ErrorCode {
  ElementForeignToModel,
  UndecidableWithoutBound,
  IrreducibilityUndecided,
  EmptyWindow,
  InvalidElement,
  InvalidBounds,
  NotT0,
  ModelMismatch,
  WindowTooLarge,
  ParseError,
  UnknownModelKind,
};

std::string_view error_code_name(ErrorCode code);

/// Single exception type for the library; `code()` distinguishes the failure.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace divgraph
