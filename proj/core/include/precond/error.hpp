#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace precond {

enum class ErrorCode {
  NotAPartialOrder,
  MissingBound,
  NotALattice,
  TooLarge,
  NotAPrecomplementation,
  NotAnOrthocomplementation,
  NotResiduated,
  NotAPreconditional,
  InternalInconsistency,
  WidthMismatch,
  BudgetExceeded,
  BudgetExhausted,
  EmbeddingNotVerified,
  PreconditionFailed,
  NotBoolean,
  ConditioningOnNull,
  InvalidSpec,
  Parse,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Malformed text input; `line()` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error(ErrorCode::Parse, "line " + std::to_string(line) + ": " + what), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace precond
