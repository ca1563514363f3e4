#pragma once

#include <stdexcept>
#include <string>

namespace pc {

enum class ErrorCode {
  InvalidBase,
  Overflow,
  NotAPowerCircuit,
  UnknownNode,
  CircuitMismatch,
  NotReduced,
  NotCompact,
  DuplicateValue,
  RuleNotApplicable,
  FactorMismatch,
  NotInSubgroup,
  MalformedWord,
  ParseError,
  ValidationError,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Parse errors carry the 1-based line they were raised on (0 when unknown).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(ErrorCode::ParseError,
              line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace pc
