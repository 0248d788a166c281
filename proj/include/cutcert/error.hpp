#pragma once

#include <stdexcept>
#include <string>

namespace cutcert {

/// Machine-readable error categories; the CLI maps these to exit codes and
/// structured error objects.
enum class Errc {
  arity_mismatch,
  alphabet_mismatch,
  inexact_division,
  parse,
  invalid_argument,
  non_primitive_phi,
  inconsistent_phi,
  check_failed,
  unsupported,
  io,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::arity_mismatch: return "arity_mismatch";
    case Errc::alphabet_mismatch: return "alphabet_mismatch";
    case Errc::inexact_division: return "inexact_division";
    case Errc::parse: return "parse";
    case Errc::invalid_argument: return "invalid_argument";
    case Errc::non_primitive_phi: return "non_primitive_phi";
    case Errc::inconsistent_phi: return "inconsistent_phi";
    case Errc::check_failed: return "check_failed";
    case Errc::unsupported: return "unsupported";
    case Errc::io: return "io";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

/// Syntax error with a 1-based source location.
class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& what)
      : Error(Errc::parse, "line " + std::to_string(line) + ", col " + std::to_string(column) +
                               ": " + what),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace cutcert
