#pragma once

#include <stdexcept>
#include <string>

namespace graspkit {

// Failure classes surfaced by the library. The CLI maps them to exit codes;
// library callers can branch on kind() instead of parsing messages.
enum class ErrorKind {
  parse,         // malformed input file (message carries file:line:col)
  precondition,  // caller violated an operation's contract
  consistency,   // inputs disagree with each other (e.g. gripper mismatch)
  internal,

  empty_cloud,
  insufficient_points,
  no_objects,
  empty_graspable,
  degenerate_contact,
  duplicate_label,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Process exit codes: 0 success, 1 internal, 2 parse, 3 precondition,
// 4 consistency.
inline int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::parse:
      return 2;
    case ErrorKind::consistency:
      return 4;
    case ErrorKind::internal:
      return 1;
    default:
      return 3;
  }
}

}  // namespace graspkit
