#pragma once

#include <stdexcept>
#include <string>

namespace edgeideal {

enum class ErrorKind {
  Parse,             // malformed JSON or schema mismatch
  IsolatedVertex,
  DuplicateEdge,
  DuplicateLabel,
  UnknownLabel,
  EmptyGraph,
  TooLarge,
  NotUnmixed,
  NotCohenMacaulay,
  NotAPoset,
  NotTransitivelyClosed,
  NotTwoDimensional,
  InvalidEmbedding,
  CoordinateTie,
  BadWeights,
  Timeout,
  InvariantViolation,
};

const char* to_string(ErrorKind kind);

// Every failure surfaced by the library. `kind` drives CLI exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

// Internal consistency assertion that stays on in release builds.
inline void ensure(bool cond, const std::string& invariant) {
  if (!cond) fail(ErrorKind::InvariantViolation, invariant);
}

}  // namespace edgeideal
