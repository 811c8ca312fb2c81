#pragma once

#include <stdexcept>
#include <string>

namespace loopsmith {

enum class ErrorKind {
  Argument,
  Parse,
  InvalidLoop,
  NotFound,
  Precondition,
  TheoremViolation,
  Internal,
};

// Base for every error thrown by the library. The kind selects the C status
// code and the CLI exit code.
class LoopError : public std::runtime_error {
 public:
  LoopError(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline LoopError argument_error(const std::string& what) {
  return LoopError(ErrorKind::Argument, what);
}

inline LoopError internal_error(const std::string& what) {
  return LoopError(ErrorKind::Internal, what);
}

}  // namespace loopsmith
