#pragma once

#include <stdexcept>
#include <string>

namespace hoeckend {

enum class ErrorKind {
  InvalidArgument,
  DegenerateTriangle,
  NoIntersection,
  NoSolution,
  StopperLimit,
  NonSmooth,
  SingularJacobian,
  DegenerateLever,
  InsufficientTravel,
  InvalidObject,
  NotEnveloping,
  UnknownVariable,
  TargetMismatch,
  Config,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so the
/// CLI can map it onto a stable exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

}  // namespace hoeckend
