#include "hoeckend/error.hpp"

namespace hoeckend {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::DegenerateTriangle: return "DegenerateTriangle";
    case ErrorKind::NoIntersection: return "NoIntersection";
    case ErrorKind::NoSolution: return "NoSolution";
    case ErrorKind::StopperLimit: return "StopperLimit";
    case ErrorKind::NonSmooth: return "NonSmooth";
    case ErrorKind::SingularJacobian: return "SingularJacobian";
    case ErrorKind::DegenerateLever: return "DegenerateLever";
    case ErrorKind::InsufficientTravel: return "InsufficientTravel";
    case ErrorKind::InvalidObject: return "InvalidObject";
    case ErrorKind::NotEnveloping: return "NotEnveloping";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::TargetMismatch: return "TargetMismatch";
    case ErrorKind::Config: return "Config";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace hoeckend
