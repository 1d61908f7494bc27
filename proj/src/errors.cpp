#include "nestlogit/errors.hpp"

namespace nestlogit {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DuplicateId: return "DuplicateId";
    case ErrorKind::CycleDetected: return "CycleDetected";
    case ErrorKind::EmptyNest: return "EmptyNest";
    case ErrorKind::LambdaOutOfRange: return "LambdaOutOfRange";
    case ErrorKind::RootLambdaNotOne: return "RootLambdaNotOne";
    case ErrorKind::OrphanNode: return "OrphanNode";
    case ErrorKind::UnknownNode: return "UnknownNode";
    case ErrorKind::NotANest: return "NotANest";
    case ErrorKind::NotALeaf: return "NotALeaf";
    case ErrorKind::RootHasNoParent: return "RootHasNoParent";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::ShapeError: return "ShapeError";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace nestlogit
