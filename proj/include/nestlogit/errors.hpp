#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nestlogit {

enum class ErrorKind {
  DuplicateId,
  CycleDetected,
  EmptyNest,
  LambdaOutOfRange,
  RootLambdaNotOne,
  OrphanNode,
  UnknownNode,
  NotANest,
  NotALeaf,
  RootHasNoParent,
  DomainError,
  NoConvergence,
  ShapeError,
  ParseError,
  IoError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a machine-readable kind; the
/// message is prefixed with the kind name.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace nestlogit
