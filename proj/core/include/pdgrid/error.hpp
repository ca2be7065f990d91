#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pdgrid {

enum class ErrorKind {
  MalformedDocument,
  AsymmetricRotation,
  EulerViolation,
  UnknownOuterFace,
  TooSmall,
  NotThreeConnected,
  LabelingNotFound,
  BadGroupShape,
  NonIntegerPosition,
  RepairDivergence,
  OuterShapeViolation,
  UnknownSolid,
  Overflow,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the ErrorKind codes so
/// that the CLI can report it in machine-readable form.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace pdgrid
