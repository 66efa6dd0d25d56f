#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lemni {

enum class ErrorKind {
  SyntaxError,
  UnsupportedOperation,
  DomainError,
  ConfigError,
  GeometryError,
  TooCloseToCurve,
  TooCloseToImage,
  PoleOnCurve,
  InternalInconsistency,
  UnresolvedCluster,
  BoundaryHit,
  StepCollapse,
  InvalidZero,
  InvalidConstant,
  NotBoundaryUnimodular,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. `position` is only meaningful for
/// SyntaxError and holds the 0-based character offset into the input.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, long position = -1)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind),
        position_(position) {}

  ErrorKind kind() const noexcept { return kind_; }
  long position() const noexcept { return position_; }

 private:
  ErrorKind kind_;
  long position_;
};

}  // namespace lemni
