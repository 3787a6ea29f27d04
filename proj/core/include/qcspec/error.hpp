#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qcspec {

enum class ErrorKind {
  InvalidParameters,
  DomainError,
  DegenerateMap,
  InvalidGrid,
  NonpositiveArea,
  NonpositiveInradius,
  InvalidInput,
  VacuousBound,
  InvalidR,
  InvalidRings,
  InvalidDimensions,
  DegenerateTriangle,
  NoConvergence,
  SingularSystem,
  InvalidRange,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Exception carrying a machine-readable kind. The CLI maps kinds to exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace qcspec
