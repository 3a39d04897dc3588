#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gl2 {

enum class ErrorKind {
  InvalidInput,
  DegeneratePlane,
  DegenerateClassification,
  NonSymmetric,
  NotKSymmetric,
  Singular,
  NotLightlike,
  NotOrthogonal,
  OutOfScope,
  FormulaBreakdown,
};

std::string_view error_name(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so the
/// CLI can report it by name.
class GeometryError : public std::runtime_error
{
public:
  GeometryError(ErrorKind kind, const std::string & what)
      : std::runtime_error(what), kind_(kind)
  {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return error_name(kind_); }

private:
  ErrorKind kind_;
};

}  // namespace gl2
