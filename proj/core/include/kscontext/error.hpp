#pragma once

#include <stdexcept>
#include <string>

namespace kscontext {

enum class InputErrorKind {
  kSyntax,
  kSchema,
  kZeroRay,
  kProjectiveDuplicate,
  kDimensionMismatch,
  kUnknownName,
  kInconsistentGraph,
};

/// Rejected user-supplied data (files, names). The CLI maps these to exit code 2.
class InputError : public std::runtime_error {
 public:
  InputError(InputErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  InputErrorKind kind() const { return kind_; }

 private:
  InputErrorKind kind_;
};

}  // namespace kscontext
