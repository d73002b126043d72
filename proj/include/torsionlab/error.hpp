#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace torsionlab {

enum class ErrorKind {
  Dimension,
  Singularity,
  Parameter,
  Precondition,
  Rank,
  Structure,
  Assignment,
  Orbit,
  IrrationalScale,
  IrrationalConjugator,
  NotIntegrable,
  IntegrabilityContradiction,
  Parse,
  Internal,
};

std::string_view to_string(ErrorKind kind);

/// Single exception type for the library; `kind()` distinguishes failure classes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + " error: " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace torsionlab
