#pragma once

#include <stdexcept>
#include <string>

namespace coopscat {

/// Base of all library errors. `kind()` is a stable machine-readable name
/// used by the CLI on stderr.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define COOPSCAT_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                         \
   public:                                                            \
    explicit Name(const std::string& message) : Error(#Name, message) {} \
  }

COOPSCAT_DEFINE_ERROR(InvalidArgument);
COOPSCAT_DEFINE_ERROR(CoincidentScatterers);
COOPSCAT_DEFINE_ERROR(SingularSystem);
COOPSCAT_DEFINE_ERROR(NotCollinear);
COOPSCAT_DEFINE_ERROR(EigenFailure);
COOPSCAT_DEFINE_ERROR(NotDiagonalizable);
COOPSCAT_DEFINE_ERROR(NonFiniteObjective);
COOPSCAT_DEFINE_ERROR(InfeasibleExclusion);
COOPSCAT_DEFINE_ERROR(ObjectiveFailure);
COOPSCAT_DEFINE_ERROR(NotAvailable);
COOPSCAT_DEFINE_ERROR(DegenerateFit);

#undef COOPSCAT_DEFINE_ERROR

}  // namespace coopscat
