#ifndef GSCALE_ERROR_HPP_
#define GSCALE_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <utility>

namespace gscale {

  // Base class for every error raised by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Two elements from different monoid instances were combined.
  class FamilyMismatch : public Error {
   public:
    using Error::Error;
  };

  // A family configuration violates one of its invariants. The message names
  // the offending field path and the violated invariant.
  class ConfigError : public Error {
   public:
    ConfigError(std::string field, std::string const& what)
        : Error(field + ": " + what), field_(std::move(field)) {}

    std::string const& field() const noexcept {
      return field_;
    }

   private:
    std::string field_;
  };

  // Text could not be parsed as an element of the family.
  class ParseError : public Error {
   public:
    using Error::Error;
  };

  // Exact integer arithmetic left the range of std::int64_t.
  class OverflowError : public Error {
   public:
    using Error::Error;
  };

  // A precondition of an operation does not hold (e.g. a non-core element was
  // passed where a core element is required).
  class PreconditionError : public Error {
   public:
    using Error::Error;
  };

  // A family primitive returned something contradicting the kernel contracts.
  class ContractViolation : public Error {
   public:
    using Error::Error;
  };

}  // namespace gscale

#endif  // GSCALE_ERROR_HPP_
