// SPDX-License-Identifier: Apache-2.0
#ifndef CONFALG_ERRORS_HPP_
#define CONFALG_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace confalg {

/// Base class of every error raised by the library. The CLI maps
/// ParseError, InvalidArgument and DimensionMismatch to exit code 2 and
/// every other Error to exit code 1.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
  virtual const char* kind() const noexcept { return "Error"; }
};

#define CONFALG_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                        \
   public:                                                           \
    explicit Name(const std::string& what) : Error(what) {}          \
    const char* kind() const noexcept override { return #Name; }     \
  };

CONFALG_DEFINE_ERROR(DimensionMismatch)
CONFALG_DEFINE_ERROR(SingularMatrix)
CONFALG_DEFINE_ERROR(NotIdempotent)
CONFALG_DEFINE_ERROR(ConstraintViolated)
CONFALG_DEFINE_ERROR(NotVirasoro)
CONFALG_DEFINE_ERROR(CutoffExceeded)
CONFALG_DEFINE_ERROR(NotRegular)
CONFALG_DEFINE_ERROR(InconsistentData)
CONFALG_DEFINE_ERROR(PartitionViolation)
CONFALG_DEFINE_ERROR(ClaimFailed)
CONFALG_DEFINE_ERROR(NotRepresentation)
CONFALG_DEFINE_ERROR(InvalidArgument)
CONFALG_DEFINE_ERROR(ParseError)

#undef CONFALG_DEFINE_ERROR

}  // namespace confalg

#endif  // CONFALG_ERRORS_HPP_
