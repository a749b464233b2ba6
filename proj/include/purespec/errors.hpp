#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace purespec {

// Root of every error the library raises. `kind()` gives a stable name that
// the CLI uses to pick an exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "Error"; }
};

#define PURESPEC_DEFINE_ERROR(Name, Base)                        \
  class Name : public Base {                                     \
   public:                                                       \
    using Base::Base;                                            \
    const char* kind() const noexcept override { return #Name; } \
  };

// Resource limits (order cap, lattice cap).
PURESPEC_DEFINE_ERROR(ResourceError, Error)
PURESPEC_DEFINE_ERROR(OrderCapExceeded, ResourceError)
PURESPEC_DEFINE_ERROR(IdealLatticeTooLarge, ResourceError)

// Bad inputs to library calls.
PURESPEC_DEFINE_ERROR(InvalidArgument, Error)
PURESPEC_DEFINE_ERROR(RingMismatch, InvalidArgument)
PURESPEC_DEFINE_ERROR(ImproperIdeal, InvalidArgument)
PURESPEC_DEFINE_ERROR(NotPrime, InvalidArgument)
PURESPEC_DEFINE_ERROR(NotPure, InvalidArgument)
PURESPEC_DEFINE_ERROR(NotAnIdeal, InvalidArgument)
PURESPEC_DEFINE_ERROR(NotAHomomorphism, InvalidArgument)
PURESPEC_DEFINE_ERROR(InvalidRingTables, InvalidArgument)
PURESPEC_DEFINE_ERROR(UnsupportedBackend, InvalidArgument)
PURESPEC_DEFINE_ERROR(UnknownCheckId, InvalidArgument)
PURESPEC_DEFINE_ERROR(ConfigError, InvalidArgument)
PURESPEC_DEFINE_ERROR(SemanticError, InvalidArgument)

// A computed object contradicted a property that must hold; always a bug.
PURESPEC_DEFINE_ERROR(InternalInvariant, Error)

#undef PURESPEC_DEFINE_ERROR

class ParseError : public InvalidArgument {
 public:
  ParseError(std::size_t offset, std::string expected)
      : InvalidArgument("parse error at byte " + std::to_string(offset) +
                        ": expected " + expected),
        offset_(offset),
        expected_(std::move(expected)) {}

  const char* kind() const noexcept override { return "ParseError"; }
  std::size_t offset() const noexcept { return offset_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::string expected_;
};

}  // namespace purespec
