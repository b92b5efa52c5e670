#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace padic {

// Raised when a computation cannot proceed at the precision actually known.
class PrecisionError : public std::runtime_error {
 public:
  explicit PrecisionError(const std::string& what) : std::runtime_error(what) {}
};

// Divisor is nonzero as far as we can tell, but all of its known digits vanish.
class DivisionByIndistinguishableZero : public PrecisionError {
 public:
  DivisionByIndistinguishableZero()
      : PrecisionError("cannot divide by something indistinguishable from zero.") {}
};

// Divisor is an exact zero.
class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero") {}
};

// A tracker was asked about a variable id it does not (or no longer) knows.
class UnknownVariable : public std::logic_error {
 public:
  explicit UnknownVariable(std::uint64_t id)
      : std::logic_error("unknown variable id " + std::to_string(id)) {}
};

// Operands belong to two different rings.
class MixedRings : public std::invalid_argument {
 public:
  MixedRings() : std::invalid_argument("operands live in different rings") {}
};

// The result would leave the ring (a non-integral quotient in integer kind).
class NotInRing : public std::domain_error {
 public:
  NotInRing() : std::domain_error("quotient is not integral in this ring") {}
};

// Defensive: projected precision generators do not span the requested space.
class DeficientRank : public std::logic_error {
 public:
  DeficientRank() : std::logic_error("precision generators have deficient rank") {}
};

// The operation is not defined for the tracking mode of this module.
class UnsupportedInMode : public std::logic_error {
 public:
  explicit UnsupportedInMode(const std::string& op)
      : std::logic_error(op + " is not supported in this tracking mode") {}
};

}  // namespace padic
