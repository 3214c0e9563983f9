// Exact integer arithmetic used by every module.
//
// Coordinates are 64-bit signed integers; every operation that can leave the
// representable range throws OverflowError instead of wrapping.

#ifndef BICYCLIC_INTEGER_HPP_
#define BICYCLIC_INTEGER_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bicyclic {

  using Int = std::int64_t;

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Operands live in different semigroups, or a value violates the
  // invariants of its domain (e.g. a negative coordinate in B_omega).
  class DomainError : public Error {
   public:
    using Error::Error;
  };

  class OverflowError : public Error {
   public:
    using Error::Error;
  };

  class ParseError : public Error {
   public:
    using Error::Error;
  };

  class PreconditionError : public Error {
   public:
    using Error::Error;
  };

  inline Int checked_add(Int x, Int y) {
    Int r;
    if (__builtin_add_overflow(x, y, &r)) {
      throw OverflowError("integer overflow in " + std::to_string(x) + " + "
                          + std::to_string(y));
    }
    return r;
  }

  inline Int checked_sub(Int x, Int y) {
    Int r;
    if (__builtin_sub_overflow(x, y, &r)) {
      throw OverflowError("integer overflow in " + std::to_string(x) + " - "
                          + std::to_string(y));
    }
    return r;
  }

  inline Int checked_mul(Int x, Int y) {
    Int r;
    if (__builtin_mul_overflow(x, y, &r)) {
      throw OverflowError("integer overflow in " + std::to_string(x) + " * "
                          + std::to_string(y));
    }
    return r;
  }

}  // namespace bicyclic

#endif  // BICYCLIC_INTEGER_HPP_
