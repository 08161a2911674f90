#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace monfact {

using Nat = std::uint64_t;

/// Precondition or parameter violation (bad family index, empty input, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A sum of exponents or set elements left the machine range.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// A factorization search ran out of its node or wall-time budget. This is
/// distinct from "no factorization exists".
class SearchInconclusive : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual or JSON input.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline Nat checked_add(Nat a, Nat b) {
  Nat out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw OverflowError("natural number overflow in " + std::to_string(a) +
                        " + " + std::to_string(b));
  }
  return out;
}

inline Nat checked_mul(Nat a, Nat b) {
  Nat out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw OverflowError("natural number overflow in " + std::to_string(a) +
                        " * " + std::to_string(b));
  }
  return out;
}

}  // namespace monfact
