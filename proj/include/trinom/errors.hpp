#pragma once

// SPDX-License-Identifier: Apache-2.0

#include <cstdint>
#include <stdexcept>
#include <string>

namespace trinom {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An algebraic value expected to be a rational integer was not. Raised by the
// closed-form evaluators; it means a formula was transcribed wrong.
class NotRationalInteger : public Error {
 public:
  using Error::Error;
};

class ArityMismatch : public Error {
 public:
  using Error::Error;
};

class NotDivisibleBy3 : public Error {
 public:
  using Error::Error;
};

class TooLarge : public Error {
 public:
  using Error::Error;
};

class NonUnitConstantTerm : public Error {
 public:
  using Error::Error;
};

class UnknownSequence : public Error {
 public:
  using Error::Error;
};

// Argument outside an operation's domain (n = 0 for a closed form, a class
// an engine does not produce, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class IdentityViolation : public Error {
 public:
  IdentityViolation(std::string identity, std::int64_t index)
      : Error("identity '" + identity + "' violated at n=" + std::to_string(index)),
        identity_(std::move(identity)),
        index_(index) {}

  const std::string& identity() const noexcept { return identity_; }
  std::int64_t index() const noexcept { return index_; }

 private:
  std::string identity_;
  std::int64_t index_;
};

}  // namespace trinom
