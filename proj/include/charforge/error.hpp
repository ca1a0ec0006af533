#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace charforge {

/// Base of every error raised by the library. The CLI maps subclasses onto
/// exit codes, so new failure kinds should derive from the closest match.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input is malformed or violates an operation's precondition.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// A configured resource limit was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// A mathematical check that must never fail did fail.
class VerificationError : public Error {
 public:
  using Error::Error;
};

class ClosureTooLarge : public ResourceError {
 public:
  ClosureTooLarge(std::size_t cap)
      : ResourceError("group closure exceeds the cap of " + std::to_string(cap) + " elements"),
        cap_(cap) {}
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

class InvalidPermutation : public UsageError {
 public:
  using UsageError::UsageError;
};

class NotPGroup : public UsageError {
 public:
  using UsageError::UsageError;
};

class NotNormal : public UsageError {
 public:
  using UsageError::UsageError;
};

class NotNilpotent : public UsageError {
 public:
  using UsageError::UsageError;
};

class UnsupportedPrime : public UsageError {
 public:
  using UsageError::UsageError;
};

class ParseError : public UsageError {
 public:
  ParseError(std::string message, std::size_t position)
      : UsageError(message + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class NotRational : public VerificationError {
 public:
  using VerificationError::VerificationError;
};

class GroupMismatch : public UsageError {
 public:
  using UsageError::UsageError;
};

class SubgroupMismatch : public UsageError {
 public:
  using UsageError::UsageError;
};

class NotACharacter : public VerificationError {
 public:
  using VerificationError::VerificationError;
};

class NoSourceFound : public VerificationError {
 public:
  using VerificationError::VerificationError;
};

class HypothesisViolation : public UsageError {
 public:
  using UsageError::UsageError;
};

class TheoremViolation : public VerificationError {
 public:
  using VerificationError::VerificationError;
};

class RowOutOfRange : public UsageError {
 public:
  using UsageError::UsageError;
};

}  // namespace charforge
