// Copyright 2026 The torusconj Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace torusconj {

/// Precondition failures raised by the library operations.
enum class ErrorKind {
  kDimensionMismatch,
  kRankDeficient,
  kNotUnimodular,
  kZeroVector,
  kNotPrimitive,
  kNotInGroup,
  kNegativeExponent,
  kTooLarge,
  kInvalidArgument,
};

std::string_view to_string(ErrorKind kind);

class DomainError : public std::invalid_argument {
 public:
  DomainError(ErrorKind kind, const std::string& what)
      : std::invalid_argument(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Malformed textual or JSON input (distinct from a precondition violation).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

}  // namespace torusconj
