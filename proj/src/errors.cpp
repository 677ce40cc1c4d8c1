// Copyright 2026 The torusconj Authors
// SPDX-License-Identifier: Apache-2.0

#include "torusconj/errors.hpp"

namespace torusconj {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kDimensionMismatch: return "DimensionMismatch";
    case ErrorKind::kRankDeficient: return "RankDeficient";
    case ErrorKind::kNotUnimodular: return "NotUnimodular";
    case ErrorKind::kZeroVector: return "ZeroVector";
    case ErrorKind::kNotPrimitive: return "NotPrimitive";
    case ErrorKind::kNotInGroup: return "NotInGroup";
    case ErrorKind::kNegativeExponent: return "NegativeExponent";
    case ErrorKind::kTooLarge: return "TooLarge";
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

void fail(ErrorKind kind, const std::string& what) { throw DomainError(kind, what); }

}  // namespace torusconj
