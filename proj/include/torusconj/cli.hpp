// Copyright 2026 The torusconj Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace torusconj::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMalformed = 1;
inline constexpr int kExitPrecondition = 2;

/// Executes one command line (program name excluded) and writes a single
/// JSON document to `out`. Diagnostics go to `err`; `in` is read only when
/// --stdin is given.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err, std::istream& in);

}  // namespace torusconj::cli
