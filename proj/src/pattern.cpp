// Copyright 2026 The torusconj Authors
// SPDX-License-Identifier: Apache-2.0

#include "torusconj/pattern.hpp"

#include "torusconj/errors.hpp"

namespace torusconj {

ZeroPattern ZeroPattern::from_indices(std::size_t n, std::span<const std::size_t> indices) {
  ZeroPattern p(n);
  for (std::size_t i : indices) {
    if (i >= n) fail(ErrorKind::kDimensionMismatch, "zero index outside 1..n");
    p.zero_[i] = true;
  }
  return p;
}

ZeroPattern ZeroPattern::from_indices(std::size_t n, std::initializer_list<std::size_t> indices) {
  return from_indices(n, std::span<const std::size_t>(indices.begin(), indices.size()));
}

ZeroPattern ZeroPattern::all(std::size_t n) {
  ZeroPattern p(n);
  p.zero_.assign(n, true);
  return p;
}

ZeroPattern ZeroPattern::from_mask(std::size_t n, unsigned long mask) {
  ZeroPattern p(n);
  for (std::size_t i = 0; i < n; ++i) p.zero_[i] = (mask >> i) & 1UL;
  return p;
}

std::size_t ZeroPattern::size() const {
  std::size_t c = 0;
  for (bool z : zero_) c += z;
  return c;
}

std::vector<std::size_t> ZeroPattern::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < zero_.size(); ++i)
    if (zero_[i]) out.push_back(i);
  return out;
}

std::vector<std::size_t> ZeroPattern::complement() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < zero_.size(); ++i)
    if (!zero_[i]) out.push_back(i);
  return out;
}

}  // namespace torusconj
