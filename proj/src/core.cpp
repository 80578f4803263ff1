// Copyright 2026 The Authors.
// SPDX-License-Identifier: Apache-2.0

#include "flowerdeck/core.h"

#include <utility>

namespace fd {

std::string to_string(Order o) {
  return o.is_inf() ? std::string("inf") : std::to_string(o.value());
}

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (size() > kMaxGround) {
    throw InputError("ground set has " + std::to_string(size()) +
                     " elements; at most 24 are supported");
  }
  for (int i = 0; i < size(); ++i) {
    if (!index_.emplace(labels_[i], i).second) {
      throw InputError("duplicate ground label '" + labels_[i] + "'");
    }
  }
}

GroundSet GroundSet::numbered(int n, int first) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(first + i));
  return GroundSet(std::move(labels));
}

GroundSet GroundSet::prefixed(const std::string& prefix, int n, int first) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(first + i));
  return GroundSet(std::move(labels));
}

int GroundSet::index_of(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) {
    throw InputError("unknown ground label '" + std::string(label) + "'");
  }
  return it->second;
}

Mask GroundSet::mask_of(const std::vector<std::string>& labels) const {
  Mask m = 0;
  for (const auto& l : labels) m |= bit(index_of(l));
  return m;
}

std::vector<std::string> GroundSet::labels_of(Mask m) const {
  check(m);
  std::vector<std::string> out;
  for (int i : elements_of(m)) out.push_back(labels_[i]);
  return out;
}

void GroundSet::check(Mask m) const {
  if ((m & ~full()) != 0) {
    throw InputError("subset mask is wider than the ground set");
  }
}

GroundSet GroundSet::restrict(Mask m) const {
  check(m);
  std::vector<std::string> labels;
  for (int i : elements_of(m)) labels.push_back(labels_[i]);
  return GroundSet(std::move(labels));
}

Mask deposit(Mask m, Mask positions) {
  Mask out = 0;
  for (Mask p = positions; p != 0; p &= p - 1, m >>= 1) {
    if (m & 1) out |= p & (~p + 1);
  }
  return out;
}

Mask extract(Mask m, Mask positions) {
  Mask out = 0;
  int j = 0;
  for (Mask p = positions; p != 0; p &= p - 1, ++j) {
    if (m & p & (~p + 1)) out |= bit(j);
  }
  return out;
}

std::vector<int> elements_of(Mask m) {
  std::vector<int> out;
  for (; m != 0; m &= m - 1) out.push_back(lowest(m));
  return out;
}

}  // namespace fd
