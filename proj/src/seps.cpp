// Copyright 2026 The Authors.
// SPDX-License-Identifier: Apache-2.0

#include "flowerdeck/seps.h"

#include <algorithm>

namespace fd::seps {

bool nested(Mask full, Mask a, Mask b) {
  return subset_of(a, b) || (a & b) == 0 || subset_of(b, a) || (a | b) == full;
}

std::array<Mask, 4> corners(Mask full, Mask a, Mask b) {
  return {a | b, a | inverse(full, b), b | inverse(full, a), inverse(full, a & b)};
}

bool is_star(const std::vector<Mask>& seps) {
  for (std::size_t i = 0; i < seps.size(); ++i) {
    for (std::size_t j = i + 1; j < seps.size(); ++j) {
      if (seps[i] != seps[j] && (seps[i] & seps[j]) != 0) return false;
    }
  }
  return true;
}

SepSystem::SepSystem(Mask full, std::vector<Mask> seps, bool closed_under_inverse)
    : full_(full), seps_(std::move(seps)), closed_(closed_under_inverse) {
  if (full == 0) throw InputError("separations need a nonempty ground set");
  std::sort(seps_.begin(), seps_.end());
  seps_.erase(std::unique(seps_.begin(), seps_.end()), seps_.end());
  for (Mask a : seps_) {
    if (!subset_of(a, full)) throw InputError("separation outside the ground set");
    if (closed_ && !contains(inverse(full, a))) {
      throw InputError("separation system is not closed under inverse");
    }
  }
}

bool SepSystem::contains(Mask a) const {
  return std::binary_search(seps_.begin(), seps_.end(), a);
}

bool is_orientation(const SepSystem& s, const std::vector<Mask>& o) {
  std::vector<Mask> sorted = o;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  auto in_o = [&](Mask a) { return std::binary_search(sorted.begin(), sorted.end(), a); };
  for (Mask a : sorted) {
    if (!s.contains(a)) return false;
  }
  for (Mask a : s.seps()) {
    if (in_o(a) == in_o(inverse(s.full(), a))) return false;
  }
  return true;
}

bool is_consistent(const SepSystem& s, const std::vector<Mask>& o) {
  if (!is_orientation(s, o)) throw InputError("not an orientation of the system");
  std::vector<Mask> sorted = o;
  std::sort(sorted.begin(), sorted.end());
  for (Mask r : s.seps()) {
    if (std::binary_search(sorted.begin(), sorted.end(), r)) continue;
    for (Mask t : sorted) {
      if (subset_of(r, t)) return false;
    }
  }
  return true;
}

bool is_consistent_weak(Mask full, const std::vector<Mask>& o) {
  for (Mask r : o) {
    for (Mask t : o) {
      if (t == r || t == inverse(full, r)) continue;
      Mask rr = inverse(full, r);
      if (subset_of(rr, t) && rr != t) return false;
    }
  }
  return true;
}

}  // namespace fd::seps
