// Copyright 2026 The Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef FLOWERDECK_SEPS_H_
#define FLOWERDECK_SEPS_H_

#include <array>
#include <vector>

#include "flowerdeck/core.h"

// Bipartitions (A, E-A) of a nonempty ground set, identified with the side A.
// `full` is the mask of E throughout.
namespace fd::seps {

inline Mask inverse(Mask full, Mask a) { return full & ~a; }
inline bool leq(Mask a, Mask b) { return subset_of(a, b); }

// The orientation that avoids element 0.
inline Mask canonical(Mask full, Mask a) { return (a & 1) ? inverse(full, a) : a; }

inline bool points_towards(Mask full, Mask a, Mask b) {
  return subset_of(a, b) || subset_of(a, inverse(full, b));
}

bool nested(Mask full, Mask a, Mask b);

// (A u B, A u (E-B), B u (E-A), E - (A n B)).
std::array<Mask, 4> corners(Mask full, Mask a, Mask b);

inline bool is_small(Mask full, Mask a) { return subset_of(a, inverse(full, a)); }
inline bool is_co_small(Mask full, Mask a) { return is_small(full, inverse(full, a)); }

// Pairwise disjoint sides.
bool is_star(const std::vector<Mask>& seps);

class SepSystem {
 public:
  SepSystem(Mask full, std::vector<Mask> seps, bool closed_under_inverse = true);

  Mask full() const { return full_; }
  const std::vector<Mask>& seps() const { return seps_; }
  bool contains(Mask a) const;
  bool closed_under_inverse() const { return closed_; }

 private:
  Mask full_;
  std::vector<Mask> seps_;  // sorted, unique
  bool closed_;
};

// Exactly one of {s, E-s} for every s in S.
bool is_orientation(const SepSystem& s, const std::vector<Mask>& o);

// Down-closed within S. Throws InputError if O does not orient S.
bool is_consistent(const SepSystem& s, const std::vector<Mask>& o);

// The weaker notion: no r, t in O that are not orientations of each other
// with (E-r) strictly below t.
bool is_consistent_weak(Mask full, const std::vector<Mask>& o);

}  // namespace fd::seps

#endif  // FLOWERDECK_SEPS_H_
