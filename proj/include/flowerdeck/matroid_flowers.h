// Copyright 2026 The Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef FLOWERDECK_MATROID_FLOWERS_H_
#define FLOWERDECK_MATROID_FLOWERS_H_

#include <utility>

#include "flowerdeck/matroid.h"
#include "flowerdeck/pseudoflower.h"

namespace fd {

// Local connectivity of adjacent (c) and non-adjacent (d) petals.
struct FlowerParameters {
  int c = 0;
  int d = 0;
  friend bool operator==(const FlowerParameters&, const FlowerParameters&) = default;
};

// F must be a flower of the matroid's connectivity function with at least
// five petals. Checks that every adjacent pair gives c, every other pair d,
// and that an interval against any set of remaining petals gives d, c or
// 2c-d as it touches the interval on no, one or both sides.
FlowerParameters flower_parameters(const Matroid& m, const Pseudoflower& f);

struct DualFlowerReport {
  FlowerParameters primal;
  FlowerParameters dual;
};

// Parameters of F in M and in M*, with c + c* = k-1 and c* - d* = c - d.
DualFlowerReport dual_flower_check(const Matroid& m, const Pseudoflower& f);

struct PetalMinor {
  Matroid minor;
  ConnectivitySystem system;
  Pseudoflower flower;  // the two neighbours of the petal merged
  FlowerParameters params;
};

// M \ P_i as a (2c-d+1)-flower with parameters (c, d), and M / P_i as a
// (k-d)-flower with parameters (c-d, 0).
PetalMinor delete_petal(const Matroid& m, const Pseudoflower& f, int petal_index);
PetalMinor contract_petal(const Matroid& m, const Pseudoflower& f, int petal_index);

struct ClassReduction {
  Mask c = 0;  // base of M.X inside a base B of M|X
  Mask d = 0;  // X - B
  Mask f = 0;  // the rest, of size lambda(X)
};

// Shrinks X to lambda(X) elements by contracting C and deleting D, and checks
// that connectivities away from X survive on every pair of disjoint subsets
// of E - X (sampled above 3^12 pairs).
ClassReduction reduce_class(const Matroid& m, Mask x, std::uint64_t seed = 0);

}  // namespace fd

#endif  // FLOWERDECK_MATROID_FLOWERS_H_
