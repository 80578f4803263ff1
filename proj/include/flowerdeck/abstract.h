// Copyright 2026 The Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef FLOWERDECK_ABSTRACT_H_
#define FLOWERDECK_ABSTRACT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "flowerdeck/cyclic.h"
#include "flowerdeck/flowers.h"
#include "flowerdeck/profiles.h"

namespace fd {

// A set of members of a profile family, bit i for fam[i]. Families are capped
// at 64 profiles.
using ProfileSet = std::uint64_t;

inline ProfileSet family_mask(int m) {
  return m >= 64 ? ~ProfileSet{0} : (ProfileSet{1} << m) - 1;
}

// The members of fam in which A is the big side: {P : E \ A in P}.
ProfileSet phi(const ConnectivitySystem& sys, Mask a, const ProfileFamily& fam);

// Bipartitions of the family cross when all four corners are nonempty.
bool crosses(ProfileSet all, ProfileSet x, ProfileSet y);

enum class PreflowerKind { kPreAnemone, kPreDaisy };
std::string to_string(PreflowerKind kind);

struct AbstractSystem {
  ConnectivitySystem sys;
  ProfileFamily fam;
  int k = 0;
  ProfileSet all = 0;                     // the whole family
  std::vector<ProfileSet> b;              // image of phi minus 0 and all, sorted
  std::vector<ProfileSet> nested;         // members crossing nothing
  std::vector<std::vector<ProfileSet>> classes;    // components of the crossing graph
  std::vector<std::vector<ProfileSet>> boundaries;  // per class, sorted by lowest bit
  std::vector<PreflowerKind> class_kind;
  std::vector<ProfileSet> e_prime;        // nested members plus boundary sides, sorted

  bool in_b(ProfileSet x) const;
};

AbstractSystem build_abstract(const ConnectivitySystem& sys, const ProfileFamily& fam);

// Profiles not told apart by any member of f, sorted by lowest member.
std::vector<ProfileSet> boundary(ProfileSet all, const std::vector<ProfileSet>& f);

// Members of f must be crossing-connected and number at least two.
PreflowerKind classify_preflower(const AbstractSystem& asys, const std::vector<ProfileSet>& f);

// Cyclic order on the boundary classes (by index into boundaries[v]) of a
// daisy-type class, mirror-canonical.
CyclicOrder boundary_cyclic_order(const AbstractSystem& asys, int v);

// Where the boundary classes of `parts` sit in a cyclic order making exactly
// the interval unions present, if there is one.
std::optional<CyclicOrder> interval_order(const std::vector<ProfileSet>& parts,
                                          const std::vector<ProfileSet>& present);

enum class VertexKind { kElement, kAnemone, kDaisy, kSimple, kEmpty };
std::string to_string(VertexKind kind);

struct AbstractTree {
  // Each vertex is the set of chosen sides of e_prime, one per pair, sorted.
  // A chosen side is the part of the family the vertex lies in.
  std::vector<std::vector<ProfileSet>> vertices;
  std::vector<VertexKind> kind;
  std::vector<ProfileSet> part;      // profiles whose orientation is the vertex
  std::vector<int> class_of;         // class V with O_V here, or -1
  // Edge {u, v} and the side of e_prime chosen at u but not at v.
  struct Edge {
    int u, v;
    ProfileSet side;
  };
  std::vector<Edge> edges;
};

AbstractTree build_tree(const AbstractSystem& asys);

// Orientation of e_prime by one profile, and the one pointing at class v.
std::vector<ProfileSet> orientation_of_profile(const AbstractSystem& asys, int profile);
std::vector<ProfileSet> orientation_of_class(const AbstractSystem& asys, int v);

// Which structural case a vertex falls under: 1 for a nonempty
// part, else 2 (nothing across), 3 (everything across) or 4 (intervals).
// Returns every case that holds, so conformance means a single entry.
std::vector<int> structure_cases(const AbstractSystem& asys, const AbstractTree& tree, int vertex);

// The class whose boundary carries the displayed separations of F.
int flower_class(const AbstractSystem& asys, const Pseudoflower& f);

// Preimages p of r and q of t with p a subset of q.
std::pair<Mask, Mask> nested_preimages(const AbstractSystem& asys, ProfileSet r, ProfileSet t);

Mask biggest_preimage(const AbstractSystem& asys, ProfileSet r);

// The orientation of B with P as a vertex, as its small sides.
std::vector<ProfileSet> push_forward(const AbstractSystem& asys, int profile);
// Sides of order < k whose image lies in the orientation or is empty.
Profile pull_back(const AbstractSystem& asys, const std::vector<ProfileSet>& small_sides);

std::string to_dot(const AbstractSystem& asys, const AbstractTree& tree,
                   const std::string& name = "abstract");

}  // namespace fd

#endif  // FLOWERDECK_ABSTRACT_H_
