// Copyright 2026 The Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef FLOWERDECK_PROFILES_H_
#define FLOWERDECK_PROFILES_H_

#include <vector>

#include "flowerdeck/connsys.h"
#include "flowerdeck/parallel.h"
#include "flowerdeck/pseudoflower.h"

namespace fd {

// An orientation of S_k, stored as its chosen sides in ascending order.
struct Profile {
  int k = 0;
  std::vector<Mask> sides;

  bool contains(Mask a) const;
  friend bool operator==(const Profile&, const Profile&) = default;
  friend bool operator<(const Profile& a, const Profile& b) {
    return a.sides != b.sides ? a.sides < b.sides : a.k < b.k;
  }
};

// All sides of order < k, ascending.
std::vector<Mask> low_order_sides(const ConnectivitySystem& sys, int k);

// Checks the axioms directly: orientation of S_k, down-closure (or the weak
// consistency when `regular` is false), and the profile property.
bool is_profile(const ConnectivitySystem& sys, int k, const std::vector<Mask>& sides,
                bool regular = true);

struct ProfileOptions {
  // Also return profiles that contain the co-small side E.
  bool irregular = false;
  Exec exec = Exec::kParallel;
};

// Every k-profile, sorted. k = 0 gives the single empty profile.
std::vector<Profile> enumerate_profiles(const ConnectivitySystem& sys, int k,
                                        const ProfileOptions& opts = {});

Profile truncate(const ConnectivitySystem& sys, const Profile& p, int l);

bool distinguishes(const ConnectivitySystem& sys, Mask a, const Profile& p, const Profile& q);

// Profiles sharing k and the truncation to k-1.
class ProfileFamily {
 public:
  ProfileFamily() = default;
  ProfileFamily(const ConnectivitySystem& sys, std::vector<Profile> profiles);

  int k() const { return k_; }
  int size() const { return static_cast<int>(profiles_.size()); }
  bool empty() const { return profiles_.empty(); }
  const Profile& operator[](int i) const { return profiles_[i]; }
  const std::vector<Profile>& profiles() const { return profiles_; }

 private:
  std::vector<Profile> profiles_;
  int k_ = 0;
};

// Splits profiles into families by their truncation to k-1, in sorted order.
std::vector<ProfileFamily> group_by_truncation(const ConnectivitySystem& sys,
                                               const std::vector<Profile>& profiles);

struct Location {
  bool at_petal = false;
  int index = 0;  // petal index or cut
  friend bool operator==(const Location&, const Location&) = default;
};

// Where a profile sits on a pseudoflower with at least three petals.
Location locate(const Profile& p, const Pseudoflower& f);

// Every orientation pair of A and B lies in a common member of fam.
bool crosses_properly(const ConnectivitySystem& sys, Mask a, Mask b, const ProfileFamily& fam);

}  // namespace fd

#endif  // FLOWERDECK_PROFILES_H_
