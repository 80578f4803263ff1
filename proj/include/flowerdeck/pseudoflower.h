// Copyright 2026 The Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef FLOWERDECK_PSEUDOFLOWER_H_
#define FLOWERDECK_PSEUDOFLOWER_H_

#include <optional>
#include <vector>

#include "flowerdeck/connsys.h"
#include "flowerdeck/cyclic.h"

namespace fd {

// A partition of E into petals with a cyclic order on the petal indices,
// such that every interval union has order at most k-1. Only obtainable
// through make_pseudoflower, so holding one means it was validated.
class Pseudoflower {
 public:
  const ConnectivitySystem& system() const { return sys_; }
  int k() const { return k_; }
  int num_petals() const { return static_cast<int>(petals_.size()); }
  const std::vector<Mask>& petals() const { return petals_; }
  Mask petal(int index) const { return petals_.at(index); }
  const CyclicOrder& order() const { return order_; }

  // Petal at ring position `pos` (taken mod the petal count).
  Mask petal_at(int pos) const { return petals_[order_.at(pos)]; }
  // Union of `len` consecutive petals starting at ring position `start`.
  Mask interval_union(int start, int len) const;
  // S(u, v): petals between cut u and cut v walking forward.
  Mask cut_union(int from, int to) const;
  // Union of the petals whose indices are set in `index_mask`.
  Mask petal_union(std::uint64_t index_mask) const;
  bool is_interval_index_set(std::uint64_t index_mask) const;
  int petal_of(int element) const;

 private:
  friend Pseudoflower make_pseudoflower(const ConnectivitySystem&, std::vector<Mask>,
                                        CyclicOrder, int);
  Pseudoflower(ConnectivitySystem sys, std::vector<Mask> petals, CyclicOrder order, int k)
      : sys_(std::move(sys)), petals_(std::move(petals)), order_(std::move(order)), k_(k) {}

  ConnectivitySystem sys_;
  std::vector<Mask> petals_;
  CyclicOrder order_;
  int k_;
};

// Raised when some interval union has order above k-1.
struct NotPseudoflowerError : InputError {
  NotPseudoflowerError(const std::string& what, int start, int len, Mask u)
      : InputError(what), start(start), len(len), witness(u) {}
  int start;  // ring position
  int len;    // number of petals; 0 for the empty interval
  Mask witness;
};

// Throws InputError if `petals` is not a partition into nonempty classes or
// `order` is not a cyclic order on the indices; NotPseudoflowerError if an
// interval union is too big.
Pseudoflower make_pseudoflower(const ConnectivitySystem& sys, std::vector<Mask> petals,
                               CyclicOrder order, int k);

// Petals listed in cyclic order.
Pseudoflower make_pseudoflower(const ConnectivitySystem& sys, std::vector<Mask> ring_petals,
                               int k);

// The common refinement of two partitions of the same set.
std::vector<Mask> common_refinement(const std::vector<Mask>& a, const std::vector<Mask>& b);

}  // namespace fd

#endif  // FLOWERDECK_PSEUDOFLOWER_H_
