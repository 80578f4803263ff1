// Copyright 2026 The Authors.
// SPDX-License-Identifier: Apache-2.0

#include "flowerdeck/pseudoflower.h"

#include <algorithm>
#include <numeric>

namespace fd {

Mask Pseudoflower::interval_union(int start, int len) const {
  Mask u = 0;
  for (int i = 0; i < len; ++i) u |= petal_at(start + i);
  return u;
}

Mask Pseudoflower::cut_union(int from, int to) const {
  const int p = num_petals();
  return interval_union(from, ((to - from) % p + p) % p);
}

Mask Pseudoflower::petal_union(std::uint64_t index_mask) const {
  Mask u = 0;
  for (int i = 0; i < num_petals(); ++i) {
    if ((index_mask >> i) & 1) u |= petals_[i];
  }
  return u;
}

bool Pseudoflower::is_interval_index_set(std::uint64_t index_mask) const {
  const int p = num_petals();
  const std::uint64_t all = p >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << p) - 1;
  index_mask &= all;
  if (index_mask == 0 || index_mask == all) return true;
  // An interval has exactly one ring position where membership switches on.
  int starts = 0;
  for (int pos = 0; pos < p; ++pos) {
    bool here = (index_mask >> order_.at(pos)) & 1;
    bool prev = (index_mask >> order_.at(pos - 1)) & 1;
    if (here && !prev) ++starts;
  }
  return starts == 1;
}

int Pseudoflower::petal_of(int element) const {
  for (int i = 0; i < num_petals(); ++i) {
    if ((petals_[i] >> element) & 1) return i;
  }
  throw InputError("element outside the ground set");
}

Pseudoflower make_pseudoflower(const ConnectivitySystem& sys, std::vector<Mask> petals,
                               CyclicOrder order, int k) {
  if (k < 1) throw PreconditionError("pseudoflowers need k >= 1");
  if (petals.empty()) throw InputError("a pseudoflower needs at least one petal");
  Mask seen = 0;
  for (Mask p : petals) {
    sys.ground().check(p);
    if (p == 0) throw InputError("petals must be nonempty");
    if ((seen & p) != 0) throw InputError("petals overlap");
    seen |= p;
  }
  if (seen != sys.full()) throw InputError("petals do not cover the ground set");
  const int n = static_cast<int>(petals.size());
  if (order.size() != n) throw InputError("cyclic order does not match the petals");
  for (int i = 0; i < n; ++i) {
    if (!order.contains(i)) throw InputError("cyclic order does not match the petals");
  }

  Pseudoflower f(sys, std::move(petals), std::move(order), k);
  const Order bound(static_cast<std::uint32_t>(k - 1));
  if (sys.lambda(0) > bound) {
    throw NotPseudoflowerError("the empty interval has order above k-1", 0, 0, 0);
  }
  for (int start = 0; start < n; ++start) {
    for (int len = 1; len < n; ++len) {
      Mask u = f.interval_union(start, len);
      if (sys.lambda(u) > bound) {
        throw NotPseudoflowerError("an interval union has order " + to_string(sys.lambda(u)) +
                                       " > k-1",
                                   start, len, u);
      }
    }
  }
  return f;
}

Pseudoflower make_pseudoflower(const ConnectivitySystem& sys, std::vector<Mask> ring_petals,
                               int k) {
  std::vector<int> ring(ring_petals.size());
  std::iota(ring.begin(), ring.end(), 0);
  return make_pseudoflower(sys, std::move(ring_petals), CyclicOrder(std::move(ring)), k);
}

std::vector<Mask> common_refinement(const std::vector<Mask>& a, const std::vector<Mask>& b) {
  std::vector<Mask> out;
  for (Mask x : a) {
    for (Mask y : b) {
      if ((x & y) != 0) out.push_back(x & y);
    }
  }
  std::sort(out.begin(), out.end(), [](Mask x, Mask y) { return lowest(x) < lowest(y); });
  return out;
}

}  // namespace fd
