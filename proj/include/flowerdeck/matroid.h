// Copyright 2026 The Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef FLOWERDECK_MATROID_H_
#define FLOWERDECK_MATROID_H_

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "flowerdeck/core.h"

namespace fd {

// Rank oracle over a labelled ground set. Copies share the backend and its
// memo table, which is safe to hit from several threads at once.
class Matroid {
 public:
  static Matroid uniform(GroundSet ground, int rank);
  // Edge i joins vertices ends[i].first and ends[i].second.
  static Matroid graphic(GroundSet ground, int num_vertices,
                         std::vector<std::pair<int, int>> ends);
  // Columns over GF(p), p prime below 2^31. Entries may be negative.
  static Matroid linear_mod_p(GroundSet ground, std::uint32_t p,
                              std::vector<std::vector<std::int64_t>> columns);
  // Columns over the rationals; entries are "a" or "a/b".
  static Matroid linear_rational(GroundSet ground,
                                 std::vector<std::vector<std::string>> columns);

  const GroundSet& ground() const;
  int size() const { return ground().size(); }

  int rank(Mask x) const;
  int rank() const { return rank(ground().full()); }
  // r(X) + r(E-X) - r(E).
  int lambda(Mask x) const;

  Matroid dual() const;
  // M/X and M\X on the ground set E-X.
  Matroid contract(Mask x) const;
  Matroid remove(Mask x) const;
  // M|X and M.X (= M/(E-X)) on the ground set X.
  Matroid restrict_to(Mask x) const { return remove(ground().full() & ~x); }
  Matroid contract_to(Mask x) const { return contract(ground().full() & ~x); }

  std::string describe() const;

  struct Backend;

 private:
  explicit Matroid(std::shared_ptr<const Backend> b) : impl_(std::move(b)) {}
  std::shared_ptr<const Backend> impl_;
};

// r(X) + r(Y) - r(X u Y) for disjoint X, Y.
int local_conn(const Matroid& m, Mask x, Mask y);

// Greedy base of M restricted to `within`, scanning elements in order.
Mask greedy_base(const Matroid& m, Mask within);

// Connectivity via |B - B'| - |B' - B| for a base B of M|X and a base B' of
// M.X, both greedy; throws InvariantError if it disagrees with lambda.
int base_pair_connectivity(const Matroid& m, Mask x);

}  // namespace fd

#endif  // FLOWERDECK_MATROID_H_
