// Copyright 2026 The Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef FLOWERDECK_CONNSYS_H_
#define FLOWERDECK_CONNSYS_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "flowerdeck/core.h"
#include "flowerdeck/matroid.h"
#include "flowerdeck/parallel.h"

namespace fd {

enum class SystemKind { kTable, kGraphEdges, kMatroid };

// A ground set with a symmetric submodular order function. Cheap to copy;
// copies share the immutable oracle.
class ConnectivitySystem {
 public:
  // Full table indexed by mask; table.size() must be 2^n.
  static ConnectivitySystem from_table(GroundSet ground, std::vector<Order> table);
  // Ground elements are the edges; ends[i] are the endpoints of edge i.
  static ConnectivitySystem from_graph(GroundSet ground, int num_vertices,
                                       std::vector<std::pair<int, int>> ends);
  static ConnectivitySystem from_matroid(Matroid m);

  const GroundSet& ground() const;
  int size() const { return ground().size(); }
  Mask full() const { return ground().full(); }
  SystemKind kind() const;
  // Set only for matroid-backed systems.
  const Matroid* matroid() const;

  Order lambda(Mask x) const;

  // Every lambda value, materialised. Only for n <= 24.
  std::vector<Order> table() const;

  struct Impl;

 private:
  explicit ConnectivitySystem(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

struct Witness {
  std::string property;  // "symmetry" or "submodularity"
  Mask a = 0;
  Mask b = 0;
};

struct VerificationReport {
  bool passed = true;
  bool exhaustive = true;
  std::uint64_t symmetry_checked = 0;
  // Unordered pairs {A,B}; (A,B) and (B,A) are the same inequality.
  std::uint64_t pairs_checked = 0;
  std::vector<Witness> witnesses;
};

struct VerifyOptions {
  // Systems up to this size get the full pair scan; larger ones are sampled.
  int exhaustive_limit = 14;
  std::uint64_t sample_pairs = 1u << 22;
  std::uint64_t seed = 0;
  Exec exec = Exec::kParallel;
};

// Symmetry over all A, submodularity over all pairs (or a sample). Each
// property reports its first failure in lexicographic mask order.
VerificationReport verify(const ConnectivitySystem& sys, const VerifyOptions& opts = {});

// Y subset of X with lambda(Y) >= k and |Y| <= k.
Mask small_witness(const ConnectivitySystem& sys, Mask x, int k);

// Greedy maximal Z, Y <= Z <= X, with lambda(Z) <= lambda(Y).
Mask extend_low_order(const ConnectivitySystem& sys, Mask y, Mask x);

}  // namespace fd

#endif  // FLOWERDECK_CONNSYS_H_
