// Copyright 2026 The Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef FLOWERDECK_FLOWERS_H_
#define FLOWERDECK_FLOWERS_H_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "flowerdeck/parallel.h"
#include "flowerdeck/profiles.h"
#include "flowerdeck/pseudoflower.h"

namespace fd {

enum class FlowerKind { kAnemone, kDaisy, kFlowerTooSmall, kNotFlower, kPseudoOnly };

std::string to_string(FlowerKind kind);

struct ClassifyOptions {
  Exec exec = Exec::kParallel;
  // Beyond this many petals the union scan is sampled.
  int exhaustive_petals = 20;
  std::uint64_t sample_unions = 1u << 20;
  std::uint64_t seed = 0;
};

FlowerKind classify(const Pseudoflower& f, const ClassifyOptions& opts = {});

// Fast validity test on raw data, without building a Pseudoflower.
bool is_pseudoflower(const ConnectivitySystem& sys, const std::vector<Mask>& ring_petals, int k);

// Every union of classes has order at most k-1.
bool is_strong_pseudoanemone(const ConnectivitySystem& sys, const std::vector<Mask>& petals,
                             int k, Exec exec = Exec::kParallel);

// F is a concatenation of G: F's petals are unions of G's and preimages of
// F-intervals are G-intervals.
bool is_concatenation(const Pseudoflower& f, const Pseudoflower& g);

// Every union of F's petals is a union of G's petals.
bool leq_a(const Pseudoflower& f, const Pseudoflower& g);

// S -> lambda(S u R) on subsets of one petal Q of an anemone.
class MuFunction {
 public:
  // With `audit`, every admissible reference R is checked to agree.
  MuFunction(const Pseudoflower& anemone, int q_index, bool audit = false);

  Mask petal() const { return q_; }
  Mask reference() const { return r_; }
  int k() const { return k_; }
  Order operator()(Mask s) const;

 private:
  ConnectivitySystem sys_;
  Mask q_;
  Mask r_;
  int k_;
  std::vector<Order> memo_;  // indexed by the subset of Q packed to low bits
};

Order mu(const Pseudoflower& anemone, int q_index, Mask s, bool audit = false);

// Finest partition of petal q whose unions are exactly the mu = k-1 sets.
std::vector<Mask> petal_refinement(const Pseudoflower& anemone, int q_index);

// Common refinement of all per-petal refinements, each petal replaced in
// place by its classes ordered by smallest element.
Pseudoflower maximal_strong_anemone(const Pseudoflower& anemone);

// Number of members of fam pairwise distinguished by interval unions of F.
int distinguished_count(const Pseudoflower& f, const ProfileFamily& fam);

// Splits petal i along a separation A that properly crosses it.
Pseudoflower split_petal(const Pseudoflower& f, int petal_index, Mask a,
                         const ProfileFamily& fam);

bool preceq(const Pseudoflower& f, const Pseudoflower& g, const ProfileFamily& fam);
bool preceq_a(const Pseudoflower& f, const Pseudoflower& g, const ProfileFamily& fam);

// Calls `visit` with the petals in ring order of every k-pseudoflower of
// sys with at least `min_petals` petals, one representative per rotation
// (and per mirror pair when `skip_mirrors`). Return false to stop.
void for_each_pseudoflower(const ConnectivitySystem& sys, int k, int min_petals,
                           bool skip_mirrors,
                           const std::function<bool(const std::vector<Mask>&)>& visit);

// Every pseudoflower G with F a concatenation of G, as petals in ring order:
// each petal of F is cut into an ordered sequence of blocks.
void for_each_extension(const Pseudoflower& f,
                        const std::function<bool(const std::vector<Mask>&)>& visit);

// Petals of every partition of `set` into nonempty blocks.
void for_each_partition(Mask set, const std::function<bool(const std::vector<Mask>&)>& visit);

}  // namespace fd

#endif  // FLOWERDECK_FLOWERS_H_
