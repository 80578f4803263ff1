// Copyright 2026 The Authors.
// SPDX-License-Identifier: Apache-2.0

// Test corpus and oracles. The oracles recompute things from definitions
// with no shared code beyond the Mask helpers, so a bug in the library does
// not hide itself.

#ifndef FLOWERDECK_TESTS_SUPPORT_H_
#define FLOWERDECK_TESTS_SUPPORT_H_

#include <string>
#include <vector>

#include "flowerdeck/connsys.h"
#include "flowerdeck/flowers.h"
#include "flowerdeck/profiles.h"

namespace fdt {

using fd::ConnectivitySystem;
using fd::Mask;
using fd::Order;

std::string data_path(const std::string& name);
ConnectivitySystem load(const std::string& name);

// Every proper nonempty set has order 2; the empty set and E have order 0.
ConnectivitySystem constant_two(int n);
// Edge connectivity of the cycle on n vertices.
ConnectivitySystem cycle_edges(int n);
// Vertices u, v joined by `paths` paths of length two and `direct` parallel edges.
ConnectivitySystem theta_edges(int paths, int direct);

struct Instance {
  std::string name;
  ConnectivitySystem sys;
};

// Everything with at most eight elements, tables, graphs and matroids.
std::vector<Instance> small_corpus();
// The matroid-backed part of small_corpus plus the larger data files (n <= 10).
std::vector<Instance> matroid_corpus();

// Largest finite order in the system.
int max_lambda(const ConnectivitySystem& sys);

namespace oracle {

// Rank of a matroid given by GF(2) columns (bit i of column j is row i).
int gf2_rank(const std::vector<unsigned>& cols, Mask x);
// Rank of a graphic matroid by union-find.
int graphic_rank(int num_vertices, const std::vector<std::pair<int, int>>& ends, Mask x);
// Number of vertices meeting both X and its complement.
int edge_boundary(int num_vertices, const std::vector<std::pair<int, int>>& ends, Mask x);

// All regular k-profiles by filtering every orientation of S_k.
std::vector<std::vector<Mask>> naive_profiles(const ConnectivitySystem& sys, int k);

// Kind of a flower with at least four petals from the definition; "other"
// when neither type fits. `ring` lists the petals in cyclic order.
std::string flower_kind(const ConnectivitySystem& sys, const std::vector<Mask>& ring, int k);

// Classes of elements of q by membership in the sets S with
// lambda(S u r) = k - 1, sorted by lowest element.
std::vector<Mask> mu_atoms(const ConnectivitySystem& sys, Mask q, Mask r, int k);

}  // namespace oracle
}  // namespace fdt

#endif  // FLOWERDECK_TESTS_SUPPORT_H_
