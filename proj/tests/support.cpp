// Copyright 2026 The Authors.
// SPDX-License-Identifier: Apache-2.0

#include "support.h"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

#include "flowerdeck/io.h"
#include "flowerdeck/matroid.h"

#ifndef FLOWERDECK_DATA_DIR
#error "FLOWERDECK_DATA_DIR must point at data/"
#endif

namespace fdt {

using fd::GroundSet;

std::string data_path(const std::string& name) {
  return std::string(FLOWERDECK_DATA_DIR) + "/" + name;
}

ConnectivitySystem load(const std::string& name) { return fd::io::load_connsys(data_path(name)); }

ConnectivitySystem constant_two(int n) {
  std::vector<Order> t(std::size_t{1} << n, Order(2));
  t.front() = Order(0);
  t.back() = Order(0);
  return ConnectivitySystem::from_table(GroundSet::numbered(n), std::move(t));
}

ConnectivitySystem cycle_edges(int n) {
  std::vector<std::pair<int, int>> ends;
  for (int i = 0; i < n; ++i) ends.emplace_back(i, (i + 1) % n);
  return ConnectivitySystem::from_graph(GroundSet::numbered(n), n, std::move(ends));
}

ConnectivitySystem theta_edges(int paths, int direct) {
  // u = 0, v = 1, middle vertices after that.
  std::vector<std::pair<int, int>> ends;
  for (int i = 0; i < paths; ++i) {
    ends.emplace_back(0, 2 + i);
    ends.emplace_back(2 + i, 1);
  }
  for (int i = 0; i < direct; ++i) ends.emplace_back(0, 1);
  const int n = static_cast<int>(ends.size());
  return ConnectivitySystem::from_graph(GroundSet::numbered(n), 2 + paths, std::move(ends));
}

std::vector<Instance> small_corpus() {
  std::vector<Instance> out = {
      {"example_a", load("example_a.json")},
      {"constant_two_4", constant_two(4)},
      {"constant_two_5", constant_two(5)},
      {"constant_two_8", constant_two(8)},
      {"c6", load("c6.json")},
      {"cycle_4", cycle_edges(4)},
      {"cycle_5", cycle_edges(5)},
      {"cycle_8", cycle_edges(8)},
      {"theta_2_1", theta_edges(2, 1)},
      {"theta_3_2", theta_edges(3, 2)},
  };
  for (auto& m : matroid_corpus()) {
    if (m.sys.size() <= 8) out.push_back(std::move(m));
  }
  return out;
}

std::vector<Instance> matroid_corpus() {
  std::vector<Instance> out;
  for (const char* f : {"u15", "u24", "mc4", "mc6", "mk4", "u36", "fano", "mw4", "mw5"}) {
    out.push_back({f, load(std::string(f) + ".json")});
  }
  out.push_back({"u25", ConnectivitySystem::from_matroid(
                            fd::Matroid::uniform(GroundSet::numbered(5), 2))});
  return out;
}

int max_lambda(const ConnectivitySystem& sys) {
  int best = 0;
  for (Order o : sys.table()) {
    if (!o.is_inf()) best = std::max(best, static_cast<int>(o.value()));
  }
  return best;
}

namespace oracle {

int gf2_rank(const std::vector<unsigned>& cols, Mask x) {
  std::vector<unsigned> basis;
  for (int i = 0; i < static_cast<int>(cols.size()); ++i) {
    if (!(x >> i & 1)) continue;
    unsigned v = cols[i];
    for (unsigned b : basis) v = std::min(v, v ^ b);
    if (v != 0) {
      basis.push_back(v);
      std::sort(basis.rbegin(), basis.rend());
    }
  }
  return static_cast<int>(basis.size());
}

int graphic_rank(int num_vertices, const std::vector<std::pair<int, int>>& ends, Mask x) {
  std::vector<int> parent(num_vertices);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  int rank = 0;
  for (int i = 0; i < static_cast<int>(ends.size()); ++i) {
    if (!(x >> i & 1)) continue;
    const int a = find(ends[i].first), b = find(ends[i].second);
    if (a != b) {
      parent[a] = b;
      ++rank;
    }
  }
  return rank;
}

int edge_boundary(int num_vertices, const std::vector<std::pair<int, int>>& ends, Mask x) {
  std::vector<int> in(num_vertices, 0), out(num_vertices, 0);
  for (int i = 0; i < static_cast<int>(ends.size()); ++i) {
    auto& side = (x >> i & 1) ? in : out;
    side[ends[i].first] = side[ends[i].second] = 1;
  }
  int count = 0;
  for (int v = 0; v < num_vertices; ++v) count += in[v] && out[v];
  return count;
}

std::vector<std::vector<Mask>> naive_profiles(const ConnectivitySystem& sys, int k) {
  const Mask full = sys.full();
  const auto lam = sys.table();
  auto low = [&](Mask a) { return lam[a] < Order(static_cast<std::uint32_t>(k)); };
  // One representative per separation: the side without element 0.
  std::vector<Mask> reps;
  for (Mask a = 0; a <= full; ++a) {
    if (!(a & 1) && low(a)) reps.push_back(a);
  }
  std::vector<std::vector<Mask>> out;
  const std::uint64_t count = std::uint64_t{1} << reps.size();
  for (std::uint64_t choice = 0; choice < count; ++choice) {
    std::vector<char> in(std::size_t{full} + 1, 0);
    std::vector<Mask> o;
    for (std::size_t i = 0; i < reps.size(); ++i) {
      const Mask s = (choice >> i & 1) ? full & ~reps[i] : reps[i];
      in[s] = 1;
      o.push_back(s);
    }
    if (in[full]) continue;
    bool ok = true;
    for (Mask a : o) {
      // Down-closed: every low-order subset of a chosen side is chosen.
      for (Mask b = a;; b = (b - 1) & a) {
        if (low(b) && !in[b]) ok = false;
        if (b == 0 || !ok) break;
      }
      if (!ok) break;
    }
    for (std::size_t i = 0; ok && i < o.size(); ++i) {
      for (std::size_t j = 0; ok && j < o.size(); ++j) {
        const Mask u = o[i] | o[j];
        if (low(u) && in[full & ~u]) ok = false;
      }
    }
    if (!ok) continue;
    std::sort(o.begin(), o.end());
    out.push_back(std::move(o));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string flower_kind(const ConnectivitySystem& sys, const std::vector<Mask>& ring, int k) {
  const int p = static_cast<int>(ring.size());
  const Order target(static_cast<std::uint32_t>(k - 1));
  bool anemone = true, daisy = true;
  for (std::uint32_t s = 1; s + 1 < (1u << p); ++s) {
    Mask u = 0;
    for (int i = 0; i < p; ++i) {
      if (s >> i & 1) u |= ring[i];
    }
    // A set of ring positions is an interval when it has one run, counting
    // the wrap from the last position to the first.
    int starts = 0;
    for (int i = 0; i < p; ++i) {
      if ((s >> i & 1) && !(s >> ((i + p - 1) % p) & 1)) ++starts;
    }
    const bool interval = starts == 1;
    const bool hit = sys.lambda(u) == target;
    if (!hit) anemone = false;
    if (hit != interval) daisy = false;
  }
  if (anemone) return "anemone";
  if (daisy) return "daisy";
  return "other";
}

std::vector<Mask> mu_atoms(const ConnectivitySystem& sys, Mask q, Mask r, int k) {
  const Order target(static_cast<std::uint32_t>(k - 1));
  std::vector<Mask> hits;
  for (Mask s = q;; s = (s - 1) & q) {
    if (sys.lambda(s | r) == target) hits.push_back(s);
    if (s == 0) break;
  }
  std::map<std::vector<bool>, Mask> by_signature;
  for (Mask rest = q; rest != 0; rest &= rest - 1) {
    const int e = std::countr_zero(rest);
    std::vector<bool> sig;
    for (Mask s : hits) sig.push_back(s >> e & 1);
    by_signature[sig] |= Mask{1} << e;
  }
  std::vector<Mask> out;
  for (const auto& [sig, m] : by_signature) out.push_back(m);
  std::sort(out.begin(), out.end(),
            [](Mask a, Mask b) { return std::countr_zero(a) < std::countr_zero(b); });
  return out;
}

}  // namespace oracle
}  // namespace fdt
