// Copyright 2026 The Authors.
// SPDX-License-Identifier: Apache-2.0

#include "flowerdeck/connsys.h"

#include <algorithm>
#include <atomic>
#include <random>

namespace fd {

struct ConnectivitySystem::Impl {
  GroundSet ground;
  SystemKind kind = SystemKind::kTable;
  std::vector<Order> table;  // empty when evaluated on demand
  std::vector<Mask> incidence;  // graph kind: edges at each vertex
  std::optional<Matroid> matroid;

  Order evaluate(Mask x) const {
    if (!table.empty()) return table[x];
    if (kind == SystemKind::kGraphEdges) {
      const Mask rest = ground.full() & ~x;
      std::uint32_t count = 0;
      for (Mask inc : incidence) count += ((inc & x) != 0 && (inc & rest) != 0) ? 1 : 0;
      return Order(count);
    }
    return Order(static_cast<std::uint32_t>(matroid->lambda(x)));
  }
};

namespace {

constexpr int kMaterializeLimit = 20;

void reject_empty(const GroundSet& g) {
  if (g.size() == 0) throw InputError("the ground set must be nonempty");
}

void materialize(ConnectivitySystem::Impl& impl) {
  if (impl.ground.size() > kMaterializeLimit) return;
  std::vector<Order> t(std::size_t{1} << impl.ground.size());
  for (std::size_t x = 0; x < t.size(); ++x) t[x] = impl.evaluate(static_cast<Mask>(x));
  impl.table = std::move(t);
}

}  // namespace

ConnectivitySystem ConnectivitySystem::from_table(GroundSet ground, std::vector<Order> table) {
  reject_empty(ground);
  if (table.size() != (std::size_t{1} << ground.size())) {
    throw InputError("order table must have 2^n entries");
  }
  auto impl = std::make_shared<Impl>();
  impl->ground = std::move(ground);
  impl->kind = SystemKind::kTable;
  impl->table = std::move(table);
  return ConnectivitySystem(std::move(impl));
}

ConnectivitySystem ConnectivitySystem::from_graph(GroundSet ground, int num_vertices,
                                                  std::vector<std::pair<int, int>> ends) {
  reject_empty(ground);
  if (ends.size() != static_cast<std::size_t>(ground.size())) {
    throw InputError("graph needs exactly one edge per ground element");
  }
  auto impl = std::make_shared<Impl>();
  impl->ground = std::move(ground);
  impl->kind = SystemKind::kGraphEdges;
  impl->incidence.assign(num_vertices, 0);
  for (std::size_t e = 0; e < ends.size(); ++e) {
    auto [u, v] = ends[e];
    if (u < 0 || v < 0 || u >= num_vertices || v >= num_vertices) {
      throw InputError("edge endpoint out of range");
    }
    impl->incidence[u] |= bit(static_cast<int>(e));
    impl->incidence[v] |= bit(static_cast<int>(e));
  }
  materialize(*impl);
  return ConnectivitySystem(std::move(impl));
}

ConnectivitySystem ConnectivitySystem::from_matroid(Matroid m) {
  reject_empty(m.ground());
  auto impl = std::make_shared<Impl>();
  impl->ground = m.ground();
  impl->kind = SystemKind::kMatroid;
  impl->matroid = std::move(m);
  materialize(*impl);
  return ConnectivitySystem(std::move(impl));
}

const GroundSet& ConnectivitySystem::ground() const { return impl_->ground; }
SystemKind ConnectivitySystem::kind() const { return impl_->kind; }
const Matroid* ConnectivitySystem::matroid() const {
  return impl_->matroid ? &*impl_->matroid : nullptr;
}

Order ConnectivitySystem::lambda(Mask x) const {
  impl_->ground.check(x);
  return impl_->evaluate(x);
}

std::vector<Order> ConnectivitySystem::table() const {
  if (!impl_->table.empty()) return impl_->table;
  std::vector<Order> t(std::size_t{1} << size());
  for (std::size_t x = 0; x < t.size(); ++x) t[x] = impl_->evaluate(static_cast<Mask>(x));
  return t;
}

namespace {

bool submodular_at(const std::vector<Order>& t, Mask a, Mask b) {
  return t[a] + t[b] >= t[a | b] + t[a & b];
}

// First A (ascending) with lambda(A) != lambda(E-A), or nullopt.
std::optional<Mask> first_asymmetric(const std::vector<Order>& t, Mask full) {
  for (std::size_t a = 0; a < t.size(); ++a) {
    if (t[a] != t[full & ~static_cast<Mask>(a)]) return static_cast<Mask>(a);
  }
  return std::nullopt;
}

// Lexicographically first failing ordered pair. If (A,B) fails so does
// (B,A), so only A <= B needs scanning.
std::optional<std::pair<Mask, Mask>> first_nonsubmodular_serial(const std::vector<Order>& t) {
  const std::uint64_t n = t.size();
  for (std::uint64_t a = 0; a < n; ++a) {
    for (std::uint64_t b = a; b < n; ++b) {
      if (!submodular_at(t, static_cast<Mask>(a), static_cast<Mask>(b))) {
        return std::pair<Mask, Mask>(static_cast<Mask>(a), static_cast<Mask>(b));
      }
    }
  }
  return std::nullopt;
}

std::optional<std::pair<Mask, Mask>> first_nonsubmodular_parallel(const std::vector<Order>& t) {
  const std::int64_t n = static_cast<std::int64_t>(t.size());
  constexpr std::uint64_t kNone = ~std::uint64_t{0};
  std::atomic<std::int64_t> best_a{n};
  std::uint64_t best = kNone;
#pragma omp parallel
  {
    std::uint64_t local = kNone;
#pragma omp for schedule(dynamic, 16)
    for (std::int64_t a = 0; a < n; ++a) {
      if (a > best_a.load(std::memory_order_relaxed)) continue;
      for (std::int64_t b = a; b < n; ++b) {
        if (!submodular_at(t, static_cast<Mask>(a), static_cast<Mask>(b))) {
          local = std::min<std::uint64_t>(local, (std::uint64_t(a) << 32) | std::uint64_t(b));
          std::int64_t cur = best_a.load();
          while (a < cur && !best_a.compare_exchange_weak(cur, a)) {
          }
          break;
        }
      }
    }
#pragma omp critical
    best = std::min(best, local);
  }
  if (best == kNone) return std::nullopt;
  return std::pair<Mask, Mask>(static_cast<Mask>(best >> 32), static_cast<Mask>(best));
}

}  // namespace

VerificationReport verify(const ConnectivitySystem& sys, const VerifyOptions& opts) {
  VerificationReport rep;
  const std::vector<Order> t = sys.table();
  const Mask full = sys.full();
  rep.symmetry_checked = t.size();
  if (auto a = first_asymmetric(t, full)) {
    rep.witnesses.push_back({"symmetry", *a, full & ~*a});
  }

  std::optional<std::pair<Mask, Mask>> bad;
  if (sys.size() <= opts.exhaustive_limit) {
    rep.pairs_checked = std::uint64_t(t.size()) * (t.size() + 1) / 2;
    bad = opts.exec == Exec::kSerial ? first_nonsubmodular_serial(t)
                                     : first_nonsubmodular_parallel(t);
  } else {
    rep.exhaustive = false;
    rep.pairs_checked = opts.sample_pairs;
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<Mask> pick(0, full);
    for (std::uint64_t i = 0; i < opts.sample_pairs; ++i) {
      Mask a = pick(rng), b = pick(rng);
      if (a > b) std::swap(a, b);
      if (!submodular_at(t, a, b) && (!bad || std::pair(a, b) < *bad)) bad = std::pair(a, b);
    }
  }
  if (bad) rep.witnesses.push_back({"submodularity", bad->first, bad->second});
  rep.passed = rep.witnesses.empty();
  return rep;
}

Mask small_witness(const ConnectivitySystem& sys, Mask x, int k) {
  sys.ground().check(x);
  if (k < 0) throw PreconditionError("k must be a natural number");
  if (sys.lambda(x) < Order(k)) {
    throw PreconditionError("small_witness needs lambda(X) >= k");
  }
  const Order target(k);
  Mask y = x;
  for (;;) {
    std::vector<int> elems = elements_of(y);
    if (static_cast<int>(elems.size()) > k) {
      // Telescoping over prefixes Y_0 <= Y_1 <= ...: either the last element
      // can go, or some prefix step fails to raise the order and the
      // element added there can go.
      const int m = static_cast<int>(elems.size());
      int drop = -1;
      if (sys.lambda(y & ~bit(elems[m - 1])) >= target) {
        drop = m - 1;
      } else {
        Mask prefix = 0;
        for (int i = 0; i + 1 < m; ++i) {
          Mask next = prefix | bit(elems[i]);
          if (sys.lambda(prefix) >= sys.lambda(next)) {
            drop = i;
            break;
          }
          prefix = next;
        }
      }
      if (drop < 0) throw InvariantError("telescoping found no removable element");
      y &= ~bit(elems[drop]);
      if (sys.lambda(y) < target) throw InvariantError("telescoping step lost the bound");
      continue;
    }
    // Small enough; shrink further to a minimal witness.
    bool shrunk = false;
    for (int e : elems) {
      if (sys.lambda(y & ~bit(e)) >= target) {
        y &= ~bit(e);
        shrunk = true;
        break;
      }
    }
    if (!shrunk) return y;
  }
}

Mask extend_low_order(const ConnectivitySystem& sys, Mask y, Mask x) {
  sys.ground().check(x);
  if (!subset_of(y, x)) throw InputError("extend_low_order needs Y inside X");
  const Order bound = sys.lambda(y);
  Mask z = y;
  for (bool grew = true; grew;) {
    grew = false;
    for (int e : elements_of(x & ~z)) {
      if (sys.lambda(z | bit(e)) <= bound) {
        z |= bit(e);
        grew = true;
      }
    }
  }
  return z;
}

}  // namespace fd
