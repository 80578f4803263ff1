// Copyright 2026 The Authors.
// SPDX-License-Identifier: Apache-2.0

#include "flowerdeck/matroid_flowers.h"

#include <random>

namespace fd {

namespace {

void require_flower_of(const Matroid& m, const Pseudoflower& f) {
  if (f.system().size() != m.size()) throw PreconditionError("flower lives on another ground set");
  if (f.num_petals() < 5) throw PreconditionError("the flower calculus needs five petals");
  for (int start = 0; start < f.num_petals(); ++start) {
    for (int len = 1; len < f.num_petals(); ++len) {
      if (m.lambda(f.interval_union(start, len)) != f.k() - 1) {
        throw PreconditionError("partition is not a k-flower of the matroid");
      }
    }
  }
}

bool adjacent_in_ring(int i, int j, int p) {
  return (j - i + p) % p == 1 || (i - j + p) % p == 1;
}

// Every pair of ring positions against the expected parameters.
void check_pairs(const Matroid& m, const std::vector<Mask>& ring, FlowerParameters want) {
  const int p = static_cast<int>(ring.size());
  for (int i = 0; i < p; ++i) {
    for (int j = i + 1; j < p; ++j) {
      const int expect = adjacent_in_ring(i, j, p) ? want.c : want.d;
      if (local_conn(m, ring[i], ring[j]) != expect) {
        throw InvariantError("petal pair has unexpected local connectivity");
      }
    }
  }
}

PetalMinor petal_minor(const Matroid& m, const Pseudoflower& f, int petal_index, bool contract) {
  const FlowerParameters par = flower_parameters(m, f);
  if (petal_index < 0 || petal_index >= f.num_petals()) throw InputError("no such petal");
  const int p = f.num_petals();
  const int pos = f.order().position(petal_index);
  const Mask gone = f.petal(petal_index);
  const Mask keep = m.ground().full() & ~gone;
  Matroid minor = contract ? m.contract(gone) : m.remove(gone);
  std::vector<Mask> ring{extract(f.petal_at(pos - 1) | f.petal_at(pos + 1), keep)};
  for (int t = 2; t <= p - 2; ++t) ring.push_back(extract(f.petal_at(pos + t), keep));

  const int k = contract ? f.k() - par.d : 2 * par.c - par.d + 1;
  const FlowerParameters want = contract ? FlowerParameters{par.c - par.d, 0} : par;
  ConnectivitySystem sys = ConnectivitySystem::from_matroid(minor);
  // The merged partition may have only three petals, so check the interval
  // orders directly rather than through classify.
  for (std::size_t start = 0; start < ring.size(); ++start) {
    Mask u = 0;
    for (std::size_t len = 1; len < ring.size(); ++len) {
      u |= ring[(start + len - 1) % ring.size()];
      if (minor.lambda(u) != k - 1) {
        throw InvariantError("merged partition is not a flower of the predicted order");
      }
    }
  }
  check_pairs(minor, ring, want);
  Pseudoflower out = make_pseudoflower(sys, ring, k);
  return PetalMinor{std::move(minor), std::move(sys), std::move(out), want};
}

// Rank-identical on every subset of the ground set (sampled beyond 2^16).
bool same_matroid(const Matroid& a, const Matroid& b, std::mt19937_64& rng) {
  if (a.size() != b.size()) return false;
  const Mask full = a.ground().full();
  if (a.size() <= 16) {
    for (Mask s = 0;; ++s) {
      if (a.rank(s) != b.rank(s)) return false;
      if (s == full) break;
    }
    return true;
  }
  std::uniform_int_distribution<Mask> pick(0, full);
  for (int i = 0; i < (1 << 16); ++i) {
    const Mask s = pick(rng);
    if (a.rank(s) != b.rank(s)) return false;
  }
  return true;
}

}  // namespace

FlowerParameters flower_parameters(const Matroid& m, const Pseudoflower& f) {
  require_flower_of(m, f);
  const int p = f.num_petals();
  const FlowerParameters par{local_conn(m, f.petal_at(0), f.petal_at(1)),
                             local_conn(m, f.petal_at(0), f.petal_at(2))};
  std::vector<Mask> ring;
  for (int pos = 0; pos < p; ++pos) ring.push_back(f.petal_at(pos));
  check_pairs(m, ring, par);
  // An interval against a proper part of the rest; the rest runs from the
  // right neighbour (offset 0) round to the left neighbour (offset last).
  // Taking all of the rest would force lambda = 2c-d, which fails in duals.
  for (int start = 0; start < p; ++start) {
    for (int len = 1; len < p; ++len) {
      const Mask s = f.interval_union(start, len);
      const int rest = p - len;
      for (std::uint32_t sub = 1; sub + 1 < (1u << rest); ++sub) {
        Mask other = 0;
        for (int t = 0; t < rest; ++t) {
          if ((sub >> t) & 1) other |= f.petal_at(start + len + t);
        }
        const int touches = static_cast<int>(sub & 1) + static_cast<int>((sub >> (rest - 1)) & 1);
        const int expect = touches == 0 ? par.d : touches == 2 ? 2 * par.c - par.d : par.c;
        if (local_conn(m, s, other) != expect) {
          throw InvariantError("interval local connectivity breaks the three-case table");
        }
      }
    }
  }
  return par;
}

DualFlowerReport dual_flower_check(const Matroid& m, const Pseudoflower& f) {
  const FlowerParameters primal = flower_parameters(m, f);
  const Matroid dual = m.dual();
  const FlowerParameters star = flower_parameters(dual, f);
  if (primal.c + star.c != f.k() - 1 || star.c - star.d != primal.c - primal.d) {
    throw InvariantError("flower parameters do not dualise as predicted");
  }
  return {primal, star};
}

PetalMinor delete_petal(const Matroid& m, const Pseudoflower& f, int petal_index) {
  return petal_minor(m, f, petal_index, false);
}

PetalMinor contract_petal(const Matroid& m, const Pseudoflower& f, int petal_index) {
  return petal_minor(m, f, petal_index, true);
}

ClassReduction reduce_class(const Matroid& m, Mask x, std::uint64_t seed) {
  m.ground().check(x);
  const Mask full = m.ground().full();
  const Mask base = greedy_base(m, x);
  const Matroid onto = m.contract_to(x);
  Mask c = 0;
  for (int e : elements_of(base)) {
    const Mask t = c | bit(e);
    if (onto.rank(extract(t, x)) == popcount(t)) c = t;
  }
  if (onto.rank(extract(c, x)) != onto.rank()) throw InvariantError("no base of M.X inside B");
  ClassReduction out{c, x & ~base, x & ~base};
  out.f = x & ~(out.c | out.d);
  if (popcount(out.f) != m.lambda(x)) throw InvariantError("reduced class has the wrong size");

  const Matroid after_c = m.contract(out.c);
  const Matroid n = after_c.remove(extract(out.d, full & ~out.c));
  const Mask keep = full & ~(out.c | out.d);
  auto to_n = [&](Mask s) { return extract(s, keep); };
  std::mt19937_64 rng(seed);
  if (!same_matroid(m.contract(x), n.contract(to_n(out.f)), rng) ||
      !same_matroid(m.remove(x), n.remove(to_n(out.f)), rng)) {
    throw InvariantError("reduced class changes the minors at X");
  }

  const std::vector<int> outside = elements_of(full & ~x);
  const int r = static_cast<int>(outside.size());
  auto check = [&](Mask y, Mask z) {
    if (m.lambda(y) != n.lambda(to_n(y)) || local_conn(m, y, z) != local_conn(n, to_n(y), to_n(z)) ||
        local_conn(m, z, x | y) != local_conn(n, to_n(z), to_n(out.f | y))) {
      throw InvariantError("reduced class changes connectivity away from X");
    }
  };
  auto split = [&](std::uint64_t code) {
    Mask y = 0, z = 0;
    for (int t = 0; t < r; ++t, code /= 3) {
      if (code % 3 == 1) y |= bit(outside[t]);
      if (code % 3 == 2) z |= bit(outside[t]);
    }
    check(y, z);
  };
  std::uint64_t pairs = 1;
  for (int t = 0; t < r; ++t) pairs *= 3;
  if (r <= 12) {
    for (std::uint64_t code = 0; code < pairs; ++code) split(code);
  } else {
    std::uniform_int_distribution<std::uint64_t> pick(0, pairs - 1);
    for (int i = 0; i < (1 << 16); ++i) split(pick(rng));
  }
  return out;
}

}  // namespace fd
