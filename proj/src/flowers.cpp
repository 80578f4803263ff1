// Copyright 2026 The Authors.
// SPDX-License-Identifier: Apache-2.0

#include "flowerdeck/flowers.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "flowerdeck/seps.h"

namespace fd {

std::string to_string(FlowerKind kind) {
  switch (kind) {
    case FlowerKind::kAnemone: return "ANEMONE";
    case FlowerKind::kDaisy: return "DAISY";
    case FlowerKind::kFlowerTooSmall: return "FLOWER_TOO_SMALL";
    case FlowerKind::kNotFlower: return "NOT_FLOWER";
    case FlowerKind::kPseudoOnly: return "PSEUDO_ONLY";
  }
  return "?";
}

namespace {

Order below(int k) { return Order(static_cast<std::uint32_t>(k - 1)); }

std::uint64_t all_indices(int p) {
  return p >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << p) - 1;
}

}  // namespace

FlowerKind classify(const Pseudoflower& f, const ClassifyOptions& opts) {
  const int p = f.num_petals();
  if (p < 4) return FlowerKind::kFlowerTooSmall;
  const auto& sys = f.system();
  const Order target = below(f.k());
  for (int start = 0; start < p; ++start) {
    for (int len = 1; len < p; ++len) {
      if (sys.lambda(f.interval_union(start, len)) < target) return FlowerKind::kPseudoOnly;
    }
  }

  bool all_eq = true, daisy = true;
  auto visit = [&](std::uint64_t m, bool& eq_all, bool& is_daisy) {
    const bool eq = sys.lambda(f.petal_union(m)) == target;
    eq_all = eq_all && eq;
    is_daisy = is_daisy && (eq == f.is_interval_index_set(m));
  };
  if (p <= opts.exhaustive_petals) {
    const std::int64_t last = static_cast<std::int64_t>(all_indices(p));
    if (opts.exec == Exec::kSerial) {
      for (std::int64_t m = 1; m < last; ++m) visit(m, all_eq, daisy);
    } else {
#pragma omp parallel for schedule(static) reduction(&& : all_eq, daisy)
      for (std::int64_t m = 1; m < last; ++m) visit(m, all_eq, daisy);
    }
  } else {
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<std::uint64_t> pick(1, all_indices(p) - 1);
    for (std::uint64_t i = 0; i < opts.sample_unions; ++i) visit(pick(rng), all_eq, daisy);
  }
  if (all_eq) return FlowerKind::kAnemone;
  if (daisy) return FlowerKind::kDaisy;
  throw InvariantError("flower is neither an anemone nor a daisy");
}

bool is_pseudoflower(const ConnectivitySystem& sys, const std::vector<Mask>& ring, int k) {
  if (k < 1) return false;
  const Order bound = below(k);
  if (sys.lambda(0) > bound) return false;
  const int p = static_cast<int>(ring.size());
  for (int start = 0; start < p; ++start) {
    Mask u = 0;
    for (int len = 1; len < p; ++len) {
      u |= ring[(start + len - 1) % p];
      if (sys.lambda(u) > bound) return false;
    }
  }
  return true;
}

bool is_strong_pseudoanemone(const ConnectivitySystem& sys, const std::vector<Mask>& petals,
                             int k, Exec exec) {
  const Order bound = below(k);
  const int p = static_cast<int>(petals.size());
  const std::int64_t count = std::int64_t{1} << p;
  auto ok_at = [&](std::int64_t m) {
    Mask u = 0;
    for (int i = 0; i < p; ++i) {
      if ((m >> i) & 1) u |= petals[i];
    }
    return sys.lambda(u) <= bound;
  };
  bool ok = true;
  if (exec == Exec::kSerial) {
    for (std::int64_t m = 0; m < count && ok; ++m) ok = ok_at(m);
  } else {
#pragma omp parallel for schedule(static) reduction(&& : ok)
    for (std::int64_t m = 0; m < count; ++m) ok = ok && ok_at(m);
  }
  return ok;
}

bool is_concatenation(const Pseudoflower& f, const Pseudoflower& g) {
  if (!(f.system().ground() == g.system().ground()) || f.k() != g.k()) {
    throw PreconditionError("concatenation needs the same system and k");
  }
  std::map<int, int> image;
  for (int j = 0; j < g.num_petals(); ++j) {
    int i = f.petal_of(lowest(g.petal(j)));
    if (!subset_of(g.petal(j), f.petal(i))) return false;
    image[j] = i;
  }
  const int p = f.num_petals();
  // Monotone maps with an image of size other than two pull intervals back
  // to intervals. That is only sufficient (a mirrored map also qualifies),
  // so fall through to the direct check.
  if (p != 2 && is_monotone(image, g.order(), f.order())) return true;
  for (int start = 0; start < p; ++start) {
    for (int len = 1; len < p; ++len) {
      std::uint64_t target = 0;
      for (int t = 0; t < len; ++t) target |= std::uint64_t{1} << f.order().at(start + t);
      std::uint64_t pre = 0;
      for (auto [j, i] : image) {
        if ((target >> i) & 1) pre |= std::uint64_t{1} << j;
      }
      if (!g.is_interval_index_set(pre)) return false;
    }
  }
  return true;
}

bool leq_a(const Pseudoflower& f, const Pseudoflower& g) {
  for (Mask q : g.petals()) {
    if (!subset_of(q, f.petal(f.petal_of(lowest(q))))) return false;
  }
  return true;
}

MuFunction::MuFunction(const Pseudoflower& anemone, int q_index, bool audit)
    : sys_(anemone.system()), k_(anemone.k()) {
  if (q_index < 0 || q_index >= anemone.num_petals()) throw InputError("no such petal");
  if (classify(anemone) != FlowerKind::kAnemone) {
    throw PreconditionError("mu needs an anemone as host");
  }
  q_ = anemone.petal(q_index);
  r_ = anemone.petal(q_index == 0 ? 1 : 0);
  const int qn = popcount(q_);
  if (qn <= 20) {
    memo_.resize(std::size_t{1} << qn);
    for (std::size_t s = 0; s < memo_.size(); ++s) {
      memo_[s] = sys_.lambda(deposit(static_cast<Mask>(s), q_) | r_);
    }
  }
  if (!audit) return;
  const int p = anemone.num_petals();
  std::vector<int> others;
  for (int i = 0; i < p; ++i) {
    if (i != q_index) others.push_back(i);
  }
  const std::uint64_t m_all = all_indices(static_cast<int>(others.size()));
  for (std::uint64_t m = 1; m < m_all; ++m) {  // excludes R u Q = E
    Mask r = 0;
    for (std::size_t t = 0; t < others.size(); ++t) {
      if ((m >> t) & 1) r |= anemone.petal(others[t]);
    }
    for (Mask s = q_;; s = (s - 1) & q_) {
      if (sys_.lambda(s | r) != (*this)(s)) {
        throw InvariantError("mu depends on the reference petal");
      }
      if (s == 0) break;
    }
  }
}

Order MuFunction::operator()(Mask s) const {
  if (!subset_of(s, q_)) throw InputError("mu is only defined inside its petal");
  if (!memo_.empty()) return memo_[extract(s, q_)];
  return sys_.lambda(s | r_);
}

Order mu(const Pseudoflower& anemone, int q_index, Mask s, bool audit) {
  return MuFunction(anemone, q_index, audit)(s);
}

std::vector<Mask> petal_refinement(const Pseudoflower& anemone, int q_index) {
  MuFunction mu_q(anemone, q_index);
  const Mask q = mu_q.petal();
  const Order target = below(anemone.k());
  std::vector<Mask> family;  // the sets with mu = k-1
  for (Mask s = q;; s = (s - 1) & q) {
    if (mu_q(s) == target) family.push_back(s);
    if (s == 0) break;
  }
  std::vector<Mask> classes;
  for (int e : elements_of(q)) {
    Mask s_e = 0;
    for (Mask a : family) {
      if (((a >> e) & 1) == 0) s_e |= a;
    }
    Mask cls = q & ~s_e;
    if (std::find(classes.begin(), classes.end(), cls) == classes.end()) classes.push_back(cls);
  }
  Mask seen = 0;
  for (Mask c : classes) {
    if ((seen & c) != 0) throw InvariantError("petal refinement classes overlap");
    seen |= c;
  }
  if (seen != q) throw InvariantError("petal refinement does not cover the petal");
  std::sort(classes.begin(), classes.end(),
            [](Mask x, Mask y) { return lowest(x) < lowest(y); });
  // The mu = k-1 sets must be exactly the unions of classes.
  std::set<Mask> unions;
  const std::uint64_t cn = all_indices(static_cast<int>(classes.size()));
  for (std::uint64_t m = 0; m <= cn; ++m) {
    Mask u = 0;
    for (std::size_t t = 0; t < classes.size(); ++t) {
      if ((m >> t) & 1) u |= classes[t];
    }
    unions.insert(u);
    if (m == cn) break;
  }
  if (unions != std::set<Mask>(family.begin(), family.end())) {
    throw InvariantError("mu = k-1 sets are not the unions of the refinement");
  }
  return classes;
}

Pseudoflower maximal_strong_anemone(const Pseudoflower& anemone) {
  if (classify(anemone) != FlowerKind::kAnemone) {
    throw PreconditionError("maximal_strong_anemone needs an anemone");
  }
  if (anemone.num_petals() <= anemone.k()) {
    throw PreconditionError("maximal_strong_anemone needs at least k+1 petals");
  }
  std::vector<Mask> ring;
  for (int pos = 0; pos < anemone.num_petals(); ++pos) {
    for (Mask c : petal_refinement(anemone, anemone.order().at(pos))) ring.push_back(c);
  }
  if (!is_strong_pseudoanemone(anemone.system(), ring, anemone.k())) {
    throw InvariantError("common refinement is not a strong pseudoanemone");
  }
  return make_pseudoflower(anemone.system(), std::move(ring), anemone.k());
}

namespace {

// For each profile, which of the given sides it contains.
std::vector<std::vector<bool>> signatures(const std::vector<Mask>& sides,
                                          const ProfileFamily& fam) {
  std::vector<std::vector<bool>> out;
  for (const auto& p : fam.profiles()) {
    auto& sig = out.emplace_back();
    for (Mask s : sides) sig.push_back(p.contains(s));
  }
  return out;
}

std::vector<Mask> interval_sides(const Pseudoflower& f) {
  std::vector<Mask> out;
  for (int start = 0; start < f.num_petals(); ++start) {
    for (int len = 1; len < f.num_petals(); ++len) out.push_back(f.interval_union(start, len));
  }
  return out;
}

std::vector<Mask> union_sides(const Pseudoflower& f) {
  std::vector<Mask> out;
  const Order bound(static_cast<std::uint32_t>(f.k()));
  const std::uint64_t all = all_indices(f.num_petals());
  for (std::uint64_t m = 1; m < all; ++m) {
    Mask u = f.petal_union(m);
    if (f.system().lambda(u) < bound) out.push_back(u);
  }
  return out;
}

bool distinguished_pairs_within(const std::vector<std::vector<bool>>& a,
                                const std::vector<std::vector<bool>>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if (a[i] != a[j] && b[i] == b[j]) return false;
    }
  }
  return true;
}

}  // namespace

int distinguished_count(const Pseudoflower& f, const ProfileFamily& fam) {
  auto sig = signatures(interval_sides(f), fam);
  return static_cast<int>(std::set<std::vector<bool>>(sig.begin(), sig.end()).size());
}

bool preceq(const Pseudoflower& f, const Pseudoflower& g, const ProfileFamily& fam) {
  return distinguished_pairs_within(signatures(interval_sides(f), fam),
                                    signatures(interval_sides(g), fam));
}

bool preceq_a(const Pseudoflower& f, const Pseudoflower& g, const ProfileFamily& fam) {
  return distinguished_pairs_within(signatures(union_sides(f), fam),
                                    signatures(union_sides(g), fam));
}

Pseudoflower split_petal(const Pseudoflower& f, int petal_index, Mask a,
                         const ProfileFamily& fam) {
  const auto& sys = f.system();
  const Mask full = sys.full();
  if (petal_index < 0 || petal_index >= f.num_petals()) throw InputError("no such petal");
  const Mask pi = f.petal(petal_index);
  if (!crosses_properly(sys, a, pi, fam)) {
    throw PreconditionError("the separation does not cross the petal properly");
  }
  if (distinguished_count(f, fam) < 3) {
    throw PreconditionError("the pseudoflower distinguishes fewer than three profiles");
  }
  const int p = f.num_petals();
  const int pos = f.order().position(petal_index);
  for (const auto& p2 : fam.profiles()) {
    if (!p2.contains(a) || !p2.contains(pi)) continue;
    for (const auto& p3 : fam.profiles()) {
      if (!p3.contains(full & ~a) || !p3.contains(pi)) continue;
      for (int len = 1; len < p; ++len) {
        for (bool after : {true, false}) {
          const int start = after ? pos + 1 : pos - len;
          const Mask t = f.interval_union(start, len);
          if (p2.contains(t) == p3.contains(t)) continue;
          const Mask s_prime = p2.contains(t) ? (t | (a & pi)) : (t | (pi & ~a));
          const Mask near = pi & s_prime, far = pi & ~s_prime;
          std::vector<Mask> ring;
          for (int r = 0; r < p; ++r) {
            const int idx = f.order().at(pos + 1 + r);
            if (idx != petal_index) {
              ring.push_back(f.petal(idx));
            } else if (after) {  // T follows the petal: near part goes last
              ring.push_back(far);
              ring.push_back(near);
            } else {
              ring.push_back(near);
              ring.push_back(far);
            }
          }
          if (!is_pseudoflower(sys, ring, f.k())) {
            throw InvariantError("split along the corner separation is not a pseudoflower");
          }
          Pseudoflower out = make_pseudoflower(sys, std::move(ring), f.k());
          if (!is_concatenation(f, out)) {
            throw InvariantError("split pseudoflower does not extend the original");
          }
          const std::set<Mask> got{near, far}, want{pi & a, pi & ~a};
          if (got != want) throw InvariantError("split does not follow the separation");
          return out;
        }
      }
    }
  }
  throw InvariantError("no interval separates the witnesses of the proper crossing");
}

void for_each_partition(Mask set, const std::function<bool(const std::vector<Mask>&)>& visit) {
  const std::vector<int> elems = elements_of(set);
  std::vector<Mask> blocks;
  std::function<bool(std::size_t)> rec = [&](std::size_t i) {
    if (i == elems.size()) return visit(blocks);
    const Mask b = bit(elems[i]);
    for (std::size_t j = 0; j < blocks.size(); ++j) {
      blocks[j] |= b;
      bool go = rec(i + 1);
      blocks[j] &= ~b;
      if (!go) return false;
    }
    blocks.push_back(b);
    bool go = rec(i + 1);
    blocks.pop_back();
    return go;
  };
  rec(0);
}

void for_each_pseudoflower(const ConnectivitySystem& sys, int k, int min_petals,
                           bool skip_mirrors,
                           const std::function<bool(const std::vector<Mask>&)>& visit) {
  bool stop = false;
  for_each_partition(sys.full(), [&](const std::vector<Mask>& blocks) {
    const int p = static_cast<int>(blocks.size());
    if (p < min_petals) return true;
    std::vector<int> perm(p > 0 ? p - 1 : 0);
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<Mask> ring(p);
    do {
      if (skip_mirrors && p >= 3 && perm.front() > perm.back()) continue;
      ring[0] = blocks[0];
      for (int i = 1; i < p; ++i) ring[i] = blocks[perm[i - 1]];
      if (is_pseudoflower(sys, ring, k) && !visit(ring)) {
        stop = true;
        return false;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return !stop;
  });
}

void for_each_extension(const Pseudoflower& f,
                        const std::function<bool(const std::vector<Mask>&)>& visit) {
  const int p = f.num_petals();
  // Ordered partitions of each petal, in ring order.
  std::vector<std::vector<std::vector<Mask>>> options(p);
  for (int pos = 0; pos < p; ++pos) {
    for_each_partition(f.petal_at(pos), [&](const std::vector<Mask>& blocks) {
      std::vector<int> perm(blocks.size());
      std::iota(perm.begin(), perm.end(), 0);
      do {
        auto& seq = options[pos].emplace_back();
        for (int i : perm) seq.push_back(blocks[i]);
      } while (std::next_permutation(perm.begin(), perm.end()));
      return true;
    });
  }
  std::vector<Mask> ring;
  std::function<bool(int)> rec = [&](int pos) {
    if (pos == p) {
      return is_pseudoflower(f.system(), ring, f.k()) ? visit(ring) : true;
    }
    for (const auto& seq : options[pos]) {
      const std::size_t mark = ring.size();
      ring.insert(ring.end(), seq.begin(), seq.end());
      bool go = rec(pos + 1);
      ring.resize(mark);
      if (!go) return false;
    }
    return true;
  };
  rec(0);
}

}  // namespace fd
