// Copyright 2026 The Authors.
// SPDX-License-Identifier: Apache-2.0

#include "flowerdeck/profiles.h"

#include <algorithm>
#include <map>

#include "flowerdeck/seps.h"

namespace fd {

bool Profile::contains(Mask a) const {
  return std::binary_search(sides.begin(), sides.end(), a);
}

std::vector<Mask> low_order_sides(const ConnectivitySystem& sys, int k) {
  std::vector<Mask> out;
  const Order bound(static_cast<std::uint32_t>(std::max(k, 0)));
  for (Mask a = 0;; ++a) {
    if (sys.lambda(a) < bound) out.push_back(a);
    if (a == sys.full()) break;
  }
  return out;
}

bool is_profile(const ConnectivitySystem& sys, int k, const std::vector<Mask>& sides,
                bool regular) {
  const Mask full = sys.full();
  std::vector<Mask> s = low_order_sides(sys, k);
  std::vector<Mask> o = sides;
  std::sort(o.begin(), o.end());
  if (s.empty()) return o.empty();
  seps::SepSystem system(full, s);
  if (!seps::is_orientation(system, o)) return false;
  if (regular ? !seps::is_consistent(system, o) : !seps::is_consistent_weak(full, o)) {
    return false;
  }
  auto in_o = [&](Mask a) { return std::binary_search(o.begin(), o.end(), a); };
  const Order bound(static_cast<std::uint32_t>(k));
  for (Mask a : o) {
    for (Mask b : o) {
      Mask u = a | b;
      if (sys.lambda(u) < bound && in_o(full & ~u)) return false;
    }
  }
  return true;
}

namespace {

// Backtracking over unoriented separations. Each step orients one pair and
// checks it against everything already chosen; a union of two chosen sides
// that lies in S_k is marked as forced so its pair can only go one way.
class Search {
 public:
  Search(const std::vector<Order>& table, Mask full, int k, bool irregular,
         const std::vector<Mask>& pairs)
      : t_(table),
        full_(full),
        bound_(static_cast<std::uint32_t>(k)),
        irregular_(irregular),
        pairs_(pairs),
        state_(table.size(), 0),
        forced_(table.size(), 0) {}

  // Leaves below the current node, or (with `stop_depth`) the choice
  // prefixes reaching that depth.
  void run(std::size_t depth, std::size_t stop_depth, std::vector<std::uint8_t>& prefix,
           std::vector<std::vector<std::uint8_t>>* frontier, std::vector<Profile>* leaves) {
    if (depth == stop_depth && depth < pairs_.size()) {
      frontier->push_back(prefix);
      return;
    }
    if (depth == pairs_.size()) {
      std::vector<Mask> sides = in_;
      std::sort(sides.begin(), sides.end());
      leaves->push_back(Profile{static_cast<int>(bound_.value()), std::move(sides)});
      return;
    }
    for (std::uint8_t choice = 0; choice < 2; ++choice) {
      if (!apply(depth, choice)) continue;
      prefix.push_back(choice);
      run(depth + 1, stop_depth, prefix, frontier, leaves);
      prefix.pop_back();
      undo();
    }
  }

  bool replay(const std::vector<std::uint8_t>& prefix) {
    for (std::size_t d = 0; d < prefix.size(); ++d) {
      if (!apply(d, prefix[d])) return false;
    }
    return true;
  }

 private:
  bool in_sk(Mask u) const { return t_[u] < bound_; }

  bool apply(std::size_t depth, std::uint8_t choice) {
    const Mask c = pairs_[depth];
    const Mask x = choice == 0 ? c : (full_ & ~c);
    const Mask xb = full_ & ~x;
    if (x == full_ && !irregular_) return false;
    if (forced_[xb] != 0) return false;
    for (Mask y : in_) {
      const Mask yb = full_ & ~y;
      if (irregular_) {
        if ((subset_of(xb, y) && xb != y) || (subset_of(yb, x) && yb != x)) return false;
      } else if (subset_of(xb, y) || subset_of(yb, x)) {
        return false;
      }
    }
    const std::size_t mark = trail_.size();
    for (Mask y : in_) {
      const Mask u = x | y;
      if (u == x || u == y || !in_sk(u)) continue;
      if (state_[u] == kOut) {
        rollback(mark);
        return false;
      }
      if (state_[u] == kUnknown) {
        ++forced_[u];
        trail_.push_back(u);
      }
    }
    state_[x] = kIn;
    state_[xb] = kOut;
    in_.push_back(x);
    marks_.push_back(mark);
    return true;
  }

  void undo() {
    const Mask x = in_.back();
    in_.pop_back();
    state_[x] = kUnknown;
    state_[full_ & ~x] = kUnknown;
    rollback(marks_.back());
    marks_.pop_back();
  }

  void rollback(std::size_t mark) {
    while (trail_.size() > mark) {
      --forced_[trail_.back()];
      trail_.pop_back();
    }
  }

  static constexpr std::uint8_t kUnknown = 0, kIn = 1, kOut = 2;
  const std::vector<Order>& t_;
  Mask full_;
  Order bound_;
  bool irregular_;
  const std::vector<Mask>& pairs_;
  std::vector<std::uint8_t> state_;
  std::vector<std::uint32_t> forced_;
  std::vector<Mask> trail_;
  std::vector<std::size_t> marks_;
  std::vector<Mask> in_;
};

}  // namespace

std::vector<Profile> enumerate_profiles(const ConnectivitySystem& sys, int k,
                                        const ProfileOptions& opts) {
  if (k < 0) throw PreconditionError("k must be a natural number");
  if (k == 0) return {Profile{0, {}}};
  const std::vector<Order> table = sys.table();
  const Mask full = sys.full();
  const Order bound(static_cast<std::uint32_t>(k));

  std::vector<Mask> pairs;
  for (Mask c = 0; c <= full; c += 2) {  // even masks avoid element 0
    if (table[c] < bound) pairs.push_back(c);
  }
  std::stable_sort(pairs.begin(), pairs.end(),
                   [&](Mask a, Mask b) { return table[a] < table[b]; });

  std::vector<Profile> out;
  std::vector<std::uint8_t> prefix;
  if (opts.exec == Exec::kSerial) {
    Search s(table, full, k, opts.irregular, pairs);
    s.run(0, pairs.size() + 1, prefix, nullptr, &out);
  } else {
    // Grow the split depth until there is enough independent work.
    std::vector<std::vector<std::uint8_t>> frontier;
    std::size_t depth = 0;
    for (;;) {
      frontier.clear();
      out.clear();
      Search s(table, full, k, opts.irregular, pairs);
      s.run(0, depth, prefix, &frontier, &out);
      if (frontier.size() >= static_cast<std::size_t>(8 * jobs()) || depth >= pairs.size()) break;
      ++depth;
    }
    std::vector<std::vector<Profile>> parts(frontier.size());
    const std::int64_t nf = static_cast<std::int64_t>(frontier.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < nf; ++i) {
      Search s(table, full, k, opts.irregular, pairs);
      std::vector<std::uint8_t> local = frontier[i];
      if (!s.replay(local)) continue;
      s.run(local.size(), pairs.size() + 1, local, nullptr, &parts[i]);
    }
    for (auto& part : parts) {
      out.insert(out.end(), std::make_move_iterator(part.begin()),
                 std::make_move_iterator(part.end()));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Profile truncate(const ConnectivitySystem& sys, const Profile& p, int l) {
  if (l < 0 || l > p.k) throw PreconditionError("truncation level must lie in [0, k]");
  Profile out{l, {}};
  const Order bound(static_cast<std::uint32_t>(l));
  for (Mask a : p.sides) {
    if (sys.lambda(a) < bound) out.sides.push_back(a);
  }
  return out;
}

bool distinguishes(const ConnectivitySystem& sys, Mask a, const Profile& p, const Profile& q) {
  if (sys.lambda(a) >= Order(static_cast<std::uint32_t>(std::min(p.k, q.k)))) {
    throw PreconditionError("side is not oriented by both profiles");
  }
  return p.contains(a) != q.contains(a);
}

ProfileFamily::ProfileFamily(const ConnectivitySystem& sys, std::vector<Profile> profiles)
    : profiles_(std::move(profiles)) {
  std::sort(profiles_.begin(), profiles_.end());
  if (std::adjacent_find(profiles_.begin(), profiles_.end()) != profiles_.end()) {
    throw PreconditionError("profile family has duplicates");
  }
  if (profiles_.empty()) return;
  k_ = profiles_[0].k;
  for (const auto& p : profiles_) {
    if (p.k != k_) throw PreconditionError("profile family mixes values of k");
  }
  if (k_ >= 1) {
    Profile t = truncate(sys, profiles_[0], k_ - 1);
    for (const auto& p : profiles_) {
      if (truncate(sys, p, k_ - 1) != t) {
        throw PreconditionError("profile family has no common truncation");
      }
    }
  }
}

std::vector<ProfileFamily> group_by_truncation(const ConnectivitySystem& sys,
                                               const std::vector<Profile>& profiles) {
  std::map<std::vector<Mask>, std::vector<Profile>> groups;
  for (const auto& p : profiles) {
    groups[p.k >= 1 ? truncate(sys, p, p.k - 1).sides : std::vector<Mask>{}].push_back(p);
  }
  std::vector<ProfileFamily> out;
  for (auto& [key, members] : groups) out.emplace_back(sys, std::move(members));
  return out;
}

Location locate(const Profile& p, const Pseudoflower& f) {
  if (p.k != f.k()) throw PreconditionError("profile and pseudoflower disagree on k");
  const int n = f.num_petals();
  if (n < 3) throw PreconditionError("locate needs at least three petals");
  const Mask full = f.system().full();
  for (int pos = 0; pos < n; ++pos) {
    if (p.contains(full & ~f.petal_at(pos))) return {true, f.order().at(pos)};
  }
  std::vector<int> found;
  for (int v = 0; v < n; ++v) {
    bool into = true, out_of = true;
    for (int x = 0; x < n; ++x) {
      if (x == v) continue;
      into = into && p.contains(f.cut_union(x, v));
      out_of = out_of && p.contains(f.cut_union(v, x));
    }
    if (into || out_of) found.push_back(v);
  }
  if (found.size() != 1) {
    throw InvariantError("profile is located at " + std::to_string(found.size()) + " cuts");
  }
  return {false, found[0]};
}

bool crosses_properly(const ConnectivitySystem& sys, Mask a, Mask b, const ProfileFamily& fam) {
  if (fam.empty()) return false;
  const Order bound(static_cast<std::uint32_t>(fam.k()));
  if (sys.lambda(a) >= bound || sys.lambda(b) >= bound) {
    throw PreconditionError("crossing test needs sides of order below k");
  }
  const Mask full = sys.full();
  for (Mask x : {a, full & ~a}) {
    for (Mask y : {b, full & ~b}) {
      bool hit = std::any_of(fam.profiles().begin(), fam.profiles().end(),
                             [&](const Profile& p) { return p.contains(x) && p.contains(y); });
      if (!hit) return false;
    }
  }
  return true;
}

}  // namespace fd
