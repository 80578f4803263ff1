// Copyright 2026 The Authors.
// SPDX-License-Identifier: Apache-2.0

#include "flowerdeck/abstract.h"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace fd {

namespace {

bool member(const std::vector<ProfileSet>& sorted, ProfileSet x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

int low_bit(ProfileSet x) { return std::countr_zero(x); }

ProfileSet union_of(const std::vector<ProfileSet>& parts, std::uint64_t index_mask) {
  ProfileSet u = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if ((index_mask >> i) & 1) u |= parts[i];
  }
  return u;
}

// Unions of parts that leave at least two parts on each side.
template <typename F>
void for_each_inner_union(int c, F&& f) {
  const std::uint64_t all = (std::uint64_t{1} << c) - 1;
  for (std::uint64_t m = 1; m < all; ++m) {
    const int on = std::popcount(m);
    if (on >= 2 && c - on >= 2) f(m);
  }
}

bool is_union_of(ProfileSet x, const std::vector<ProfileSet>& parts) {
  for (ProfileSet p : parts) {
    if ((x & p) != 0 && (x & p) != p) return false;
  }
  return true;
}

}  // namespace

ProfileSet phi(const ConnectivitySystem& sys, Mask a, const ProfileFamily& fam) {
  if (fam.size() > 64) throw PreconditionError("families are capped at 64 profiles");
  if (sys.lambda(a) >= Order(static_cast<std::uint32_t>(fam.k()))) {
    throw PreconditionError("phi is only defined on sides of order below k");
  }
  const Mask co = sys.full() & ~a;
  ProfileSet out = 0;
  for (int i = 0; i < fam.size(); ++i) {
    if (fam[i].contains(co)) out |= ProfileSet{1} << i;
  }
  return out;
}

bool crosses(ProfileSet all, ProfileSet x, ProfileSet y) {
  const ProfileSet xc = all & ~x, yc = all & ~y;
  return (x & y) != 0 && (x & yc) != 0 && (xc & y) != 0 && (xc & yc) != 0;
}

std::string to_string(PreflowerKind kind) {
  return kind == PreflowerKind::kPreAnemone ? "PRE_ANEMONE" : "PRE_DAISY";
}

std::string to_string(VertexKind kind) {
  switch (kind) {
    case VertexKind::kElement: return "ELEMENT";
    case VertexKind::kAnemone: return "ANEMONE";
    case VertexKind::kDaisy: return "DAISY";
    case VertexKind::kSimple: return "SIMPLE";
    case VertexKind::kEmpty: return "EMPTY";
  }
  return "?";
}

bool AbstractSystem::in_b(ProfileSet x) const { return member(b, x); }

std::vector<ProfileSet> boundary(ProfileSet all, const std::vector<ProfileSet>& f) {
  std::map<std::vector<bool>, ProfileSet> groups;
  for (ProfileSet rest = all; rest != 0; rest &= rest - 1) {
    const int i = low_bit(rest);
    std::vector<bool> sig;
    for (ProfileSet x : f) sig.push_back((x >> i) & 1);
    groups[sig] |= ProfileSet{1} << i;
  }
  std::vector<ProfileSet> out;
  for (auto& [sig, cls] : groups) out.push_back(cls);
  std::sort(out.begin(), out.end(),
            [](ProfileSet a, ProfileSet b) { return low_bit(a) < low_bit(b); });
  return out;
}

std::optional<CyclicOrder> interval_order(const std::vector<ProfileSet>& parts,
                                          const std::vector<ProfileSet>& present) {
  const int c = static_cast<int>(parts.size());
  if (c < 4 || c > 20) return std::nullopt;
  std::vector<std::vector<int>> adj(c);
  for (int i = 0; i < c; ++i) {
    for (int j = i + 1; j < c; ++j) {
      if (member(present, parts[i] | parts[j])) {
        adj[i].push_back(j);
        adj[j].push_back(i);
      }
    }
  }
  for (const auto& a : adj) {
    if (a.size() != 2) return std::nullopt;
  }
  std::vector<int> ring{0};
  for (int prev = -1, cur = 0;;) {
    const int next = adj[cur][0] != prev ? adj[cur][0] : adj[cur][1];
    if (next == 0) break;
    ring.push_back(next);
    prev = cur;
    cur = next;
  }
  if (static_cast<int>(ring.size()) != c) return std::nullopt;
  std::vector<int> pos(c);
  for (int i = 0; i < c; ++i) pos[ring[i]] = i;
  bool ok = true;
  for_each_inner_union(c, [&](std::uint64_t m) {
    if (!ok) return;
    std::uint64_t by_pos = 0;
    for (int i = 0; i < c; ++i) {
      if ((m >> i) & 1) by_pos |= std::uint64_t{1} << pos[i];
    }
    int starts = 0;
    for (int q = 0; q < c; ++q) {
      if (((by_pos >> q) & 1) && !((by_pos >> ((q + c - 1) % c)) & 1)) ++starts;
    }
    ok = (starts == 1) == member(present, union_of(parts, m));
  });
  if (!ok) return std::nullopt;
  return CyclicOrder(ring).mirror_canonical();
}

PreflowerKind classify_preflower(const AbstractSystem& asys, const std::vector<ProfileSet>& f) {
  if (f.size() < 2) throw PreconditionError("a pre-flower has at least two members");
  for (ProfileSet x : f) {
    if (!asys.in_b(x)) throw PreconditionError("pre-flower member outside the image");
  }
  std::vector<bool> seen(f.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    const std::size_t i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < f.size(); ++j) {
      if (!seen[j] && crosses(asys.all, f[i], f[j])) {
        seen[j] = true;
        stack.push_back(j);
      }
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw PreconditionError("pre-flower is not crossing-connected");
  }
  const auto parts = boundary(asys.all, f);
  const int c = static_cast<int>(parts.size());
  if (c > 20) throw PreconditionError("boundary too large to scan");
  bool all_present = true;
  for_each_inner_union(c, [&](std::uint64_t m) {
    all_present = all_present && asys.in_b(union_of(parts, m));
  });
  if (all_present) return PreflowerKind::kPreAnemone;
  if (interval_order(parts, asys.b)) return PreflowerKind::kPreDaisy;
  throw InvariantError("pre-flower is neither a pre-anemone nor a pre-daisy");
}

CyclicOrder boundary_cyclic_order(const AbstractSystem& asys, int v) {
  if (v < 0 || v >= static_cast<int>(asys.classes.size())) throw InputError("no such class");
  if (asys.class_kind[v] != PreflowerKind::kPreDaisy) {
    throw PreconditionError("only daisy-type classes carry a cyclic order");
  }
  auto order = interval_order(asys.boundaries[v], asys.b);
  if (!order) throw InvariantError("daisy-type class has no interval order");
  return *order;
}

AbstractSystem build_abstract(const ConnectivitySystem& sys, const ProfileFamily& fam) {
  if (fam.empty()) throw PreconditionError("abstraction needs a nonempty family");
  if (fam.size() > 64) throw PreconditionError("families are capped at 64 profiles");
  AbstractSystem a{sys, fam, fam.k(), family_mask(fam.size()), {}, {}, {}, {}, {}, {}};
  std::set<ProfileSet> image;
  for (Mask side : low_order_sides(sys, fam.k())) {
    const ProfileSet x = phi(sys, side, fam);
    if (x != 0 && x != a.all) image.insert(x);
  }
  a.b.assign(image.begin(), image.end());

  const std::int64_t nb = static_cast<std::int64_t>(a.b.size());
  std::vector<std::vector<int>> adj(nb);
  std::vector<char> closed(nb, 1);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < nb; ++i) {
    for (std::int64_t j = 0; j < nb; ++j) {
      if (i == j || !crosses(a.all, a.b[i], a.b[j])) continue;
      adj[i].push_back(static_cast<int>(j));
      if (!member(a.b, a.b[i] | a.b[j]) || !member(a.b, a.b[i] & a.b[j])) closed[i] = 0;
    }
  }
  if (std::find(closed.begin(), closed.end(), 0) != closed.end()) {
    throw InvariantError("image is not closed under corners of crossing members");
  }

  std::vector<int> comp(nb, -1);
  for (std::int64_t i = 0; i < nb; ++i) {
    if (adj[i].empty()) {
      a.nested.push_back(a.b[i]);
      continue;
    }
    if (comp[i] >= 0) continue;
    const int id = static_cast<int>(a.classes.size());
    auto& cls = a.classes.emplace_back();
    std::vector<int> stack{static_cast<int>(i)};
    comp[i] = id;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      cls.push_back(a.b[u]);
      for (int w : adj[u]) {
        if (comp[w] < 0) {
          comp[w] = id;
          stack.push_back(w);
        }
      }
    }
    std::sort(cls.begin(), cls.end());
  }

  std::set<ProfileSet> ep(a.nested.begin(), a.nested.end());
  for (const auto& cls : a.classes) {
    a.boundaries.push_back(boundary(a.all, cls));
    a.class_kind.push_back(classify_preflower(a, cls));
    for (ProfileSet c : a.boundaries.back()) {
      if (c != a.all) {
        ep.insert(c);
        ep.insert(a.all & ~c);
      }
    }
  }
  a.e_prime.assign(ep.begin(), ep.end());
  return a;
}

namespace {

// One representative per pair of e_prime: the side avoiding profile 0.
std::vector<ProfileSet> tree_pairs(const AbstractSystem& asys) {
  std::vector<ProfileSet> reps;
  for (ProfileSet x : asys.e_prime) {
    if ((x & 1) == 0) reps.push_back(x);
  }
  return reps;
}

std::vector<ProfileSet> sorted(std::vector<ProfileSet> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

std::vector<ProfileSet> orientation_of_profile(const AbstractSystem& asys, int profile) {
  std::vector<ProfileSet> out;
  for (ProfileSet r : tree_pairs(asys)) out.push_back(((r >> profile) & 1) ? r : asys.all & ~r);
  return sorted(std::move(out));
}

std::vector<ProfileSet> orientation_of_class(const AbstractSystem& asys, int v) {
  const auto& parts = asys.boundaries.at(v);
  auto inside_part = [&](ProfileSet x) {
    return std::any_of(parts.begin(), parts.end(),
                       [&](ProfileSet p) { return (x & ~p) == 0; });
  };
  std::vector<ProfileSet> out;
  for (ProfileSet r : tree_pairs(asys)) {
    const ProfileSet rc = asys.all & ~r;
    const bool in_r = inside_part(r), in_rc = inside_part(rc);
    if (in_r == in_rc) throw InvariantError("separation is not pointed at by the class");
    out.push_back(in_r ? rc : r);
  }
  return sorted(std::move(out));
}

AbstractTree build_tree(const AbstractSystem& asys) {
  const auto reps = tree_pairs(asys);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t j = i + 1; j < reps.size(); ++j) {
      if (crosses(asys.all, reps[i], reps[j])) throw InvariantError("tree set is not nested");
    }
  }
  // Consistent orientations: the chosen sides meet pairwise.
  std::vector<std::vector<ProfileSet>> found;
  std::vector<ProfileSet> chosen;
  auto rec = [&](auto&& self, std::size_t d) -> void {
    if (d == reps.size()) {
      found.push_back(chosen);
      return;
    }
    for (ProfileSet s : {reps[d], asys.all & ~reps[d]}) {
      if (std::all_of(chosen.begin(), chosen.end(), [&](ProfileSet c) { return (c & s) != 0; })) {
        chosen.push_back(s);
        self(self, d + 1);
        chosen.pop_back();
      }
    }
  };
  rec(rec, 0);

  AbstractTree t;
  const int nv = static_cast<int>(found.size());
  for (int u = 0; u < nv; ++u) {
    for (int v = u + 1; v < nv; ++v) {
      int diff = -1, count = 0;
      for (std::size_t d = 0; d < reps.size(); ++d) {
        if (found[u][d] != found[v][d]) {
          diff = static_cast<int>(d);
          ++count;
        }
      }
      if (count == 1) t.edges.push_back({u, v, found[u][diff]});
    }
  }
  if (static_cast<int>(t.edges.size()) != nv - 1 || t.edges.size() != reps.size()) {
    throw InvariantError("orientations of the tree set do not form a tree");
  }
  for (auto& o : found) t.vertices.push_back(sorted(o));

  auto vertex_of = [&](const std::vector<ProfileSet>& o) {
    auto it = std::find(t.vertices.begin(), t.vertices.end(), o);
    if (it == t.vertices.end()) throw InvariantError("orientation is not a tree vertex");
    return static_cast<int>(it - t.vertices.begin());
  };
  t.part.assign(nv, 0);
  t.class_of.assign(nv, -1);
  for (int i = 0; i < asys.fam.size(); ++i) {
    t.part[vertex_of(orientation_of_profile(asys, i))] |= ProfileSet{1} << i;
  }
  for (int v = 0; v < static_cast<int>(asys.classes.size()); ++v) {
    int at = vertex_of(orientation_of_class(asys, v));
    if (t.class_of[at] >= 0) throw InvariantError("two classes point at the same vertex");
    t.class_of[at] = v;
  }
  std::vector<int> degree(nv, 0);
  for (const auto& e : t.edges) {
    ++degree[e.u];
    ++degree[e.v];
  }
  for (int v = 0; v < nv; ++v) {
    if (t.part[v] != 0) {
      t.kind.push_back(VertexKind::kElement);
    } else if (t.class_of[v] >= 0) {
      t.kind.push_back(asys.class_kind[t.class_of[v]] == PreflowerKind::kPreAnemone
                           ? VertexKind::kAnemone
                           : VertexKind::kDaisy);
    } else {
      t.kind.push_back(degree[v] >= 4 ? VertexKind::kSimple : VertexKind::kEmpty);
    }
  }
  return t;
}

std::vector<int> structure_cases(const AbstractSystem& asys, const AbstractTree& tree,
                                 int vertex) {
  if (tree.part.at(vertex) != 0) return {1};
  std::vector<ProfileSet> parts;
  for (const auto& e : tree.edges) {
    if (e.u == vertex) parts.push_back(asys.all & ~e.side);
    if (e.v == vertex) parts.push_back(e.side);
  }
  ProfileSet seen = 0;
  for (ProfileSet p : parts) {
    if ((seen & p) != 0) throw InvariantError("edge directions at a vertex overlap");
    seen |= p;
  }
  if (seen != asys.all) throw InvariantError("edge directions do not cover the family");
  std::sort(parts.begin(), parts.end(),
            [](ProfileSet a, ProfileSet b) { return low_bit(a) < low_bit(b); });
  const int c = static_cast<int>(parts.size());
  if (c > 20) throw PreconditionError("vertex degree too large to scan");
  bool none = true, every = true;
  for_each_inner_union(c, [&](std::uint64_t m) {
    const bool in = asys.in_b(union_of(parts, m));
    none = none && !in;
    every = every && in;
  });
  std::vector<int> out;
  if (none) out.push_back(2);
  if (c >= 4 && every) out.push_back(3);
  if (interval_order(parts, asys.b)) out.push_back(4);
  return out;
}

int flower_class(const AbstractSystem& asys, const Pseudoflower& f) {
  if (distinguished_count(f, asys.fam) < 4) {
    throw PreconditionError("the pseudoflower distinguishes fewer than four profiles");
  }
  std::vector<ProfileSet> shown;
  for (int start = 0; start < f.num_petals(); ++start) {
    for (int len = 1; len < f.num_petals(); ++len) {
      const ProfileSet x = phi(asys.sys, f.interval_union(start, len), asys.fam);
      if (x != 0 && x != asys.all) shown.push_back(x);
    }
  }
  int found = -1;
  for (int v = 0; v < static_cast<int>(asys.classes.size()); ++v) {
    const bool fits = std::all_of(shown.begin(), shown.end(), [&](ProfileSet x) {
      return is_union_of(x, asys.boundaries[v]);
    });
    if (!fits) continue;
    if (found >= 0) throw InvariantError("pseudoflower fits two classes");
    found = v;
  }
  if (found < 0) throw InvariantError("pseudoflower fits no class");
  if (f.num_petals() >= 4) {
    const FlowerKind kind = classify(f);
    const bool anemone = asys.class_kind[found] == PreflowerKind::kPreAnemone;
    if ((kind == FlowerKind::kAnemone && !anemone) || (kind == FlowerKind::kDaisy && anemone)) {
      throw InvariantError("flower type disagrees with its class");
    }
  }
  return found;
}

namespace {

std::vector<Mask> preimages(const AbstractSystem& asys, ProfileSet r) {
  std::vector<Mask> out;
  for (Mask a : low_order_sides(asys.sys, asys.k)) {
    if (phi(asys.sys, a, asys.fam) == r) out.push_back(a);
  }
  return out;
}

}  // namespace

std::pair<Mask, Mask> nested_preimages(const AbstractSystem& asys, ProfileSet r, ProfileSet t) {
  if ((r & ~t) != 0) throw PreconditionError("first image is not contained in the second");
  const auto pr = preimages(asys, r), pt = preimages(asys, t);
  if (pr.empty() || pt.empty()) throw PreconditionError("set is not in the image of phi");
  Mask p = pr.front(), q = pt.front();
  if (!subset_of(p, q)) {
    // Submodularity puts one of the two corners below k.
    if (asys.sys.lambda(p & q) < Order(static_cast<std::uint32_t>(asys.k))) {
      p &= q;
    } else {
      q |= p;
    }
  }
  if (phi(asys.sys, p, asys.fam) != r || phi(asys.sys, q, asys.fam) != t) {
    throw InvariantError("corner replacement changed the image");
  }
  return {p, q};
}

Mask biggest_preimage(const AbstractSystem& asys, ProfileSet r) {
  const auto pr = preimages(asys, r);
  if (pr.empty()) throw PreconditionError("set is not in the image of phi");
  Mask u = 0;
  for (Mask a : pr) u |= a;
  if (asys.sys.lambda(u) >= Order(static_cast<std::uint32_t>(asys.k)) ||
      phi(asys.sys, u, asys.fam) != r) {
    throw InvariantError("preimages have no biggest element");
  }
  return u;
}

std::vector<ProfileSet> push_forward(const AbstractSystem& asys, int profile) {
  std::vector<ProfileSet> out;
  for (ProfileSet x : asys.b) {
    if (((x >> profile) & 1) == 0) out.push_back(x);
  }
  return out;
}

Profile pull_back(const AbstractSystem& asys, const std::vector<ProfileSet>& small_sides) {
  Profile p{asys.k, {}};
  for (Mask a : low_order_sides(asys.sys, asys.k)) {
    const ProfileSet x = phi(asys.sys, a, asys.fam);
    if (x == 0 || member(small_sides, x)) p.sides.push_back(a);
  }
  return p;
}

std::string to_dot(const AbstractSystem& asys, const AbstractTree& tree, const std::string& name) {
  auto members = [](ProfileSet x) {
    std::string s;
    for (ProfileSet rest = x; rest != 0; rest &= rest - 1) {
      if (!s.empty()) s += ",";
      s += "P" + std::to_string(low_bit(rest));
    }
    return s;
  };
  std::ostringstream out;
  out << "graph " << name << " {\n  node [label=\"\"];\n";
  for (std::size_t v = 0; v < tree.vertices.size(); ++v) {
    out << "  v" << v << " [";
    switch (tree.kind[v]) {
      case VertexKind::kElement:
        out << "shape=circle, style=filled, fillcolor=black, xlabel=\"" << members(tree.part[v])
            << "\"";
        break;
      case VertexKind::kAnemone:
        out << "shape=doublecircle, color=blue, style=filled, fillcolor=blue";
        break;
      case VertexKind::kDaisy:
        out << "shape=doublecircle, color=green, style=filled, fillcolor=green";
        break;
      case VertexKind::kSimple: out << "shape=circle, color=red"; break;
      case VertexKind::kEmpty: out << "shape=circle"; break;
    }
    out << "];\n";
  }
  // Daisy vertices list their edges in the boundary's cyclic order.
  std::vector<std::size_t> order(tree.edges.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> rank(tree.edges.size(), 0);
  for (std::size_t v = 0; v < tree.vertices.size(); ++v) {
    if (tree.kind[v] != VertexKind::kDaisy) continue;
    const int cls = tree.class_of[v];
    const auto ring = boundary_cyclic_order(asys, cls).ring();
    for (std::size_t e = 0; e < tree.edges.size(); ++e) {
      const auto& ed = tree.edges[e];
      if (ed.u != static_cast<int>(v) && ed.v != static_cast<int>(v)) continue;
      const ProfileSet far = ed.u == static_cast<int>(v) ? asys.all & ~ed.side : ed.side;
      const auto& parts = asys.boundaries[cls];
      for (std::size_t i = 0; i < ring.size(); ++i) {
        if (parts[ring[i]] == far) rank[e] = static_cast<int>(i);
      }
    }
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return rank[a] < rank[b]; });
  for (std::size_t e : order) {
    const auto& ed = tree.edges[e];
    out << "  v" << ed.u << " -- v" << ed.v << " [label=\"" << members(ed.side) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace fd
