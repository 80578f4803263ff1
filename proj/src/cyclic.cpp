// Copyright 2026 The Authors.
// SPDX-License-Identifier: Apache-2.0

#include "flowerdeck/cyclic.h"

#include <algorithm>
#include <stdexcept>

#include "flowerdeck/core.h"

namespace fd {

CyclicOrder::CyclicOrder(std::vector<int> ring) : ring_(std::move(ring)) {
  for (int i = 0; i < size(); ++i) {
    if (!pos_.emplace(ring_[i], i).second) {
      throw InputError("cyclic order repeats an item");
    }
  }
}

int CyclicOrder::position(int item) const {
  auto it = pos_.find(item);
  if (it == pos_.end()) throw InputError("item not in cyclic order");
  return it->second;
}

std::vector<int> CyclicOrder::interval(int from, int to) const {
  const int n = size();
  if (from < 0 || to < 0 || from >= n || to >= n) throw InputError("cut out of range");
  if (from == to) throw PreconditionError("interval needs two distinct cuts");
  std::vector<int> out;
  for (int i = from; i != to; i = (i + 1) % n) out.push_back(ring_[i]);
  return out;
}

bool CyclicOrder::between(int x, int y, int z) const {
  const int n = size();
  int dy = (position(y) - position(x) + n) % n;
  int dz = (position(z) - position(x) + n) % n;
  if (x == z) return false;
  return dy > 0 && dy < dz;
}

bool CyclicOrder::adjacent(int x, int y) const {
  const int n = size();
  if (x == y) return false;
  int d = (position(y) - position(x) + n) % n;
  return d == 1 || d == n - 1;
}

CyclicOrder CyclicOrder::canonical() const {
  if (ring_.empty()) return *this;
  std::vector<int> r = ring_;
  std::rotate(r.begin(), std::min_element(r.begin(), r.end()), r.end());
  return CyclicOrder(std::move(r));
}

CyclicOrder CyclicOrder::mirrored() const {
  std::vector<int> r(ring_.rbegin(), ring_.rend());
  return CyclicOrder(std::move(r));
}

CyclicOrder CyclicOrder::mirror_canonical() const {
  CyclicOrder a = canonical(), b = mirrored().canonical();
  return a.ring_ <= b.ring_ ? a : b;
}

bool is_monotone(const std::map<int, int>& f, const CyclicOrder& src, const CyclicOrder& dst) {
  const auto& items = src.ring();
  for (int x : items) {
    for (int y : items) {
      for (int z : items) {
        int fx = f.at(x), fy = f.at(y), fz = f.at(z);
        // Open intervals with equal ends are taken to be empty.
        if (fx == fy || fy == fz || fx == fz) continue;
        if (dst.between(fx, fy, fz) && !src.between(x, y, z)) return false;
      }
    }
  }
  return true;
}

CycleCompletion::CycleCompletion(CyclicOrder co) : co_(std::move(co)) {
  if (co_.size() == 0) throw PreconditionError("cycle completion of an empty order");
  for (int i = 0; i < co_.size(); ++i) {
    entries_.push_back({true, i});
    entries_.push_back({false, co_.ring()[i]});
  }
}

int CycleCompletion::index_of(Entry x) const {
  if (x.is_cut) {
    if (x.value < 0 || x.value >= co_.size()) throw InputError("cut out of range");
    return 2 * x.value;
  }
  return 2 * co_.position(x.value) + 1;
}

CycleCompletion::Entry CycleCompletion::successor(Entry x) const {
  return entries_[(index_of(x) + 1) % entries_.size()];
}

CycleCompletion::Entry CycleCompletion::predecessor(Entry x) const {
  return entries_[(index_of(x) + entries_.size() - 1) % entries_.size()];
}

}  // namespace fd
