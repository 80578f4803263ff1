// Copyright 2026 The Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef FLOWERDECK_CYCLIC_H_
#define FLOWERDECK_CYCLIC_H_

#include <map>
#include <vector>

namespace fd {

// A finite cyclic order on distinct integer items, kept as one of its
// rotations. Cut i is the gap just before ring[i].
class CyclicOrder {
 public:
  CyclicOrder() = default;
  explicit CyclicOrder(std::vector<int> ring);

  const std::vector<int>& ring() const { return ring_; }
  int size() const { return static_cast<int>(ring_.size()); }
  int position(int item) const;
  bool contains(int item) const { return pos_.count(item) != 0; }
  int at(int i) const { return ring_[((i % size()) + size()) % size()]; }

  // Items walking forward from cut `from` to cut `to`.
  std::vector<int> interval(int from, int to) const;
  // y lies strictly between x and z walking forward from x.
  bool between(int x, int y, int z) const;
  bool adjacent(int x, int y) const;

  CyclicOrder canonical() const;  // minimum item first
  CyclicOrder mirrored() const;
  CyclicOrder mirror_canonical() const;  // smaller of the two canonical forms

  // Rotation-invariant.
  friend bool operator==(const CyclicOrder& a, const CyclicOrder& b) {
    return a.canonical().ring_ == b.canonical().ring_;
  }
  bool same_up_to_mirror(const CyclicOrder& other) const {
    return mirror_canonical().ring_ == other.mirror_canonical().ring_;
  }

 private:
  std::vector<int> ring_;
  std::map<int, int> pos_;
};

// f(y) strictly between f(x) and f(z) implies y strictly between x and z.
bool is_monotone(const std::map<int, int>& f, const CyclicOrder& src, const CyclicOrder& dst);

// The alternating cycle cut 0, ring[0], cut 1, ring[1], ...
class CycleCompletion {
 public:
  struct Entry {
    bool is_cut;
    int value;  // cut index or item
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  explicit CycleCompletion(CyclicOrder co);
  const std::vector<Entry>& entries() const { return entries_; }
  Entry successor(Entry x) const;
  Entry predecessor(Entry x) const;

 private:
  int index_of(Entry x) const;
  CyclicOrder co_;
  std::vector<Entry> entries_;
};

}  // namespace fd

#endif  // FLOWERDECK_CYCLIC_H_
