// Copyright 2026 The Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef FLOWERDECK_CORE_H_
#define FLOWERDECK_CORE_H_

#include <bit>
#include <compare>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace fd {

// Subsets of the ground set; bit i is element i.
using Mask = std::uint32_t;
inline constexpr int kMaxGround = 24;

inline int popcount(Mask m) { return std::popcount(m); }
inline bool subset_of(Mask a, Mask b) { return (a & ~b) == 0; }
inline Mask full_mask(int n) { return n >= 32 ? ~Mask{0} : ((Mask{1} << n) - 1); }
inline Mask bit(int i) { return Mask{1} << i; }
inline int lowest(Mask m) { return std::countr_zero(m); }

// Natural number or INFINITY. INFINITY compares above every natural.
class Order {
 public:
  constexpr Order() = default;
  constexpr Order(std::uint32_t v) : v_(v) {}  // NOLINT: implicit on purpose

  static constexpr Order infinity() {
    Order o;
    o.v_ = kInf;
    return o;
  }
  constexpr bool is_inf() const { return v_ == kInf; }
  constexpr std::uint32_t value() const { return v_; }

  friend constexpr auto operator<=>(Order, Order) = default;
  friend constexpr bool operator==(Order, Order) = default;
  friend constexpr Order operator+(Order a, Order b) {
    if (a.is_inf() || b.is_inf()) return infinity();
    std::uint64_t s = std::uint64_t{a.v_} + b.v_;
    return s >= kInf ? infinity() : Order(static_cast<std::uint32_t>(s));
  }

 private:
  static constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();
  std::uint32_t v_ = 0;
};

std::string to_string(Order o);

// Malformed input: bad files, masks outside the ground set, bad labels.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A caller violated an operation's hypothesis (e.g. too few petals).
struct PreconditionError : std::logic_error {
  using std::logic_error::logic_error;
};

// Something the theory says cannot happen did happen.
struct InvariantError : std::logic_error {
  using std::logic_error::logic_error;
};

class GroundSet {
 public:
  GroundSet() = default;
  explicit GroundSet(std::vector<std::string> labels);

  // Labels "1".."n" (or from `first`).
  static GroundSet numbered(int n, int first = 1);
  static GroundSet prefixed(const std::string& prefix, int n, int first = 0);

  int size() const { return static_cast<int>(labels_.size()); }
  Mask full() const { return full_mask(size()); }
  const std::string& label(int i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }

  int index_of(std::string_view label) const;
  Mask mask_of(const std::vector<std::string>& labels) const;
  std::vector<std::string> labels_of(Mask m) const;
  // Throws InputError if m has bits outside the ground set.
  void check(Mask m) const;

  // Sub-ground-set of the elements in m, keeping their relative order.
  GroundSet restrict(Mask m) const;

  friend bool operator==(const GroundSet& a, const GroundSet& b) {
    return a.labels_ == b.labels_;
  }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> index_;
};

// Scatter the low bits of `m` onto the positions set in `positions`.
Mask deposit(Mask m, Mask positions);
// Gather the bits of `m` at `positions` into the low bits.
Mask extract(Mask m, Mask positions);

std::vector<int> elements_of(Mask m);

}  // namespace fd

#endif  // FLOWERDECK_CORE_H_
