// Copyright 2026 The Authors.
// SPDX-License-Identifier: Apache-2.0

#include "flowerdeck/matroid.h"

#include <gmpxx.h>

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <numeric>

namespace fd {

struct Matroid::Backend {
  explicit Backend(GroundSet g) : ground(std::move(g)) {
    if (ground.size() <= kDenseCacheLimit) {
      dense_size = std::size_t{1} << ground.size();
      dense = std::make_unique<std::atomic<std::int8_t>[]>(dense_size);
      for (std::size_t i = 0; i < dense_size; ++i) dense[i].store(-1, std::memory_order_relaxed);
    }
  }
  virtual ~Backend() = default;
  virtual int raw_rank(Mask x) const = 0;
  virtual std::string describe() const = 0;

  int rank(Mask x) const {
    ground.check(x);
    if (dense) {
      auto& slot = dense[x];
      int v = slot.load(std::memory_order_relaxed);
      if (v >= 0) return v;
      v = raw_rank(x);
      slot.store(static_cast<std::int8_t>(v), std::memory_order_relaxed);
      return v;
    }
    {
      std::lock_guard<std::mutex> lock(mu);
      auto it = sparse.find(x);
      if (it != sparse.end()) return it->second;
    }
    int v = raw_rank(x);
    std::lock_guard<std::mutex> lock(mu);
    sparse.emplace(x, v);
    return v;
  }

  static constexpr int kDenseCacheLimit = 20;
  GroundSet ground;
  std::size_t dense_size = 0;
  std::unique_ptr<std::atomic<std::int8_t>[]> dense;
  mutable std::mutex mu;
  mutable std::map<Mask, int> sparse;
};

namespace {

class UniformBackend : public Matroid::Backend {
 public:
  UniformBackend(GroundSet g, int r) : Backend(std::move(g)), r_(r) {}
  int raw_rank(Mask x) const override { return std::min(r_, popcount(x)); }
  std::string describe() const override {
    return "U_{" + std::to_string(r_) + "," + std::to_string(ground.size()) + "}";
  }

 private:
  int r_;
};

class GraphicBackend : public Matroid::Backend {
 public:
  GraphicBackend(GroundSet g, int nv, std::vector<std::pair<int, int>> ends)
      : Backend(std::move(g)), nv_(nv), ends_(std::move(ends)) {}

  int raw_rank(Mask x) const override {
    std::vector<int> parent(nv_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    int r = 0;
    for (int e : elements_of(x)) {
      int a = find(ends_[e].first), b = find(ends_[e].second);
      if (a != b) {
        parent[a] = b;
        ++r;
      }
    }
    return r;
  }
  std::string describe() const override {
    return "graphic(" + std::to_string(nv_) + " vertices, " +
           std::to_string(ends_.size()) + " edges)";
  }

 private:
  int nv_;
  std::vector<std::pair<int, int>> ends_;
};

class ModPBackend : public Matroid::Backend {
 public:
  ModPBackend(GroundSet g, std::uint32_t p, std::vector<std::vector<std::int64_t>> cols)
      : Backend(std::move(g)), p_(p), cols_(std::move(cols)) {
    for (auto& c : cols_) {
      for (auto& v : c) v = ((v % static_cast<std::int64_t>(p_)) + p_) % p_;
    }
    rows_ = cols_.empty() ? 0 : static_cast<int>(cols_[0].size());
  }

  int raw_rank(Mask x) const override {
    std::vector<std::vector<std::int64_t>> a;
    for (int e : elements_of(x)) a.push_back(cols_[e]);
    // Eliminate treating each selected column as a row vector.
    const std::int64_t p = p_;
    int r = 0;
    for (int c = 0; c < rows_ && r < static_cast<int>(a.size()); ++c) {
      int piv = -1;
      for (int i = r; i < static_cast<int>(a.size()); ++i) {
        if (a[i][c] != 0) {
          piv = i;
          break;
        }
      }
      if (piv < 0) continue;
      std::swap(a[r], a[piv]);
      std::int64_t inv = mod_inverse(a[r][c]);
      for (int j = c; j < rows_; ++j) a[r][j] = a[r][j] * inv % p;
      for (int i = 0; i < static_cast<int>(a.size()); ++i) {
        if (i == r || a[i][c] == 0) continue;
        std::int64_t f = a[i][c];
        for (int j = c; j < rows_; ++j) a[i][j] = ((a[i][j] - f * a[r][j]) % p + p) % p;
      }
      ++r;
    }
    return r;
  }
  std::string describe() const override {
    return "linear over GF(" + std::to_string(p_) + ")";
  }

 private:
  std::int64_t mod_inverse(std::int64_t a) const {
    std::int64_t result = 1, base = a, e = static_cast<std::int64_t>(p_) - 2;
    while (e > 0) {
      if (e & 1) result = result * base % p_;
      base = base * base % p_;
      e >>= 1;
    }
    return result;
  }

  std::uint32_t p_;
  std::vector<std::vector<std::int64_t>> cols_;
  int rows_ = 0;
};

class RationalBackend : public Matroid::Backend {
 public:
  RationalBackend(GroundSet g, std::vector<std::vector<mpq_class>> cols)
      : Backend(std::move(g)), cols_(std::move(cols)) {
    rows_ = cols_.empty() ? 0 : static_cast<int>(cols_[0].size());
  }

  int raw_rank(Mask x) const override {
    std::vector<std::vector<mpq_class>> a;
    for (int e : elements_of(x)) a.push_back(cols_[e]);
    int r = 0;
    for (int c = 0; c < rows_ && r < static_cast<int>(a.size()); ++c) {
      int piv = -1;
      for (int i = r; i < static_cast<int>(a.size()); ++i) {
        if (sgn(a[i][c]) != 0) {
          piv = i;
          break;
        }
      }
      if (piv < 0) continue;
      std::swap(a[r], a[piv]);
      for (int i = r + 1; i < static_cast<int>(a.size()); ++i) {
        if (sgn(a[i][c]) == 0) continue;
        mpq_class f = a[i][c] / a[r][c];
        for (int j = c; j < rows_; ++j) a[i][j] -= f * a[r][j];
      }
      ++r;
    }
    return r;
  }
  std::string describe() const override { return "linear over Q"; }

 private:
  std::vector<std::vector<mpq_class>> cols_;
  int rows_ = 0;
};

class DualBackend : public Matroid::Backend {
 public:
  explicit DualBackend(Matroid m) : Backend(m.ground()), m_(std::move(m)) {}
  int raw_rank(Mask x) const override {
    return popcount(x) - m_.rank() + m_.rank(ground.full() & ~x);
  }
  std::string describe() const override { return "dual(" + m_.describe() + ")"; }

 private:
  Matroid m_;
};

// Minor on the elements of `keep`, after contracting `contracted`.
class MinorBackend : public Matroid::Backend {
 public:
  MinorBackend(Matroid m, Mask keep, Mask contracted)
      : Backend(m.ground().restrict(keep)),
        m_(std::move(m)),
        keep_(keep),
        contracted_(contracted),
        base_rank_(m_.rank(contracted)) {}
  int raw_rank(Mask x) const override {
    return m_.rank(deposit(x, keep_) | contracted_) - base_rank_;
  }
  std::string describe() const override {
    return "minor(" + m_.describe() + ")";
  }

 private:
  Matroid m_;
  Mask keep_;
  Mask contracted_;
  int base_rank_;
};

void check_columns(const GroundSet& g, std::size_t ncols, std::size_t rows_of_first,
                   const auto& cols) {
  if (ncols != static_cast<std::size_t>(g.size())) {
    throw InputError("matrix has " + std::to_string(ncols) + " columns for " +
                     std::to_string(g.size()) + " ground elements");
  }
  for (const auto& c : cols) {
    if (c.size() != rows_of_first) throw InputError("matrix columns differ in length");
  }
}

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

}  // namespace

Matroid Matroid::uniform(GroundSet ground, int rank) {
  if (rank < 0 || rank > ground.size()) {
    throw InputError("uniform matroid rank out of range");
  }
  return Matroid(std::make_shared<UniformBackend>(std::move(ground), rank));
}

Matroid Matroid::graphic(GroundSet ground, int num_vertices,
                         std::vector<std::pair<int, int>> ends) {
  if (ends.size() != static_cast<std::size_t>(ground.size())) {
    throw InputError("graphic matroid needs one edge per ground element");
  }
  for (auto [u, v] : ends) {
    if (u < 0 || v < 0 || u >= num_vertices || v >= num_vertices) {
      throw InputError("edge endpoint out of range");
    }
  }
  return Matroid(
      std::make_shared<GraphicBackend>(std::move(ground), num_vertices, std::move(ends)));
}

Matroid Matroid::linear_mod_p(GroundSet ground, std::uint32_t p,
                              std::vector<std::vector<std::int64_t>> columns) {
  if (!is_prime(p) || p >= (std::uint32_t{1} << 31)) {
    throw InputError("field characteristic must be a prime below 2^31");
  }
  check_columns(ground, columns.size(), columns.empty() ? 0 : columns[0].size(), columns);
  return Matroid(std::make_shared<ModPBackend>(std::move(ground), p, std::move(columns)));
}

Matroid Matroid::linear_rational(GroundSet ground,
                                 std::vector<std::vector<std::string>> columns) {
  check_columns(ground, columns.size(), columns.empty() ? 0 : columns[0].size(), columns);
  std::vector<std::vector<mpq_class>> q;
  for (const auto& c : columns) {
    auto& out = q.emplace_back();
    for (const auto& s : c) {
      mpq_class v;
      if (v.set_str(s, 10) != 0 || (s.find('/') != std::string::npos &&
                                    s.substr(s.find('/') + 1).find_first_not_of('0') ==
                                        std::string::npos)) {
        throw InputError("bad rational entry '" + s + "'");
      }
      v.canonicalize();
      out.push_back(v);
    }
  }
  return Matroid(std::make_shared<RationalBackend>(std::move(ground), std::move(q)));
}

const GroundSet& Matroid::ground() const { return impl_->ground; }

int Matroid::rank(Mask x) const { return impl_->rank(x); }

int Matroid::lambda(Mask x) const {
  return rank(x) + rank(ground().full() & ~x) - rank();
}

Matroid Matroid::dual() const { return Matroid(std::make_shared<DualBackend>(*this)); }

Matroid Matroid::contract(Mask x) const {
  ground().check(x);
  return Matroid(std::make_shared<MinorBackend>(*this, ground().full() & ~x, x));
}

Matroid Matroid::remove(Mask x) const {
  ground().check(x);
  return Matroid(std::make_shared<MinorBackend>(*this, ground().full() & ~x, 0));
}

std::string Matroid::describe() const { return impl_->describe(); }

int local_conn(const Matroid& m, Mask x, Mask y) {
  if ((x & y) != 0) throw PreconditionError("local connectivity needs disjoint sets");
  return m.rank(x) + m.rank(y) - m.rank(x | y);
}

Mask greedy_base(const Matroid& m, Mask within) {
  Mask b = 0;
  int r = 0;
  for (int e : elements_of(within)) {
    if (m.rank(b | bit(e)) > r) {
      b |= bit(e);
      ++r;
    }
  }
  return b;
}

int base_pair_connectivity(const Matroid& m, Mask x) {
  m.ground().check(x);
  Mask b = greedy_base(m, x);
  // Base of M.X, expressed back in M's coordinates.
  Mask rest = m.ground().full() & ~x;
  Mask bp = deposit(greedy_base(m.contract(rest), m.contract(rest).ground().full()), x);
  int value = popcount(b & ~bp) - popcount(bp & ~b);
  if (value != m.lambda(x)) {
    throw InvariantError("base-pair connectivity disagrees with the rank formula");
  }
  return value;
}

}  // namespace fd
