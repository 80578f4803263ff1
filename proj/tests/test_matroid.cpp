// Copyright 2026 The Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <random>

#include "flowerdeck/flowers.h"
#include "flowerdeck/matroid.h"
#include "flowerdeck/matroid_flowers.h"
#include "support.h"

namespace fd {
namespace {

const Matroid& matroid_of(const ConnectivitySystem& sys) { return *sys.matroid(); }

Matroid u(int r, int n) { return Matroid::uniform(GroundSet::numbered(n), r); }

TEST(Rank, UniformAndGraphicExamples) {
  const Matroid u24 = Matroid::uniform(GroundSet({"a", "b", "c", "d"}), 2);
  EXPECT_EQ(u24.rank(0b0011), 2);
  EXPECT_EQ(u24.rank(0), 0);
  const auto mc4 = fdt::load("mc4.json");
  EXPECT_EQ(matroid_of(mc4).rank(0b1111), 3);
  EXPECT_EQ(matroid_of(mc4).contract(0b1).rank(), 2);
}

TEST(Rank, GraphicMatchesUnionFind) {
  const std::vector<std::pair<int, int>> k4 = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  const Matroid m = matroid_of(fdt::load("mk4.json"));
  for (Mask x = 0; x < 64; ++x) EXPECT_EQ(m.rank(x), fdt::oracle::graphic_rank(4, k4, x));
}

TEST(Rank, Gf2MatchesXorBasis) {
  const std::vector<unsigned> cols = {0b001, 0b010, 0b100, 0b011, 0b101, 0b110, 0b111};
  const Matroid m = matroid_of(fdt::load("fano.json"));
  for (Mask x = 0; x < 128; ++x) EXPECT_EQ(m.rank(x), fdt::oracle::gf2_rank(cols, x));
}

TEST(Rank, FieldsAgreeOnASharedMatrix) {
  // Columns with entries in {0, 1} whose determinants are all in {0, +-1}
  // have the same matroid over every field.
  const std::vector<std::vector<std::int64_t>> cols = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {0, 1, 1}};
  std::vector<std::vector<std::string>> qcols;
  for (const auto& c : cols) {
    auto& q = qcols.emplace_back();
    for (auto v : c) q.push_back(std::to_string(v));
  }
  const auto g = GroundSet::numbered(5);
  const Matroid m2 = Matroid::linear_mod_p(g, 2, cols);
  const Matroid m7 = Matroid::linear_mod_p(g, 7, cols);
  const Matroid mq = Matroid::linear_rational(g, qcols);
  for (Mask x = 0; x < 32; ++x) {
    EXPECT_EQ(m2.rank(x), mq.rank(x));
    EXPECT_EQ(m7.rank(x), mq.rank(x));
  }
}

TEST(Rank, RationalNeedsCharacteristicZero) {
  // 2 = 0 in GF(2): the columns (1,1) and (1,-1) are parallel there.
  const auto g = GroundSet::numbered(2);
  EXPECT_EQ(Matroid::linear_rational(g, {{"1", "1"}, {"1", "-1"}}).rank(), 2);
  EXPECT_EQ(Matroid::linear_mod_p(g, 2, {{1, 1}, {1, -1}}).rank(), 1);
  EXPECT_EQ(Matroid::linear_rational(g, {{"1/2", "1"}, {"1", "2"}}).rank(), 1);
  EXPECT_THROW(Matroid::linear_rational(g, {{"x", "1"}, {"1", "2"}}), InputError);
  EXPECT_THROW(Matroid::linear_mod_p(g, 4, {{1, 1}, {1, 0}}), InputError);
}

TEST(Duality, UniformDual) {
  const Matroid d = u(1, 4).dual();
  const Matroid u34 = u(3, 4);
  for (Mask x = 0; x < 16; ++x) EXPECT_EQ(d.rank(x), u34.rank(x));
}

TEST(Duality, InvolutionAndConnectivity) {
  for (const auto& inst : fdt::matroid_corpus()) {
    const Matroid& m = matroid_of(inst.sys);
    const Matroid dd = m.dual().dual();
    const Matroid d = m.dual();
    for (Mask x = 0; x <= m.ground().full(); ++x) {
      EXPECT_EQ(dd.rank(x), m.rank(x));
      EXPECT_EQ(d.lambda(x), m.lambda(x)) << inst.name;
      EXPECT_EQ(d.rank(x), popcount(x) - m.rank() + m.rank(m.ground().full() & ~x));
    }
  }
}

TEST(Minors, RankFormulas) {
  const Matroid m = matroid_of(fdt::load("mk4.json"));
  const Mask full = m.ground().full();
  for (Mask x = 0; x <= full; ++x) {
    const Matroid c = m.contract(x), r = m.remove(x);
    const Mask keep = full & ~x;
    for (Mask y = keep;; y = (y - 1) & keep) {
      EXPECT_EQ(c.rank(extract(y, keep)), m.rank(x | y) - m.rank(x));
      EXPECT_EQ(r.rank(extract(y, keep)), m.rank(y));
      if (y == 0) break;
    }
  }
}

TEST(Minors, ContractDeleteSplitsConnectivity) {
  for (const auto& inst : fdt::matroid_corpus()) {
    const Matroid& m = matroid_of(inst.sys);
    if (m.size() > 7) continue;
    const Mask full = m.ground().full();
    for (Mask c = 0; c <= full; ++c) {
      const Mask rest = full & ~c;
      for (Mask d = rest;; d = (d - 1) & rest) {
        const int lhs = m.lambda(c | d);
        const int via_c = m.contract(c).lambda(extract(d, full & ~c));
        const int via_d = m.remove(d).lambda(extract(c, full & ~d));
        EXPECT_EQ(lhs, via_c + via_d) << inst.name;
        if (d == 0) break;
      }
    }
  }
}

TEST(LocalConn, Examples) {
  const Matroid u14 = u(1, 4);
  EXPECT_EQ(local_conn(u14, 0, 0b10), 0);
  EXPECT_EQ(local_conn(u14, 0b1, 0b10), 1);
  EXPECT_EQ(local_conn(u14, 0b1, 0b110), 1);
  EXPECT_THROW(local_conn(u14, 0b11, 0b10), PreconditionError);
}

TEST(BasePair, MatchesLambda) {
  const Matroid u24 = u(2, 4);
  EXPECT_EQ(base_pair_connectivity(u24, 0b11), 2);
  EXPECT_EQ(base_pair_connectivity(u24, 0), 0);
  EXPECT_EQ(base_pair_connectivity(u24, 0b1111), 0);
  for (const auto& inst : fdt::matroid_corpus()) {
    const Matroid& m = matroid_of(inst.sys);
    for (Mask x = 0; x <= m.ground().full(); ++x) {
      EXPECT_EQ(base_pair_connectivity(m, x), m.lambda(x)) << inst.name;
    }
  }
}

TEST(FlowerCalculus, U15) {
  const auto sys = fdt::load("u15.json");
  const Matroid& m = matroid_of(sys);
  const auto f = make_pseudoflower(sys, {1, 2, 4, 8, 16}, 2);
  EXPECT_EQ(classify(f), FlowerKind::kAnemone);
  EXPECT_EQ(flower_parameters(m, f), (FlowerParameters{1, 1}));
  const auto rep = dual_flower_check(m, f);
  EXPECT_EQ(rep.dual, (FlowerParameters{0, 0}));

  const auto del = delete_petal(m, f, 0);
  EXPECT_EQ(del.flower.k(), 2);
  EXPECT_EQ(del.minor.rank(), 1);
  EXPECT_EQ(del.flower.num_petals(), 3);
  EXPECT_EQ(del.minor.ground().labels(), (std::vector<std::string>{"p2", "p3", "p4", "p5"}));
  // Merged neighbours p5 and p2 come first.
  EXPECT_EQ(del.flower.petal_at(0), 0b1001u);

  const auto con = contract_petal(m, f, 0);
  EXPECT_EQ(con.flower.k(), 1);
  EXPECT_EQ(con.minor.rank(), 0);
  EXPECT_EQ(con.params, (FlowerParameters{0, 0}));
}

TEST(FlowerCalculus, CycleMatroidAnemone) {
  const auto sys = fdt::load("mc6.json");
  const auto f = make_pseudoflower(sys, {1, 2, 4, 8, 16, 32}, 2);
  EXPECT_EQ(classify(f), FlowerKind::kAnemone);
  const auto par = flower_parameters(matroid_of(sys), f);
  EXPECT_EQ(par.c, par.d);
}

TEST(FlowerCalculus, WheelDaisy) {
  const auto sys = fdt::load("mw5.json");
  const Matroid& m = matroid_of(sys);
  std::vector<Mask> ring;
  for (int i = 0; i < 5; ++i) ring.push_back(Mask{0b11} << (2 * i));
  const auto f = make_pseudoflower(sys, ring, 3);
  EXPECT_EQ(classify(f), FlowerKind::kDaisy);
  EXPECT_EQ(flower_parameters(m, f), (FlowerParameters{1, 0}));
  const auto rep = dual_flower_check(m, f);
  EXPECT_EQ(rep.primal.c + rep.dual.c, f.k() - 1);
  EXPECT_EQ(rep.dual.c - rep.dual.d, rep.primal.c - rep.primal.d);
  for (int i = 0; i < 5; ++i) {
    const auto del = delete_petal(m, f, i);
    EXPECT_EQ(del.flower.k(), 2 * 1 - 0 + 1);
    EXPECT_EQ(del.flower.num_petals(), 3);
    const auto con = contract_petal(m, f, i);
    EXPECT_EQ(con.flower.k(), 3);
    EXPECT_EQ(con.params, (FlowerParameters{1, 0}));
  }
}

TEST(FlowerCalculus, NeedsFivePetals) {
  const auto sys = fdt::load("mw4.json");
  std::vector<Mask> ring;
  for (int i = 0; i < 4; ++i) ring.push_back(Mask{0b11} << (2 * i));
  const auto f = make_pseudoflower(sys, ring, 3);
  EXPECT_EQ(classify(f), FlowerKind::kDaisy);
  EXPECT_THROW(flower_parameters(matroid_of(sys), f), PreconditionError);
}

TEST(ReduceClass, Examples) {
  const Matroid u24 = u(2, 4);
  const auto r = reduce_class(u24, 0b11);
  EXPECT_EQ(r.c, 0u);
  EXPECT_EQ(r.d, 0u);
  EXPECT_EQ(r.f, 0b11u);
  const auto z = reduce_class(u24, 0);
  EXPECT_EQ(z.c | z.d | z.f, 0u);
  const Matroid mc4 = matroid_of(fdt::load("mc4.json"));
  EXPECT_EQ(popcount(reduce_class(mc4, 0b11).f), mc4.lambda(0b11));
}

TEST(ReduceClass, AllSubsetsOfSmallMatroids) {
  for (const auto& inst : fdt::matroid_corpus()) {
    const Matroid& m = matroid_of(inst.sys);
    if (m.size() > 7) continue;
    for (Mask x = 0; x <= m.ground().full(); ++x) {
      const auto r = reduce_class(m, x);
      EXPECT_EQ(r.c | r.d | r.f, x);
      EXPECT_EQ(popcount(r.f), m.lambda(x)) << inst.name;
    }
  }
}

}  // namespace
}  // namespace fd
