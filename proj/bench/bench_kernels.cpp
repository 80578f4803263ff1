// Copyright 2026 The Authors.
// SPDX-License-Identifier: Apache-2.0

// Serial reference against the OpenMP kernels. Arg 0 is serial, 1 parallel.

#include <benchmark/benchmark.h>

#include <vector>

#include "flowerdeck/connsys.h"
#include "flowerdeck/flowers.h"
#include "flowerdeck/matroid.h"
#include "flowerdeck/profiles.h"

namespace {

using namespace fd;

Exec exec_of(const benchmark::State& state) {
  return state.range(0) == 0 ? Exec::kSerial : Exec::kParallel;
}

ConnectivitySystem wheel_edges(int spokes) {
  // Hub 0, rim 1..spokes; spokes first, then rim edges.
  std::vector<std::pair<int, int>> ends;
  for (int i = 1; i <= spokes; ++i) ends.emplace_back(0, i);
  for (int i = 1; i <= spokes; ++i) ends.emplace_back(i, i % spokes + 1);
  return ConnectivitySystem::from_graph(GroundSet::numbered(2 * spokes), spokes + 1, ends);
}

void BM_Verify(benchmark::State& state) {
  const auto sys = ConnectivitySystem::from_matroid(Matroid::uniform(GroundSet::numbered(12), 5));
  VerifyOptions opts;
  opts.exec = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(verify(sys, opts).passed);
}
BENCHMARK(BM_Verify)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Profiles(benchmark::State& state) {
  const auto sys = wheel_edges(6);
  ProfileOptions opts;
  opts.exec = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_profiles(sys, 3, opts).size());
}
BENCHMARK(BM_Profiles)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Classify(benchmark::State& state) {
  std::vector<Order> t(std::size_t{1} << 18, Order(2));
  t.front() = t.back() = Order(0);
  const auto sys = ConnectivitySystem::from_table(GroundSet::numbered(18), std::move(t));
  std::vector<Mask> petals;
  for (int i = 0; i < 18; ++i) petals.push_back(bit(i));
  const auto f = make_pseudoflower(sys, petals, 3);
  ClassifyOptions opts;
  opts.exec = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(classify(f, opts));
}
BENCHMARK(BM_Classify)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_StrongAnemone(benchmark::State& state) {
  const auto sys = ConnectivitySystem::from_matroid(Matroid::uniform(GroundSet::numbered(16), 1));
  std::vector<Mask> petals;
  for (int i = 0; i < 16; ++i) petals.push_back(bit(i));
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_strong_pseudoanemone(sys, petals, 2, exec_of(state)));
  }
}
BENCHMARK(BM_StrongAnemone)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
