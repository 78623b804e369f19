// Copyright 2026 The rfan Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "rfan/rfan.hpp"

namespace {

using namespace rfan;

void BM_BuchbergerLex(benchmark::State& state) {
  const Ideal I = certificate_ideal();
  const TermOrder lex = TermOrder::lex(4);
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(I, lex));
}
BENCHMARK(BM_BuchbergerLex)->Unit(benchmark::kMillisecond);

void BM_GbForWeight(benchmark::State& state) {
  const Ideal I = certificate_ideal();
  const IntVector w{Integer(10), Integer(1), Integer(2), Integer(6)};
  const TermOrder lex = TermOrder::lex(4);
  for (auto _ : state) benchmark::DoNotOptimize(gb_for_weight(I, std::span<const Integer>(w), lex));
}
BENCHMARK(BM_GbForWeight)->Unit(benchmark::kMillisecond);

void BM_GroebnerCone(benchmark::State& state) {
  const Ideal I = certificate_ideal();
  const IntVector w{Integer(10), Integer(1), Integer(2), Integer(6)};
  const auto gb = gb_for_weight(I, std::span<const Integer>(w), TermOrder::lex(4));
  for (auto _ : state) benchmark::DoNotOptimize(groebner_cone(gb));
}
BENCHMARK(BM_GroebnerCone)->Unit(benchmark::kMillisecond);

void BM_StrictFeasibility(benchmark::State& state) {
  const auto& d = certificate_data();
  const auto outcome = check_regularity(d.graph());
  for (auto _ : state) benchmark::DoNotOptimize(lp_feasible_strict(outcome.system, d.edges.size()));
}
BENCHMARK(BM_StrictFeasibility)->Unit(benchmark::kMicrosecond);

void BM_SmallFan(benchmark::State& state) {
  const Ideal I = parse_ideal("ring x1,x2; ideal x1^2 - x2, x2^2 - x1;");
  const TermOrder lex = TermOrder::lex(2);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_restricted_fan(I, lex));
}
BENCHMARK(BM_SmallFan)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
