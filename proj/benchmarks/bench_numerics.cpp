// Copyright (c) the simbound authors.
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "simbound/numerics.hpp"

using namespace simbound;

static void BM_BinomTailPair(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  const std::int64_t m = static_cast<std::int64_t>(0.254 * static_cast<double>(n));
  for (auto _ : state) {
    benchmark::DoNotOptimize(binom_tail_pair({n, 0.244}, m));
  }
}
BENCHMARK(BM_BinomTailPair)->Arg(1000)->Arg(10000)->Arg(50000);

static void BM_TwoSidedDevTail(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(two_sided_dev_tail(n, 0.244, 0.01));
  }
}
BENCHMARK(BM_TwoSidedDevTail)->Arg(10000)->Arg(50000);

static void BM_LogBinomCoeff(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(log_binom_coeff(50000, 12700));
  }
}
BENCHMARK(BM_LogBinomCoeff);
