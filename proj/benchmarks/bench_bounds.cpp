// Copyright (c) the simbound authors.
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "simbound/bounds.hpp"
#include "simbound/oracle.hpp"

using namespace simbound;

static void BM_JointTail(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(joint_tail(n, 0.244, 0.244, 0.85, 0.01, 0.005));
  }
}
BENCHMARK(BM_JointTail)->Arg(1000)->Arg(10000)->Arg(50000)->Unit(benchmark::kMillisecond);

static void BM_NaiveBayesBuild(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  for (auto _ : state) {
    NaiveBayesEvaluator ev(n, 0.244, 0.85, 0.01);
    benchmark::DoNotOptimize(ev.probability(100000));
  }
}
BENCHMARK(BM_NaiveBayesBuild)->Arg(10000)->Arg(50000)->Unit(benchmark::kMillisecond);

static void BM_NaiveBayesQuery(benchmark::State& state) {
  NaiveBayesEvaluator ev(50000, 0.244, 0.85, 0.01);
  std::int64_t k = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ev.probability(k));
    k = k % 100000000 + 7;
  }
}
BENCHMARK(BM_NaiveBayesQuery);

static void BM_SimilarityEvaluate(benchmark::State& state) {
  SimilarityEvaluator ev(10000, 0.244, 0.85, 0.01);
  std::int64_t k = 1000;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ev.evaluate(k));
    k += 997;
  }
}
BENCHMARK(BM_SimilarityEvaluate)->Unit(benchmark::kMillisecond);

static void BM_SimulateNb(benchmark::State& state) {
  NaiveBayesParams params = nb_params(0.244, 0.85);
  for (auto _ : state) {
    benchmark::DoNotOptimize(simulate_nb(params, 200, 5, 0.05, state.range(0), 1));
  }
}
BENCHMARK(BM_SimulateNb)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);
