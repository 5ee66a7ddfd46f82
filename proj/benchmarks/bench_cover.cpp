// Copyright (c) the simbound authors.
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <random>

#include "simbound/cover.hpp"
#include "simbound/dataio.hpp"

using namespace simbound;

namespace {

PredictionMatrix make_matrix(std::size_t models, std::size_t examples) {
  std::mt19937_64 rng(1234);
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < models; ++i) ids.push_back("m" + std::to_string(i));
  PredictionMatrix m(std::move(ids), examples);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (std::size_t c = 0; c < models; ++c) {
    const double bias = 0.1 + 0.3 * unit(rng);
    for (std::size_t r = 0; r < examples; ++r) {
      if (unit(rng) < bias) m.set_mistake(r, c, true);
    }
  }
  return m;
}

}  // namespace

static void BM_GreedyCover(benchmark::State& state) {
  PredictionMatrix m = make_matrix(state.range(0), 2000);
  for (auto _ : state) {
    benchmark::DoNotOptimize(greedy_cover(m, 0.8));
  }
}
BENCHMARK(BM_GreedyCover)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

static void BM_AgreementCounts(benchmark::State& state) {
  PredictionMatrix m = make_matrix(100, state.range(0));
  for (auto _ : state) {
    std::int64_t total = 0;
    for (std::size_t i = 0; i < m.n_models(); ++i) {
      for (std::size_t j = i + 1; j < m.n_models(); ++j) {
        total += m.agree_count(i, j);
      }
    }
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_AgreementCounts)->Arg(10000)->Arg(50000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
