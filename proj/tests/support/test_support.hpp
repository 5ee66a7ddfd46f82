// Copyright (c) the simbound authors.
// SPDX-License-Identifier: Apache-2.0
//
// Test-only oracles and fixtures. These deliberately avoid the library's
// own computation paths: combinations come from Pascal's triangle, powers
// from long double exponentiation, covers from exhaustive subset search.

#ifndef SIMBOUND_TESTS_SUPPORT_HPP
#define SIMBOUND_TESTS_SUPPORT_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "simbound/dataio.hpp"

namespace simbound::testing {

// Exact binomial coefficients for small n.
inline long double comb_ld(int n, int k) {
  if (k < 0 || k > n) return 0.0L;
  std::vector<long double> row(n + 1, 0.0L);
  row[0] = 1.0L;
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j >= 1; --j) row[j] += row[j - 1];
  }
  return row[k];
}

// P(X <= m) for X ~ Binomial(n, p) by direct summation; n small.
inline long double cdf_by_summation(int n, double p, int m) {
  if (m < 0) return 0.0L;
  long double total = 0.0L;
  const long double lp = static_cast<long double>(p);
  for (int x = 0; x <= std::min(m, n); ++x) {
    total += comb_ld(n, x) * std::pow(lp, x) * std::pow(1.0L - lp, n - x);
  }
  return total;
}

// P(mean of n {-1,0,1} draws > threshold) by exhaustive trinomial sums.
inline long double trinomial_upper_tail(int n, double p1, double p_neg1,
                                        double threshold) {
  const long double lp1 = p1, lpm = p_neg1, lp0 = 1.0L - lp1 - lpm;
  long double total = 0.0L;
  for (int a = 0; a <= n; ++a) {          // count of +1
    for (int c = 0; c + a <= n; ++c) {    // count of -1
      const int b = n - a - c;
      if ((static_cast<double>(a) - c) / n > threshold) {
        total += comb_ld(n, a) * comb_ld(n - a, c) * std::pow(lp1, a) *
                 std::pow(lpm, c) * std::pow(lp0, b);
      }
    }
  }
  return total;
}

// Uniform random mistake matrix with per-model error biases.
inline PredictionMatrix random_matrix(std::mt19937_64& rng, std::size_t n_models,
                                      std::size_t n_examples) {
  std::vector<std::string> ids;
  ids.reserve(n_models);
  for (std::size_t i = 0; i < n_models; ++i) ids.push_back("m" + std::to_string(i));
  PredictionMatrix m(std::move(ids), n_examples);
  std::uniform_real_distribution<double> bias(0.05, 0.6);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (std::size_t c = 0; c < n_models; ++c) {
    const double b = bias(rng);
    for (std::size_t r = 0; r < n_examples; ++r) {
      if (unit(rng) < b) m.set_mistake(r, c, true);
    }
  }
  return m;
}

// Size of the smallest valid similarity cover, by subset enumeration.
// Usable for up to ~15 models.
inline std::size_t exhaustive_min_cover(const PredictionMatrix& matrix, double eta) {
  const std::size_t m = matrix.n_models();
  const std::int64_t threshold = static_cast<std::int64_t>(
      std::ceil(eta * static_cast<double>(matrix.n_examples())));
  std::vector<std::int64_t> err(m);
  std::vector<char> sim_ok(m * m);
  for (std::size_t i = 0; i < m; ++i) err[i] = matrix.mistake_count(i);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      sim_ok[i * m + j] = matrix.agree_count(i, j) >= threshold;
    }
  }

  auto valid = [&](std::uint32_t subset) {
    for (std::size_t q = 0; q < m; ++q) {
      bool below = false, above = false;
      for (std::size_t c = 0; c < m; ++c) {
        if (!((subset >> c) & 1u) || !sim_ok[c * m + q]) continue;
        if (err[c] <= err[q]) below = true;
        if (err[c] >= err[q]) above = true;
      }
      if (!below || !above) return false;
    }
    return true;
  };

  std::size_t best = m;  // the full set is always valid
  for (std::uint32_t subset = 1; subset < (1u << m); ++subset) {
    const std::size_t size = static_cast<std::size_t>(__builtin_popcount(subset));
    if (size < best && valid(subset)) best = size;
  }
  return best;
}

}  // namespace simbound::testing

#endif
