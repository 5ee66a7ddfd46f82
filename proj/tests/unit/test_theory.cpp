// Copyright (c) the simbound authors.
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <random>

#include "doctest.h"
#include "simbound/bounds.hpp"
#include "simbound/theory.hpp"
#include "support/test_support.hpp"

using namespace simbound;

TEST_SUITE_BEGIN("theory");

TEST_CASE("ternary chernoff tail basics") {
  CHECK(ternary_chernoff_tail(100, 0.1, 0.1, 0.0) == 1.0);
  // exp(-10 ln 2) = 2^-10
  CHECK(ternary_chernoff_tail(100, 0.1, 0.1, 0.2) ==
        doctest::Approx(0.0009765625).epsilon(1e-13));
  CHECK(ternary_chernoff_tail(100, 0.0, 0.0, 0.1) == 0.0);
  CHECK(ternary_chernoff_tail(100, 0.0, 0.0, 0.0) == 1.0);
  CHECK_THROWS_AS(ternary_chernoff_tail(100, 0.6, 0.6, 0.1), std::domain_error);
  CHECK_THROWS_AS(ternary_chernoff_tail(100, 0.1, 0.1, -0.2), std::domain_error);
  CHECK_THROWS_AS(ternary_chernoff_tail(100, 0.0, 0.5, 0.2), std::domain_error);
}

TEST_CASE("ternary chernoff dominates the exhaustive trinomial tail") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 30; ++i) {
    const int n = 2 + static_cast<int>(unit(rng) * 13);
    const double p1 = 0.01 + 0.5 * unit(rng);
    const double pm = unit(rng) * std::min(0.9 - p1, 0.5);
    const double t = unit(rng) * (1.0 - (p1 - pm));
    if (p1 - pm + t / 2.0 < 0.0) continue;
    const double bound = ternary_chernoff_tail(n, p1, pm, t);
    const double exact = static_cast<double>(
        testing::trinomial_upper_tail(n, p1, pm, p1 - pm + t));
    CHECK(bound >= exact - 1e-12);
  }
}

TEST_CASE("ternary chernoff dominates a Monte-Carlo estimate at n = 50") {
  std::mt19937_64 rng(17);
  const int n = 50, trials = 1000000;
  const double p1 = 0.15, pm = 0.1, t = 0.12;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int hits = 0;
  for (int trial = 0; trial < trials; ++trial) {
    int sum = 0;
    for (int i = 0; i < n; ++i) {
      const double u = unit(rng);
      if (u < p1) {
        ++sum;
      } else if (u < p1 + pm) {
        --sum;
      }
    }
    if (static_cast<double>(sum) / n > p1 - pm + t) ++hits;
  }
  const double freq = static_cast<double>(hits) / trials;
  const double se = std::sqrt(freq * (1.0 - freq) / trials);
  CHECK(ternary_chernoff_tail(n, p1, pm, t) >= freq - 4.0 * se);
}

TEST_CASE("cover tail bound structure") {
  // eps = 0 collapses to 2 N + 2 k
  CHECK(cover_tail_bound(100, 7, 3, 0.5, 0.0) == doctest::Approx(2.0 * 3 + 2.0 * 7));
  CHECK(cover_tail_bound(100, 7, 3, 1.0, 0.0) == doctest::Approx(2.0 * 3 + 2.0 * 7));
  // eta = 1 removes the pair term
  const double at_one = cover_tail_bound(100, 7, 3, 1.0, 0.1);
  CHECK(at_one == doctest::Approx(6.0 * std::exp(-100 * 0.01 / 2.0)).epsilon(1e-12));
  // eta = 0 second term uses ln(1 + eps/4)
  const double at_zero = cover_tail_bound(100, 7, 7, 0.0, 0.1);
  const double expected = 14.0 * std::exp(-100 * 0.01 / 2.0) +
                          14.0 * std::exp(-(100 * 0.1 / 4.0) * std::log1p(0.1 / 4.0));
  CHECK(at_zero == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("cover tail bound dominates the exact shared-variable probability") {
  // the symmetric family covers itself with a single member, so any
  // cover_size >= 1 gives a valid (if loose) bound
  const double exact = naive_bayes_prob({50000, 0.244, 0.99, 1000000}, 0.01).probability;
  const double closed = cover_tail_bound(50000, 1000000, 100, 0.99, 0.01);
  CHECK(closed >= exact);
}

TEST_CASE("cover deviation bound example and gate") {
  auto eps = cover_deviation_bound(50000, 66, 10, 0.9, 0.05);
  REQUIRE(eps.has_value());
  const double first = std::sqrt(2.0 * std::log(4.0 * 10 / 0.05) / 50000.0);
  const double second = std::sqrt(32.0 * 0.1 * std::log(4.0 * 66 / 0.05) / 50000.0);
  CHECK(*eps == doctest::Approx(std::max(first, second)).epsilon(1e-12));
  CHECK(*eps == doctest::Approx(0.0234219).epsilon(1e-5));

  // similarity above the ceiling: not applicable
  CHECK(!cover_deviation_bound(100, 1000000, 10, 0.999, 0.05).has_value());

  // eta = 0 with cover_size = k reduces to the two classic sqrt terms
  auto flat = cover_deviation_bound(10000, 50, 50, 0.0, 0.05);
  REQUIRE(flat.has_value());
  const double a = std::sqrt(2.0 * std::log(4.0 * 50 / 0.05) / 10000.0);
  const double b = std::sqrt(32.0 * std::log(4.0 * 50 / 0.05) / 10000.0);
  CHECK(*flat == doctest::Approx(std::max(a, b)).epsilon(1e-12));
}

TEST_CASE("k-independent rate and threshold") {
  RateThreshold rt = cover_rate_threshold(10000, 10000, 1, 0.05);
  CHECK(rt.eps == doctest::Approx(std::sqrt(std::log(60.0) / 10000.0)).epsilon(1e-12));
  // large-n limit: with eps = sqrt(L/n), L = ln((2 cover_size + 1)/delta),
  // the exponent shrinks like 1/sqrt(n) and the threshold approaches
  // 1 - L / (8 (L + 2 ln(2k))).
  RateThreshold big = cover_rate_threshold(1000000000, 2, 1, 0.05);
  const double L = std::log(60.0);
  const double limit = 1.0 - L / (8.0 * (L + 2.0 * std::log(4.0)));
  CHECK(big.eta_threshold == doctest::Approx(limit).epsilon(1e-4));
}

TEST_CASE("adaptive analyst rate") {
  // alpha = 1: budget k^0 ln(n+1)
  AdaptiveRate a1 = adaptive_analyst_rate(10000, 100, 1.0, 0.05);
  CHECK(a1.eps == doctest::Approx(std::sqrt(
      4.0 * (std::log(10001.0) + std::log(40.0)) / 10000.0)).epsilon(1e-12));
  CHECK(a1.cover_budget == doctest::Approx(std::log(10001.0)).epsilon(1e-12));

  // alpha = 0 reproduces the trivial-mechanism rate sqrt(4(k ln(n+1)+ln(2/d))/n)
  AdaptiveRate a0 = adaptive_analyst_rate(10000, 100, 0.0, 0.05);
  CHECK(a0.eps == doctest::Approx(std::sqrt(
      4.0 * (100.0 * std::log(10001.0) + std::log(40.0)) / 10000.0)).epsilon(1e-12));

  // eps decreases in alpha, so alpha = 0 and alpha = 1 bracket the rest
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 50; ++i) {
    const std::int64_t n = 1000 + static_cast<std::int64_t>(unit(rng) * 100000);
    const std::int64_t k = 3 + static_cast<std::int64_t>(unit(rng) * 1000);
    const double alpha = unit(rng);
    const double lo = adaptive_analyst_rate(n, k, 1.0, 0.05).eps;
    const double hi = adaptive_analyst_rate(n, k, 0.0, 0.05).eps;
    const double mid = adaptive_analyst_rate(n, k, alpha, 0.05).eps;
    CHECK(mid >= lo - 1e-12);
    CHECK(mid <= hi + 1e-12);
  }
}

TEST_CASE("covering deviation rate keeps the exact probability under delta") {
  // small version of the full acceptance sweep
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int tested = 0;
  for (int i = 0; i < 200 && tested < 40; ++i) {
    const std::int64_t n = 1000 + static_cast<std::int64_t>(unit(rng) * 9000);
    const double mu = 0.05 + 0.4 * unit(rng);
    const std::int64_t k = 10 + static_cast<std::int64_t>(std::pow(10.0, 4.0 * unit(rng)));
    const std::int64_t cover_size = 1 + static_cast<std::int64_t>(unit(rng) * 30);
    const double delta = 0.05;
    const double indep = independence_similarity(mu, mu);
    auto gate = cover_deviation_bound(n, k, cover_size, indep, delta);
    if (!gate) continue;
    const double eta = indep + unit(rng) * (1.0 - indep);
    auto eps = cover_deviation_bound(n, k, cover_size, eta, delta);
    if (!eps) continue;
    ++tested;
    const double exact = naive_bayes_prob({n, mu, eta, k}, *eps).probability;
    CHECK(exact <= delta + 1e-10);
  }
  CHECK(tested >= 20);
}

TEST_SUITE_END();
