// Copyright (c) the simbound authors.
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <future>
#include <random>

#include "doctest.h"
#include "simbound/numerics.hpp"
#include "support/test_support.hpp"

using namespace simbound;

TEST_SUITE_BEGIN("numerics");

TEST_CASE("log_binom_coeff small exact values") {
  CHECK(log_binom_coeff(5, 0) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(log_binom_coeff(4, 2) ==
        doctest::Approx(1.791759469228055).epsilon(1e-13));
  CHECK(log_binom_coeff(0, 0) == doctest::Approx(0.0));
  CHECK_THROWS_AS(log_binom_coeff(4, 5), std::domain_error);
  CHECK_THROWS_AS(log_binom_coeff(-1, 0), std::domain_error);
  CHECK_THROWS_AS(log_binom_coeff(4, -1), std::domain_error);
}

TEST_CASE("log_binom_coeff matches the exact 150-digit integer") {
  // ln C(50000, 25000), frozen from an exact big-integer computation.
  const double reference = 34651.72334250241560221;
  CHECK(std::fabs(log_binom_coeff(50000, 25000) - reference) / reference <= 1e-13);
}

TEST_CASE("binom_cdf examples") {
  CHECK(binom_cdf({2, 0.5}, 1).prob() == doctest::Approx(0.75).epsilon(1e-14));
  // frozen from direct summation of the four pmf terms
  CHECK(binom_cdf({10, 0.3}, 3).prob() ==
        doctest::Approx(0.6496107184000000296).epsilon(1e-12));
  CHECK(binom_cdf({1, 0.7}, -1).prob() == 0.0);
  CHECK(binom_cdf({7, 0.2}, 7).prob() == 1.0);
  CHECK(binom_cdf({7, 0.2}, 12).prob() == 1.0);
  CHECK_THROWS_AS((binom_cdf({-2, 0.5}, 1)), std::domain_error);
  CHECK_THROWS_AS((binom_cdf({2, 1.5}, 1)), std::domain_error);
}

TEST_CASE("binom_sf examples") {
  CHECK(binom_sf({3, 0.5}, 0).prob() == 1.0);
  CHECK(binom_sf({10, 0.3}, 4).prob() ==
        doctest::Approx(0.3503892815999999704).epsilon(1e-12));
  CHECK(binom_sf({10, 0.0}, 1).prob() == 0.0);
  CHECK(binom_sf({10, 0.0}, 0).prob() == 1.0);
}

TEST_CASE("cdf matches exhaustive pmf summation for n <= 20") {
  for (int n = 1; n <= 20; ++n) {
    for (int pi = 1; pi <= 9; ++pi) {
      const double p = pi / 10.0;
      for (int m = 0; m < n; ++m) {
        const double expected =
            static_cast<double>(testing::cdf_by_summation(n, p, m));
        const double got = binom_cdf({n, p}, m).prob();
        CHECK(got == doctest::Approx(expected).epsilon(1e-14));
      }
    }
  }
}

TEST_CASE("complement identity on random specs") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const std::int64_t n = 1 + static_cast<std::int64_t>(
        std::pow(10.0, 5.0 * unit(rng)));
    const double p = unit(rng);
    const std::int64_t m = static_cast<std::int64_t>(unit(rng) * (n + 4)) - 2;
    BinomialSpec spec{n, p};
    const double total = binom_cdf(spec, m - 1).prob() + binom_sf(spec, m).prob();
    CHECK(std::fabs(total - 1.0) <= 1e-12);
  }
}

TEST_CASE("cdf is nondecreasing in m and two_sided nonincreasing in eps") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const std::int64_t n = 1 + static_cast<std::int64_t>(unit(rng) * 400);
    const double p = unit(rng);
    BinomialSpec spec{n, p};
    double prev = -1.0;
    for (std::int64_t m = -1; m <= n + 1; ++m) {
      const double c = binom_cdf(spec, m).prob();
      CHECK(c >= prev - 1e-15);
      prev = c;
    }
    double prev_tail = 2.0;
    for (double eps = 0.0; eps <= 1.05; eps += 0.05) {
      const double t = two_sided_dev_tail(n, p, eps).prob();
      CHECK(t <= prev_tail + 1e-15);
      prev_tail = t;
    }
  }
}

TEST_CASE("two_sided_dev_tail edge examples") {
  CHECK(two_sided_dev_tail(1, 0.5, 0.6).prob() == 0.0);
  CHECK(two_sided_dev_tail(1, 0.5, 0.4).prob() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(two_sided_dev_tail(10, 0.3, 0.0).prob() == 1.0);
  CHECK_THROWS_AS(two_sided_dev_tail(0, 0.5, 0.1), std::domain_error);
  CHECK_THROWS_AS(two_sided_dev_tail(5, 0.5, -0.1), std::domain_error);
}

TEST_CASE("two_sided_dev_tail at the benchmark point") {
  // frozen from a 50-digit computation at the exact double arguments
  const double reference = 1.942521488870297857146e-7;
  const double v = two_sided_dev_tail(50000, 0.244, 0.01).prob();
  CHECK(std::fabs(v - reference) / reference <= 1e-11);
  CHECK(static_cast<std::int64_t>(0.05 / v) == 257397);
}

TEST_CASE("deep tail keeps 1e-12 relative accuracy") {
  // log P(X >= 7280), X ~ Bin(50000, 0.1); frozen 50-digit value for the
  // exact double argument.
  const double reference_log = -518.0376071432639911674518;
  const double got = binom_sf({50000, 0.1}, 7280).log();
  CHECK(std::fabs(got - reference_log) <= 1e-12);
}

TEST_CASE("LogProb arithmetic") {
  LogProb a = LogProb::from_log(-800.0);
  LogProb b = LogProb::from_log(-800.0);
  CHECK((a + b).log() == doctest::Approx(-800.0 + std::log(2.0)).epsilon(1e-15));
  CHECK(LogProb::zero().is_zero());
  CHECK((LogProb::zero() + a).log() == a.log());
  CHECK(LogProb::one().complement().is_zero());
  CHECK(LogProb::zero().complement().log() == 0.0);
  // complement keeps precision at both ends
  LogProb tiny = LogProb::from_log(-1e-300);
  CHECK(tiny.complement().log() == doctest::Approx(std::log(1e-300)).epsilon(1e-12));
  LogProb small = LogProb::from_log(-700.0);
  CHECK(small.complement().log() == doctest::Approx(-std::exp(-700.0)).epsilon(1e-10));
  CHECK(LogProb::from_prob(0.25).prob() == doctest::Approx(0.25).epsilon(1e-15));
}

TEST_CASE("deviation count thresholds") {
  // raw double floor/ceil, shared by every evaluator
  CHECK(upper_dev_count(50000, 0.244, 0.01) == 12700);
  CHECK(lower_dev_count_strict(50000, 0.244, -0.01) == 11699);
  CHECK(upper_dev_count_strict(50000, 0.756, 0.01) == 38301);
  CHECK(lower_dev_count(12, 0.25, 0.05) == 3);
  CHECK(upper_dev_count(12, 0.3, 0.2) == 6);
}

TEST_CASE("bit-identical results across runs and threads") {
  auto compute = [] {
    return two_sided_dev_tail(50000, 0.244, 0.01).log() +
           binom_cdf({17600, 0.6926229508196722}, 12700).log() +
           log_binom_coeff(50000, 12345);
  };
  const double base = compute();
  CHECK(compute() == base);
  auto f1 = std::async(std::launch::async, compute);
  auto f2 = std::async(std::launch::async, compute);
  CHECK(f1.get() == base);
  CHECK(f2.get() == base);
}

TEST_SUITE_END();
