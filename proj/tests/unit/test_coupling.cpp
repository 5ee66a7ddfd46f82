// Copyright (c) the simbound authors.
// SPDX-License-Identifier: Apache-2.0

#include <cmath>

#include "doctest.h"
#include "simbound/coupling.hpp"
#include "simbound/errors.hpp"
#include "simbound/oracle.hpp"

using namespace simbound;

TEST_SUITE_BEGIN("coupling");

TEST_CASE("joint_from_marginals on the benchmark pair") {
  PairwiseJoint j = joint_from_marginals(0.244, 0.244, 0.85);
  CHECK(j.p11 == doctest::Approx(0.169).epsilon(1e-12));
  CHECK(j.p10 == doctest::Approx(0.075).epsilon(1e-12));
  CHECK(j.p01 == doctest::Approx(0.075).epsilon(1e-12));
  CHECK(j.p00 == doctest::Approx(0.681).epsilon(1e-12));
  CHECK(j.p11 + j.p10 + j.p01 + j.p00 == doctest::Approx(1.0).epsilon(1e-15));
  // marginals and agreement recovered
  CHECK(j.p10 + j.p11 == doctest::Approx(0.244).epsilon(1e-15));
  CHECK(j.p01 + j.p11 == doctest::Approx(0.244).epsilon(1e-15));
  CHECK(j.p00 + j.p11 == doctest::Approx(0.85).epsilon(1e-15));
}

TEST_CASE("identical queries and infeasible triples") {
  PairwiseJoint j = joint_from_marginals(0.3, 0.3, 1.0);
  CHECK(j.p11 == doctest::Approx(0.3).epsilon(1e-15));
  CHECK(j.p00 == doctest::Approx(0.7).epsilon(1e-15));
  CHECK(j.p10 == 0.0);
  CHECK(j.p01 == 0.0);
  CHECK_THROWS_AS(joint_from_marginals(0.9, 0.1, 0.9), infeasible_error);
  CHECK_THROWS_AS(joint_from_marginals(1.2, 0.1, 0.9), infeasible_error);
}

TEST_CASE("feasibility frontier on a parameter grid") {
  for (int i = 0; i <= 20; ++i) {
    for (int j = 0; j <= 20; ++j) {
      for (int e = 0; e <= 20; ++e) {
        const double p1 = i / 20.0, p2 = j / 20.0, eta = e / 20.0;
        const bool expected = std::fabs(p1 - p2) <= 1.0 - eta + 1e-9 &&
                              p1 + p2 + eta >= 1.0 - 1e-9 &&
                              p1 + p2 <= 1.0 + eta + 1e-9;
        CHECK(feasible_triple(p1, p2, eta) == expected);
        bool constructed = true;
        try {
          joint_from_marginals(p1, p2, eta);
        } catch (const infeasible_error&) {
          constructed = false;
        }
        CHECK(constructed == expected);
      }
    }
  }
}

TEST_CASE("factorize on the benchmark pair") {
  CouplingParams c = factorize(joint_from_marginals(0.244, 0.244, 0.85));
  CHECK(c.px1 == doctest::Approx(0.169 / 0.244).epsilon(1e-12));
  CHECK(c.px2 == doctest::Approx(0.169 / 0.244).epsilon(1e-12));
  CHECK(c.pw == doctest::Approx(0.244 * 0.244 / 0.169).epsilon(1e-12));
  // moment invariants
  CHECK(c.px1 * c.pw == doctest::Approx(0.244).epsilon(1e-12));
  CHECK(c.px2 * c.pw == doctest::Approx(0.244).epsilon(1e-12));
  CHECK(c.px1 * c.px2 * c.pw == doctest::Approx(0.169).epsilon(1e-12));
}

TEST_CASE("factorize special cases") {
  // independence: pw = 1
  const double p1 = 0.3, p2 = 0.2;
  CouplingParams c = factorize(joint_from_marginals(p1, p2, independence_similarity(p1, p2)));
  CHECK(c.pw == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(c.px1 == doctest::Approx(p1).epsilon(1e-12));
  CHECK(c.px2 == doctest::Approx(p2).epsilon(1e-12));

  // identical queries: px = 1, pw = p
  CouplingParams ident = factorize(joint_from_marginals(0.4, 0.4, 1.0));
  CHECK(ident.px1 == doctest::Approx(1.0));
  CHECK(ident.px2 == doctest::Approx(1.0));
  CHECK(ident.pw == doctest::Approx(0.4).epsilon(1e-12));

  // negatively correlated errors cannot be coupled
  PairwiseJoint neg = joint_from_marginals(0.4, 0.4, independence_similarity(0.4, 0.4) - 0.05);
  CHECK_THROWS_AS(factorize(neg), infeasible_error);
  CHECK(!factorizable(neg));
}

TEST_CASE("nb_params solves the two moment equations") {
  NaiveBayesParams p = nb_params(0.244, 0.85);
  CHECK(p.px == doctest::Approx(1.0 - 0.15 / 0.488).epsilon(1e-12));
  CHECK(p.px * p.pw == doctest::Approx(0.244).epsilon(1e-12));
  CHECK(1.0 - 2.0 * p.pw * p.px * (1.0 - p.px) == doctest::Approx(0.85).epsilon(1e-12));

  NaiveBayesParams ident = nb_params(0.37, 1.0);
  CHECK(ident.px == doctest::Approx(1.0));
  CHECK(ident.pw == doctest::Approx(0.37).epsilon(1e-12));

  const double boundary = independence_similarity(0.244, 0.244);
  NaiveBayesParams ind = nb_params(0.244, boundary);
  CHECK(ind.px == doctest::Approx(0.244).epsilon(1e-12));
  CHECK(ind.pw == doctest::Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS(nb_params(0.244, boundary - 0.01), infeasible_error);
  CHECK_THROWS_AS(nb_params(0.0, 0.9), infeasible_error);
  CHECK(nb_feasible(0.244, 0.85));
  CHECK(!nb_feasible(0.244, 0.3));
}

TEST_CASE("nb_params agrees with the symmetric factorization") {
  for (double mu : {0.05, 0.244, 0.4, 0.6}) {
    const double lo = independence_similarity(mu, mu);
    for (double frac : {0.0, 0.3, 0.7, 1.0}) {
      const double eta = lo + frac * (1.0 - lo);
      NaiveBayesParams nb = nb_params(mu, eta);
      CouplingParams c = factorize(joint_from_marginals(mu, mu, eta));
      CHECK(nb.px == doctest::Approx(c.px1).epsilon(1e-12));
      CHECK(nb.px == doctest::Approx(c.px2).epsilon(1e-12));
      CHECK(nb.pw == doctest::Approx(c.pw).epsilon(1e-12));
    }
  }
}

TEST_CASE("sampling the coupling reproduces the triple") {
  // 1e6 coupled pairs; moments within 4 Monte-Carlo standard errors
  const double p1 = 0.244, p2 = 0.244, eta = 0.85;
  CouplingParams c = factorize(joint_from_marginals(p1, p2, eta));
  PairEstimate est = simulate_pair(c, 1, 0.5, 0.5, 1000000, 20190615);
  CHECK(std::fabs(est.p1_hat - p1) <= 4.0 * est.se_p1);
  CHECK(std::fabs(est.p2_hat - p2) <= 4.0 * est.se_p2);
  CHECK(std::fabs(est.eta_hat - eta) <= 4.0 * est.se_eta);
}

TEST_SUITE_END();
