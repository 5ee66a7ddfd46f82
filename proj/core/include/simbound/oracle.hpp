// Copyright (c) the simbound authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef SIMBOUND_ORACLE_HPP
#define SIMBOUND_ORACLE_HPP

#include <cstdint>

#include "simbound/coupling.hpp"

namespace simbound {

// Counter-based generator (squares construction): the stream for a given
// (seed, stream) pair is a pure function of the counter, so parallel
// simulations reproduce bit-identically regardless of scheduling.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream);
  std::uint32_t next_u32();
  // Uniform in [0, 1) with 32-bit resolution.
  double next_unit();
  bool bernoulli(double p) { return next_unit() < p; }

 private:
  std::uint64_t key_;
  std::uint64_t ctr_ = 0;
};

// Exact P({count2 <= m2} and {count1 >= m1}) for n draws from the pairwise
// joint law, by dynamic programming over the (count1, count2) lattice.
// O(n^3); intended for n <= ~64. Thresholds are derived from the deviations
// exactly as the bound evaluators derive them.
double enumerate_joint_tail(std::int64_t n, const PairwiseJoint& joint,
                            double alpha1, double alpha2);
double enumerate_joint_tail_counts(std::int64_t n, const PairwiseJoint& joint,
                                   std::int64_t m1, std::int64_t m2);

// Exact overfitting probability of the shared-variable model by dynamic
// programming over the joint count lattice of all k models. O(n^(k+1));
// intended for n <= 14, k <= 3.
double enumerate_nb_overfit(std::int64_t n, std::int64_t k,
                            const NaiveBayesParams& params, double eps);

struct SimEstimate {
  double frequency = 0.0;
  double std_error = 0.0;
  std::int64_t hits = 0;
  std::int64_t trials = 0;
};

// Monte-Carlo frequency of the overfitting event max_i |mean_i - mu| >= eps
// under the shared-variable generative model.
SimEstimate simulate_nb(const NaiveBayesParams& params, std::int64_t n,
                        std::int64_t k, double eps, std::int64_t trials,
                        std::uint64_t seed);

struct PairEstimate {
  double p1_hat = 0.0;
  double p2_hat = 0.0;
  double eta_hat = 0.0;
  double tail_frequency = 0.0;
  double se_p1 = 0.0;
  double se_p2 = 0.0;
  double se_eta = 0.0;
  double se_tail = 0.0;
  std::int64_t trials = 0;
};

// Monte-Carlo moments of the coupled pair (X1 W, X2 W) plus the frequency
// of the joint tail event at deviations (alpha1, alpha2).
PairEstimate simulate_pair(const CouplingParams& coupling, std::int64_t n,
                           double alpha1, double alpha2, std::int64_t trials,
                           std::uint64_t seed);

}  // namespace simbound

#endif
