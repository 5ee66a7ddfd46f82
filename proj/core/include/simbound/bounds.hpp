// Copyright (c) the simbound authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef SIMBOUND_BOUNDS_HPP
#define SIMBOUND_BOUNDS_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "simbound/coupling.hpp"
#include "simbound/numerics.hpp"

namespace simbound {

// Symmetric hypothetical ensemble: k models sharing one population error
// rate and one pairwise similarity, evaluated on a test set of size n.
struct EnsembleSpec {
  std::int64_t n = 0;
  double mu = 0.0;
  double eta = 0.0;
  std::int64_t k = 1;

  // Throws std::domain_error / infeasible_error on bad fields. k = 0 is
  // accepted and treated as k = 1 by every evaluator.
  void validate() const;
};

enum class BoundMethod { standard, similarity, naive_bayes };

struct BoundResult {
  double probability = 0.0;        // certified upper bound on the overfitting probability
  BoundMethod method = BoundMethod::standard;
  double slack_t = 0.0;            // optimized slack (similarity method only; NaN otherwise)
  double truncation_error = 0.0;   // certified bound on neglected summation mass
  bool exact = false;              // true only for naive-bayes
  bool fell_back_to_standard = false;
};

struct JointTailResult {
  LogProb probability;
  double truncation_error = 0.0;
};

// P({E_S[q2] - p2 <= alpha2} and {E_S[q1] - p1 >= alpha1}) for a pair of
// queries with the given marginals and similarity, via the Bernoulli
// coupling and conditioning on the shared variable. Throws infeasible_error
// when the pair cannot be coupled (caller falls back to the per-pair union
// bound).
JointTailResult joint_tail(std::int64_t n, double p1, double p2, double eta,
                           double alpha1, double alpha2);

// min(1, k * two_sided_dev_tail(n, mu, eps)).
BoundResult standard_union_prob(const EnsembleSpec& spec, double eps);

// Refined union bound with the slack parameter optimized over [0, eps];
// never exceeds the standard bound. Falls back to the standard bound (with
// a flag) when the similarity is below the independence level.
BoundResult similarity_union_prob(const EnsembleSpec& spec, double eps);

// Exact overfitting probability under the shared-variable model.
BoundResult naive_bayes_prob(const EnsembleSpec& spec, double eps);

// Reusable evaluators: construction does the expensive per-(n,mu,eta,eps)
// work once; probability(k) is then cheap, which the planner's k-searches
// exploit. All evaluators are monotone in k.

class StandardEvaluator {
 public:
  StandardEvaluator(std::int64_t n, double mu, double eps);
  double probability(std::int64_t k) const;

 private:
  double tail_;
};

class NaiveBayesEvaluator {
 public:
  // Throws infeasible_error when (mu, eta) has no shared-variable model.
  NaiveBayesEvaluator(std::int64_t n, double mu, double eta, double eps);
  double probability(std::int64_t k) const;
  double truncation_error() const { return truncation_error_; }
  const NaiveBayesParams& params() const { return params_; }

 private:
  NaiveBayesParams params_;
  bool saturated_ = false;  // deviation band empty: probability is 1 for all k
  std::vector<double> weights_;     // window weights of the shared variable count
  std::vector<double> log_inner_;   // per-j log P(count stays in band)
  double truncation_error_ = 0.0;
};

class SimilarityEvaluator {
 public:
  struct Evaluation {
    double probability = 0.0;
    double slack_t = 0.0;
    double truncation_error = 0.0;
    bool fell_back = false;
  };

  SimilarityEvaluator(std::int64_t n, double mu, double eta, double eps);

  Evaluation evaluate(std::int64_t k) const;
  // Bound value at a forced slack (no optimization); exposed for validity
  // checks. Requires a coupling-feasible evaluator.
  double value_at(std::int64_t k, double t) const;
  bool coupling_feasible() const { return feasible_; }

 private:
  struct Components {
    double anchor = 0.0;  // both anchor tails
    double cross = 0.0;   // both per-pair cross terms
    double trunc = 0.0;
  };
  const Components& components(double t) const;

  std::int64_t n_;
  double mu_, eta_, eps_;
  bool feasible_ = true;
  double standard_tail_ = 0.0;
  CouplingParams coup_right_, coup_left_;
  mutable std::map<double, Components> memo_;
};

}  // namespace simbound

#endif
