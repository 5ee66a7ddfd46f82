// Copyright (c) the simbound authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef SIMBOUND_NUMERICS_HPP
#define SIMBOUND_NUMERICS_HPP

#include <cmath>
#include <cstdint>
#include <limits>

namespace simbound {

// A probability carried as its natural log; value in [-inf, 0] with -inf
// encoding exact zero. Sums happen in probability space through the
// log-sum-exp identity so nothing overflows or silently underflows.
class LogProb {
 public:
  constexpr LogProb() : log_(-std::numeric_limits<double>::infinity()) {}

  static constexpr LogProb zero() { return LogProb(); }
  static constexpr LogProb one() { return from_log(0.0); }
  static constexpr LogProb from_log(double log_value) { return LogProb(log_value); }
  static LogProb from_prob(double p);

  double log() const { return log_; }
  double prob() const;
  bool is_zero() const { return log_ == -std::numeric_limits<double>::infinity(); }

  // Probability-space sum.
  friend LogProb operator+(LogProb a, LogProb b);
  // Probability-space product.
  friend LogProb operator*(LogProb a, LogProb b);
  // 1 - p, accurate for p near both ends.
  LogProb complement() const;

  friend bool operator<(LogProb a, LogProb b) { return a.log_ < b.log_; }
  friend bool operator==(LogProb a, LogProb b) { return a.log_ == b.log_; }

 private:
  explicit constexpr LogProb(double log_value) : log_(log_value) {}
  double log_;
};

struct BinomialSpec {
  std::int64_t trials = 0;
  double success_prob = 0.0;

  // Throws std::domain_error on trials < 0 or success_prob outside [0,1].
  void validate() const;
};

// Neumaier variant of Kahan summation; deterministic for a fixed add order.
class NeumaierSum {
 public:
  void add(double x) {
    double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

// ln C(n, j) via double-double log-factorials; relative error <= 1e-13.
// Throws std::domain_error unless 0 <= j <= n.
double log_binom_coeff(std::int64_t n, std::int64_t j);

// P(X <= m) and P(X >= m) for X ~ Binomial(spec). The pair below shares a
// single incomplete-beta evaluation so that cdf(m) + sf(m+1) == 1 exactly.
LogProb binom_cdf(const BinomialSpec& spec, std::int64_t m);
LogProb binom_sf(const BinomialSpec& spec, std::int64_t m);

struct TailPair {
  LogProb cdf;  // P(X <= m)
  LogProb sf;   // P(X >= m + 1)
};
TailPair binom_tail_pair(const BinomialSpec& spec, std::int64_t m);

// Count thresholds for deviation events of an empirical mean over n trials.
// Floors/ceilings are taken on the raw double product n*(p+a); the two-sided
// event counts upper deviations weakly (>= a) and lower deviations strictly
// (< -a), the convention all bound evaluators and oracles in this project
// share.
std::int64_t upper_dev_count(std::int64_t n, double p, double a);         // min c with c/n - p >= a
std::int64_t upper_dev_count_strict(std::int64_t n, double p, double a);  // min c with c/n - p >  a
std::int64_t lower_dev_count(std::int64_t n, double p, double a);         // max c with c/n - p <= a
std::int64_t lower_dev_count_strict(std::int64_t n, double p, double a);  // max c with c/n - p <  a

// P(E_S - p >= eps or E_S - p < -eps) for the mean of n Bernoulli(p) draws.
LogProb two_sided_dev_tail(std::int64_t n, double p, double eps);

}  // namespace simbound

#endif
