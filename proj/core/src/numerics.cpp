// Copyright (c) the simbound authors.
// SPDX-License-Identifier: Apache-2.0

#include "simbound/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "simbound/ddouble.hpp"

namespace simbound {

LogProb LogProb::from_prob(double p) {
  if (p <= 0.0) return zero();
  if (p >= 1.0) return one();
  return from_log(std::log(p));
}

double LogProb::prob() const {
  if (is_zero()) return 0.0;
  return std::exp(log_);
}

LogProb operator+(LogProb a, LogProb b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  double hi = std::max(a.log_, b.log_);
  double lo = std::min(a.log_, b.log_);
  double r = hi + std::log1p(std::exp(lo - hi));
  // Disjoint-event sums may land a hair above log(1) through rounding.
  if (r > 0.0 && r < 1e-12) r = 0.0;
  return LogProb::from_log(r);
}

LogProb operator*(LogProb a, LogProb b) {
  if (a.is_zero() || b.is_zero()) return LogProb::zero();
  return LogProb::from_log(a.log_ + b.log_);
}

LogProb LogProb::complement() const {
  if (is_zero()) return one();
  if (log_ >= 0.0) return zero();
  return from_log(std::log(-std::expm1(log_)));
}

void BinomialSpec::validate() const {
  if (trials < 0) throw std::domain_error("binomial trials must be >= 0");
  if (!(success_prob >= 0.0 && success_prob <= 1.0)) {
    throw std::domain_error("binomial success probability must lie in [0,1]");
  }
}

double log_binom_coeff(std::int64_t n, std::int64_t j) {
  if (n < 0 || j < 0 || j > n) {
    throw std::domain_error("log_binom_coeff requires 0 <= j <= n");
  }
  return (dd_log_factorial(n) - dd_log_factorial(j) - dd_log_factorial(n - j))
      .to_double();
}

namespace {

// log-pmf with the Bernoulli log odds carried in double-double form; the
// exponents reach 1e4..1e6, so plain-double logs of p and 1-p would cost
// ~1e-12 of absolute log accuracy.
double log_pmf(std::int64_t n, const DDouble& log_p, const DDouble& log_q,
               std::int64_t x) {
  DDouble r = dd_log_factorial(n) - dd_log_factorial(x) - dd_log_factorial(n - x);
  r = r + log_p * static_cast<double>(x) + log_q * static_cast<double>(n - x);
  return r.to_double();
}

// log of x^a (1-x)^b / (a B(a,b)), the incomplete-beta front factor.
// a, b are positive integers here, so B(a,b) reduces to factorials.
double ibeta_log_front(std::int64_t a, std::int64_t b, const DDouble& log_x,
                       const DDouble& log_1mx) {
  DDouble ln_beta = dd_log_factorial(a - 1) + dd_log_factorial(b - 1) -
                    dd_log_factorial(a + b - 1);
  DDouble r = log_x * static_cast<double>(a) + log_1mx * static_cast<double>(b) -
              ln_beta - dd_log(static_cast<double>(a));
  return r.to_double();
}

// Modified Lentz evaluation of the incomplete-beta continued fraction.
// Iterates until successive convergents agree to 1e-15 relative, capped at
// 1e4 rounds; returns false when the cap is hit so the caller can fall back
// to direct summation.
bool ibeta_cf(double a, double b, double x, double& f_minus_one) {
  constexpr double kTiny = 1e-300;
  constexpr double kTol = 1e-15;
  constexpr int kMaxIter = 10000;

  double f = 1.0, c = 1.0, d = 0.0;
  int settled = 0;  // a lone tiny step can be a spurious crossing
  for (int i = 0; i <= kMaxIter; ++i) {
    double m = static_cast<double>(i / 2);
    double num;
    if (i == 0) {
      num = 1.0;
    } else if (i % 2 == 1) {
      num = -((a + m) * (a + b + m) * x) / ((a + 2.0 * m) * (a + 2.0 * m + 1.0));
    } else {
      num = (m * (b - m) * x) / ((a + 2.0 * m - 1.0) * (a + 2.0 * m));
    }
    d = 1.0 + num * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    d = 1.0 / d;
    c = 1.0 + num / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    double cd = c * d;
    f *= cd;
    if (i > 0 && std::fabs(1.0 - cd) < kTol) {
      if (++settled >= 2) {
        f_minus_one = f - 1.0;
        return true;
      }
    } else {
      settled = 0;
    }
  }
  return false;
}

// log P(lo <= X <= hi) summed directly in log space, iterating from the
// largest term at `start` outward in direction `step`.
double log_tail_by_summation(std::int64_t n, double p, std::int64_t start,
                             std::int64_t lo, std::int64_t hi, std::int64_t step) {
  const DDouble log_p = dd_log(p);
  const DDouble log_q = dd_log1p(-p);
  double peak = log_pmf(n, log_p, log_q, start);
  NeumaierSum sum;
  for (std::int64_t x = start; x >= lo && x <= hi; x += step) {
    double lt = log_pmf(n, log_p, log_q, x);
    sum.add(std::exp(lt - peak));
    if (lt < peak - 60.0) break;  // remaining terms keep decaying geometrically
  }
  return peak + std::log(sum.value());
}

// log P(X <= m), evaluated on the continued-fraction-friendly side only
// (the caller picks the side).
double log_left_tail(std::int64_t n, double p, std::int64_t m) {
  if (n <= 64) return log_tail_by_summation(n, p, m, 0, m, -1);
  double fm1;
  std::int64_t a = n - m, b = m + 1;
  if (ibeta_cf(static_cast<double>(a), static_cast<double>(b), 1.0 - p, fm1) &&
      fm1 > 0.0) {
    return ibeta_log_front(a, b, dd_log1p(-p), dd_log(p)) + std::log(fm1);
  }
  return log_tail_by_summation(n, p, m, 0, m, -1);
}

// log P(X >= m).
double log_right_tail(std::int64_t n, double p, std::int64_t m) {
  if (n <= 64) return log_tail_by_summation(n, p, m, m, n, +1);
  double fm1;
  std::int64_t a = m, b = n - m + 1;
  if (ibeta_cf(static_cast<double>(a), static_cast<double>(b), p, fm1) &&
      fm1 > 0.0) {
    return ibeta_log_front(a, b, dd_log(p), dd_log1p(-p)) + std::log(fm1);
  }
  return log_tail_by_summation(n, p, m, m, n, +1);
}

}  // namespace

TailPair binom_tail_pair(const BinomialSpec& spec, std::int64_t m) {
  spec.validate();
  const std::int64_t n = spec.trials;
  const double p = spec.success_prob;
  if (m < 0) return {LogProb::zero(), LogProb::one()};
  if (m >= n) return {LogProb::one(), LogProb::zero()};
  if (p <= 0.0) return {LogProb::one(), LogProb::zero()};
  if (p >= 1.0) return {LogProb::zero(), LogProb::one()};

  // Evaluate whichever side sits in the continued fraction's convergence
  // region (x < (a+1)/(a+b+2)); that side is never close to 1, so the other
  // side comes out of the complement without cancellation.
  const bool left_direct =
      (1.0 - p) < static_cast<double>(n - m + 1) / static_cast<double>(n + 3);
  double log_small = left_direct ? log_left_tail(n, p, m)
                                 : log_right_tail(n, p, m + 1);
  if (log_small > 0.0) log_small = 0.0;
  LogProb small = LogProb::from_log(log_small);
  LogProb big = small.complement();
  if (left_direct) return {small, big};
  return {big, small};
}

LogProb binom_cdf(const BinomialSpec& spec, std::int64_t m) {
  return binom_tail_pair(spec, m).cdf;
}

LogProb binom_sf(const BinomialSpec& spec, std::int64_t m) {
  if (m <= 0) {
    spec.validate();
    return LogProb::one();
  }
  return binom_tail_pair(spec, m - 1).sf;
}

std::int64_t upper_dev_count(std::int64_t n, double p, double a) {
  return static_cast<std::int64_t>(std::ceil(static_cast<double>(n) * (p + a)));
}

std::int64_t upper_dev_count_strict(std::int64_t n, double p, double a) {
  return static_cast<std::int64_t>(std::floor(static_cast<double>(n) * (p + a))) + 1;
}

std::int64_t lower_dev_count(std::int64_t n, double p, double a) {
  return static_cast<std::int64_t>(std::floor(static_cast<double>(n) * (p + a)));
}

std::int64_t lower_dev_count_strict(std::int64_t n, double p, double a) {
  return static_cast<std::int64_t>(std::ceil(static_cast<double>(n) * (p + a))) - 1;
}

LogProb two_sided_dev_tail(std::int64_t n, double p, double eps) {
  if (n < 1) throw std::domain_error("two_sided_dev_tail requires n >= 1");
  if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("p must lie in [0,1]");
  if (!(eps >= 0.0)) throw std::domain_error("eps must be >= 0");

  const std::int64_t m_up = upper_dev_count(n, p, eps);
  const std::int64_t m_lo = lower_dev_count_strict(n, p, -eps);
  if (m_up <= m_lo + 1) return LogProb::one();  // every count deviates

  BinomialSpec spec{n, p};
  LogProb upper = binom_tail_pair(spec, m_up - 1).sf;
  LogProb lower = binom_tail_pair(spec, m_lo).cdf;
  return upper + lower;  // disjoint by the check above
}

}  // namespace simbound
