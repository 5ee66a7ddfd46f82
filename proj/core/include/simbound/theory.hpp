// Copyright (c) the simbound authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef SIMBOUND_THEORY_HPP
#define SIMBOUND_THEORY_HPP

#include <cstdint>
#include <optional>

namespace simbound {

// Closed-form evaluators for the covering-based guarantees. Values are the
// raw closed forms; callers interpret/clamp them as probabilities.

// Chernoff tail for i.i.d. variables on {-1, 0, 1} with masses p_neg1, p0,
// p1: bounds P(mean > p1 - p_neg1 + t) by exp(-(n t / 2) ln(1 + t / (2 p1))).
// p1 = 0 returns the continuity limit (0 for t > 0, 1 for t = 0).
double ternary_chernoff_tail(std::int64_t n, double p1, double p_neg1, double t);

// Two-term overfitting bound from a similarity cover of the query family:
// 2 * cover_size * exp(-n eps^2 / 2)
//   + 2 k * exp(-(n eps / 4) ln(1 + eps / (4 (1 - eta)))).
// eta = 1 takes the analytic limit (second term 0 for eps > 0).
double cover_tail_bound(std::int64_t n, std::int64_t k, std::int64_t cover_size,
                        double eta, double eps);

// Deviation guarantee holding with probability 1 - delta whenever eta is
// below the stated ceiling; nullopt when the ceiling is exceeded and the
// caller must use cover_tail_bound directly.
std::optional<double> cover_deviation_bound(std::int64_t n, std::int64_t k,
                                            std::int64_t cover_size, double eta,
                                            double delta);

// k-independent deviation rate: eps depends only on the cover size, and any
// family whose similarity reaches eta_threshold enjoys max deviation <= eps
// with probability 1 - delta.
struct RateThreshold {
  double eps = 0.0;
  double eta_threshold = 0.0;
};
RateThreshold cover_rate_threshold(std::int64_t n, std::int64_t k,
                                   std::int64_t cover_size, double delta);

// Budget for an adaptive analyst whose reachable query tree admits a small
// cover: deviation rate, the similarity that must hold at that rate, and
// the log of the admissible cover size.
struct AdaptiveRate {
  double eps = 0.0;
  double eta_required = 0.0;
  double cover_budget = 0.0;
};
AdaptiveRate adaptive_analyst_rate(std::int64_t n, std::int64_t k, double alpha,
                                   double delta);

}  // namespace simbound

#endif
