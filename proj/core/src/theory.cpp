// Copyright (c) the simbound authors.
// SPDX-License-Identifier: Apache-2.0

#include "simbound/theory.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace simbound {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::domain_error(msg);
}

}  // namespace

double ternary_chernoff_tail(std::int64_t n, double p1, double p_neg1, double t) {
  require(n >= 1, "n must be >= 1");
  require(p1 >= 0.0 && p_neg1 >= 0.0 && p1 + p_neg1 <= 1.0 + 1e-12,
          "p1, p_neg1 must be nonnegative with p1 + p_neg1 <= 1");
  require(t >= 0.0, "t must be >= 0");
  require(p1 - p_neg1 + t / 2.0 >= -1e-12, "requires p1 - p_neg1 + t/2 >= 0");
  if (t == 0.0) return 1.0;
  if (p1 == 0.0) return 0.0;
  return std::exp(-(static_cast<double>(n) * t / 2.0) * std::log1p(t / (2.0 * p1)));
}

double cover_tail_bound(std::int64_t n, std::int64_t k, std::int64_t cover_size,
                        double eta, double eps) {
  require(n >= 1 && k >= 1 && cover_size >= 1, "n, k, cover_size must be >= 1");
  require(eta >= 0.0 && eta <= 1.0, "eta must lie in [0,1]");
  require(eps >= 0.0, "eps must be >= 0");
  const double nd = static_cast<double>(n);
  const double first = 2.0 * static_cast<double>(cover_size) *
                       std::exp(-nd * eps * eps / 2.0);
  double second;
  if (eta >= 1.0) {
    second = eps > 0.0 ? 0.0 : 2.0 * static_cast<double>(k);
  } else {
    second = 2.0 * static_cast<double>(k) *
             std::exp(-(nd * eps / 4.0) * std::log1p(eps / (4.0 * (1.0 - eta))));
  }
  return first + second;
}

std::optional<double> cover_deviation_bound(std::int64_t n, std::int64_t k,
                                            std::int64_t cover_size, double eta,
                                            double delta) {
  require(n >= 1 && k >= 1 && cover_size >= 1, "n, k, cover_size must be >= 1");
  require(eta >= 0.0 && eta <= 1.0, "eta must lie in [0,1]");
  require(delta > 0.0 && delta < 1.0, "delta must lie in (0,1)");
  const double nd = static_cast<double>(n);
  const double log_k_term = std::log(4.0 * static_cast<double>(k) / delta);
  const double log_cover_term = std::log(4.0 * static_cast<double>(cover_size) / delta);
  const double ceiling =
      1.0 - std::max(2.0 * log_k_term / nd, std::sqrt(log_cover_term / (2.0 * nd)));
  if (eta > ceiling) return std::nullopt;
  return std::max(std::sqrt(2.0 * log_cover_term / nd),
                  std::sqrt(32.0 * (1.0 - eta) * log_k_term / nd));
}

RateThreshold cover_rate_threshold(std::int64_t n, std::int64_t k,
                                   std::int64_t cover_size, double delta) {
  require(n >= 1 && k >= 1 && cover_size >= 1, "n, k, cover_size must be >= 1");
  require(delta > 0.0 && delta < 1.0, "delta must lie in (0,1)");
  RateThreshold r;
  const double nd = static_cast<double>(n);
  r.eps = std::sqrt(std::log((2.0 * static_cast<double>(cover_size) + 1.0) / delta) / nd);
  const double growth =
      std::exp(2.0 * r.eps + 4.0 * std::log(2.0 * static_cast<double>(k)) / (nd * r.eps));
  r.eta_threshold = 1.0 - r.eps / (4.0 * (growth - 1.0));
  return r;
}

AdaptiveRate adaptive_analyst_rate(std::int64_t n, std::int64_t k, double alpha,
                                   double delta) {
  require(n >= 1 && k >= 1, "n, k must be >= 1");
  require(alpha >= 0.0 && alpha <= 1.0, "alpha must lie in [0,1]");
  require(delta > 0.0 && delta < 1.0, "delta must lie in (0,1)");
  AdaptiveRate r;
  const double nd = static_cast<double>(n);
  const double kd = static_cast<double>(k);
  r.cover_budget = std::pow(kd, 1.0 - alpha) * std::log(nd + 1.0);
  r.eps = std::sqrt(4.0 * (r.cover_budget + std::log(2.0 / delta)) / nd);
  const double growth = std::expm1(r.eps * std::pow(kd, alpha));
  r.eta_required = growth > 0.0 ? 1.0 - r.eps / (4.0 * growth) : 1.0;
  return r;
}

}  // namespace simbound
