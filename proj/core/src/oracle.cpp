// Copyright (c) the simbound authors.
// SPDX-License-Identifier: Apache-2.0

#include "simbound/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

#include "simbound/numerics.hpp"

namespace simbound {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint32_t squares32(std::uint64_t ctr, std::uint64_t key) {
  std::uint64_t x, y, z;
  y = x = ctr * key;
  z = y + key;
  x = x * x + y;
  x = (x >> 32) | (x << 32);
  x = x * x + z;
  x = (x >> 32) | (x << 32);
  x = x * x + y;
  x = (x >> 32) | (x << 32);
  return static_cast<std::uint32_t>((x * x + z) >> 32);
}

}  // namespace

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream)
    : key_(splitmix64(seed ^ splitmix64(stream)) | 1ULL) {}

std::uint32_t CounterRng::next_u32() { return squares32(ctr_++, key_); }

double CounterRng::next_unit() {
  return static_cast<double>(next_u32()) * 0x1.0p-32;
}

double enumerate_joint_tail_counts(std::int64_t n, const PairwiseJoint& joint,
                                   std::int64_t m1, std::int64_t m2) {
  if (n < 1 || n > 64) throw std::domain_error("enumeration supports 1 <= n <= 64");
  const std::size_t dim = static_cast<std::size_t>(n) + 1;
  std::vector<double> cur(dim * dim, 0.0), next(dim * dim, 0.0);
  cur[0] = 1.0;
  for (std::int64_t i = 0; i < n; ++i) {
    std::fill(next.begin(), next.end(), 0.0);
    for (std::int64_t c1 = 0; c1 <= i; ++c1) {
      for (std::int64_t c2 = 0; c2 <= i; ++c2) {
        const double pr = cur[c1 * dim + c2];
        if (pr == 0.0) continue;
        next[(c1 + 1) * dim + (c2 + 1)] += pr * joint.p11;
        next[(c1 + 1) * dim + c2] += pr * joint.p10;
        next[c1 * dim + (c2 + 1)] += pr * joint.p01;
        next[c1 * dim + c2] += pr * joint.p00;
      }
    }
    cur.swap(next);
  }
  double total = 0.0;
  for (std::int64_t c1 = std::max<std::int64_t>(m1, 0); c1 <= n; ++c1) {
    for (std::int64_t c2 = 0; c2 <= std::min(m2, n); ++c2) {
      total += cur[c1 * dim + c2];
    }
  }
  return total;
}

double enumerate_joint_tail(std::int64_t n, const PairwiseJoint& joint,
                            double alpha1, double alpha2) {
  return enumerate_joint_tail_counts(n, joint,
                                     upper_dev_count(n, joint.p1, alpha1),
                                     lower_dev_count(n, joint.p2, alpha2));
}

double enumerate_nb_overfit(std::int64_t n, std::int64_t k,
                            const NaiveBayesParams& params, double eps) {
  if (n < 1 || n > 14) throw std::domain_error("enumeration supports 1 <= n <= 14");
  if (k < 1 || k > 3) throw std::domain_error("enumeration supports 1 <= k <= 3");

  const std::size_t dim = static_cast<std::size_t>(n) + 1;
  std::size_t states = 1;
  for (std::int64_t i = 0; i < k; ++i) states *= dim;

  std::vector<double> cur(states, 0.0), next(states, 0.0);
  cur[0] = 1.0;
  const std::int64_t combos = std::int64_t{1} << k;
  std::vector<double> combo_prob(combos);
  std::vector<std::size_t> combo_step(combos);
  for (std::int64_t c = 0; c < combos; ++c) {
    double pr = params.pw;
    std::size_t step = 0;
    std::size_t stride = 1;
    for (std::int64_t l = 0; l < k; ++l) {
      if ((c >> l) & 1) {
        pr *= params.px;
        step += stride;
      } else {
        pr *= 1.0 - params.px;
      }
      stride *= dim;
    }
    combo_prob[c] = pr;
    combo_step[c] = step;
  }

  for (std::int64_t i = 0; i < n; ++i) {
    std::fill(next.begin(), next.end(), 0.0);
    for (std::size_t s = 0; s < states; ++s) {
      const double pr = cur[s];
      if (pr == 0.0) continue;
      next[s] += pr * (1.0 - params.pw);
      for (std::int64_t c = 0; c < combos; ++c) {
        next[s + combo_step[c]] += pr * combo_prob[c];
      }
    }
    cur.swap(next);
  }

  const std::int64_t m_up = upper_dev_count(n, params.mu, eps);
  const std::int64_t m_lo = lower_dev_count_strict(n, params.mu, -eps);
  double total = 0.0;
  for (std::size_t s = 0; s < states; ++s) {
    std::size_t rest = s;
    bool overfit = false;
    for (std::int64_t l = 0; l < k; ++l) {
      const std::int64_t c = static_cast<std::int64_t>(rest % dim);
      rest /= dim;
      if (c >= m_up || c <= m_lo) {
        overfit = true;
        break;
      }
    }
    if (overfit) total += cur[s];
  }
  return total;
}

namespace {

template <typename TrialFn>
void run_sharded(std::int64_t trials, TrialFn&& per_shard) {
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const std::int64_t n_shards = std::min<std::int64_t>(trials, 64);
  const unsigned n_threads = static_cast<unsigned>(
      std::min<std::int64_t>(hw, n_shards));
  std::vector<std::thread> workers;
  workers.reserve(n_threads);
  for (unsigned t = 0; t < n_threads; ++t) {
    workers.emplace_back([&, t] {
      for (std::int64_t shard = t; shard < n_shards; shard += n_threads) {
        const std::int64_t begin = trials * shard / n_shards;
        const std::int64_t end = trials * (shard + 1) / n_shards;
        per_shard(shard, begin, end);
      }
    });
  }
  for (auto& w : workers) w.join();
}

}  // namespace

SimEstimate simulate_nb(const NaiveBayesParams& params, std::int64_t n,
                        std::int64_t k, double eps, std::int64_t trials,
                        std::uint64_t seed) {
  if (n < 1 || k < 1 || trials < 1) {
    throw std::domain_error("simulate_nb requires n, k, trials >= 1");
  }
  const std::int64_t m_up = upper_dev_count(n, params.mu, eps);
  const std::int64_t m_lo = lower_dev_count_strict(n, params.mu, -eps);

  std::vector<std::int64_t> shard_hits(64, 0);
  run_sharded(trials, [&](std::int64_t shard, std::int64_t begin, std::int64_t end) {
    std::int64_t hits = 0;
    std::vector<std::int64_t> counts(k);
    for (std::int64_t trial = begin; trial < end; ++trial) {
      CounterRng rng(seed, static_cast<std::uint64_t>(trial));
      std::fill(counts.begin(), counts.end(), 0);
      for (std::int64_t i = 0; i < n; ++i) {
        if (rng.bernoulli(params.pw)) {
          for (std::int64_t l = 0; l < k; ++l) {
            counts[l] += rng.bernoulli(params.px) ? 1 : 0;
          }
        }
      }
      for (std::int64_t l = 0; l < k; ++l) {
        if (counts[l] >= m_up || counts[l] <= m_lo) {
          ++hits;
          break;
        }
      }
    }
    shard_hits[shard] = hits;
  });

  SimEstimate est;
  est.trials = trials;
  for (std::int64_t h : shard_hits) est.hits += h;
  est.frequency = static_cast<double>(est.hits) / static_cast<double>(trials);
  est.std_error = std::sqrt(est.frequency * (1.0 - est.frequency) /
                            static_cast<double>(trials));
  return est;
}

PairEstimate simulate_pair(const CouplingParams& coupling, std::int64_t n,
                           double alpha1, double alpha2, std::int64_t trials,
                           std::uint64_t seed) {
  if (n < 1 || trials < 1) throw std::domain_error("simulate_pair requires n, trials >= 1");
  const double p1 = coupling.px1 * coupling.pw;
  const double p2 = coupling.px2 * coupling.pw;
  const std::int64_t m1 = upper_dev_count(n, p1, alpha1);
  const std::int64_t m2 = lower_dev_count(n, p2, alpha2);

  struct ShardSums {
    std::int64_t q1 = 0, q2 = 0, agree = 0, tail = 0;
  };
  std::vector<ShardSums> sums(64);
  run_sharded(trials, [&](std::int64_t shard, std::int64_t begin, std::int64_t end) {
    ShardSums s;
    for (std::int64_t trial = begin; trial < end; ++trial) {
      CounterRng rng(seed, static_cast<std::uint64_t>(trial));
      std::int64_t c1 = 0, c2 = 0;
      for (std::int64_t i = 0; i < n; ++i) {
        const bool w = rng.bernoulli(coupling.pw);
        const bool x1 = rng.bernoulli(coupling.px1);
        const bool x2 = rng.bernoulli(coupling.px2);
        const bool q1 = w && x1;
        const bool q2 = w && x2;
        c1 += q1 ? 1 : 0;
        c2 += q2 ? 1 : 0;
        s.agree += (q1 == q2) ? 1 : 0;
      }
      s.q1 += c1;
      s.q2 += c2;
      if (c1 >= m1 && c2 <= m2) ++s.tail;
    }
    sums[shard] = s;
  });

  ShardSums total;
  for (const auto& s : sums) {
    total.q1 += s.q1;
    total.q2 += s.q2;
    total.agree += s.agree;
    total.tail += s.tail;
  }
  const double draws = static_cast<double>(n) * static_cast<double>(trials);
  PairEstimate est;
  est.trials = trials;
  est.p1_hat = static_cast<double>(total.q1) / draws;
  est.p2_hat = static_cast<double>(total.q2) / draws;
  est.eta_hat = static_cast<double>(total.agree) / draws;
  est.tail_frequency = static_cast<double>(total.tail) / static_cast<double>(trials);
  est.se_p1 = std::sqrt(est.p1_hat * (1.0 - est.p1_hat) / draws);
  est.se_p2 = std::sqrt(est.p2_hat * (1.0 - est.p2_hat) / draws);
  est.se_eta = std::sqrt(est.eta_hat * (1.0 - est.eta_hat) / draws);
  est.se_tail = std::sqrt(est.tail_frequency * (1.0 - est.tail_frequency) /
                          static_cast<double>(trials));
  return est;
}

}  // namespace simbound
