// Copyright (c) the simbound authors.
// SPDX-License-Identifier: Apache-2.0

#include "simbound/cover.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace simbound {

std::int64_t min_agree_count(const PredictionMatrix& matrix, double eta) {
  const double raw = eta * static_cast<double>(matrix.n_examples());
  return static_cast<std::int64_t>(std::ceil(raw));
}

namespace {

struct PairData {
  std::size_t m = 0;
  std::vector<std::int64_t> err;     // mistake counts
  std::vector<char> sim_ok;          // m x m: agreement >= threshold
  bool ok(std::size_t a, std::size_t b) const { return sim_ok[a * m + b] != 0; }
};

PairData build_pair_data(const PredictionMatrix& matrix, double eta) {
  PairData d;
  d.m = matrix.n_models();
  d.err.resize(d.m);
  d.sim_ok.assign(d.m * d.m, 0);
  const std::int64_t threshold = min_agree_count(matrix, eta);
  for (std::size_t i = 0; i < d.m; ++i) d.err[i] = matrix.mistake_count(i);
  for (std::size_t i = 0; i < d.m; ++i) {
    for (std::size_t j = i; j < d.m; ++j) {
      const bool ok = matrix.agree_count(i, j) >= threshold;
      d.sim_ok[i * d.m + j] = ok;
      d.sim_ok[j * d.m + i] = ok;
    }
  }
  return d;
}

bool covers_below(const PairData& d, std::size_t cand, std::size_t q) {
  return d.ok(cand, q) && d.err[cand] <= d.err[q];
}

bool covers_above(const PairData& d, std::size_t cand, std::size_t q) {
  return d.ok(cand, q) && d.err[cand] >= d.err[q];
}

CoverResult greedy_from_pair_data(const PairData& d, double eta) {
  const std::size_t m = d.m;
  std::vector<char> need_below(m, 1), need_above(m, 1);
  std::size_t remaining = 2 * m;

  CoverResult result;
  result.eta = eta;
  result.certificate.assign(m, CoverWitness{});
  std::vector<char> have_below(m, 0), have_above(m, 0);

  while (remaining > 0) {
    std::size_t best = 0;
    std::size_t best_gain = 0;
    for (std::size_t c = 0; c < m; ++c) {
      std::size_t gain = 0;
      for (std::size_t q = 0; q < m; ++q) {
        if (need_below[q] && covers_below(d, c, q)) ++gain;
        if (need_above[q] && covers_above(d, c, q)) ++gain;
      }
      if (gain > best_gain) {  // ties keep the lowest index
        best_gain = gain;
        best = c;
      }
    }
    // Every model covers both of its own slots, so progress is guaranteed.
    result.cover_indices.push_back(best);
    for (std::size_t q = 0; q < m; ++q) {
      if (need_below[q] && covers_below(d, best, q)) {
        need_below[q] = 0;
        have_below[q] = 1;
        result.certificate[q].below = best;
        --remaining;
      }
      if (need_above[q] && covers_above(d, best, q)) {
        need_above[q] = 0;
        have_above[q] = 1;
        result.certificate[q].above = best;
        --remaining;
      }
    }
  }
  return result;
}

bool verify_with_pair_data(const PairData& d, const CoverResult& r) {
  const std::size_t m = d.m;
  if (r.certificate.size() != m) return false;
  for (std::size_t q = 0; q < m; ++q) {
    const CoverWitness& w = r.certificate[q];
    const bool below_in_cover =
        std::find(r.cover_indices.begin(), r.cover_indices.end(), w.below) !=
        r.cover_indices.end();
    const bool above_in_cover =
        std::find(r.cover_indices.begin(), r.cover_indices.end(), w.above) !=
        r.cover_indices.end();
    if (!below_in_cover || !above_in_cover) return false;
    if (!covers_below(d, w.below, q)) return false;
    if (!covers_above(d, w.above, q)) return false;
  }
  return true;
}

}  // namespace

CoverResult greedy_cover(const PredictionMatrix& matrix, double eta) {
  if (!(eta >= 0.0 && eta <= 1.0)) throw std::domain_error("eta must lie in [0,1]");
  PairData d = build_pair_data(matrix, eta);
  CoverResult r = greedy_from_pair_data(d, eta);
  if (!verify_with_pair_data(d, r)) {
    throw std::logic_error("greedy cover failed its own certificate check");
  }
  return r;
}

bool verify_cover(const PredictionMatrix& matrix, const CoverResult& result) {
  PairData d = build_pair_data(matrix, result.eta);
  return verify_with_pair_data(d, result);
}

std::vector<std::pair<double, std::size_t>> cover_curve(
    const PredictionMatrix& matrix, const std::vector<double>& eta_grid) {
  std::vector<double> grid = eta_grid;
  std::sort(grid.begin(), grid.end());

  std::vector<std::pair<double, std::size_t>> curve(grid.size());
  CoverResult carried;  // valid cover from a higher similarity level
  bool have_carried = false;
  for (std::size_t idx = grid.size(); idx-- > 0;) {
    const double eta = grid[idx];
    CoverResult own = greedy_cover(matrix, eta);
    if (have_carried && carried.size() < own.size()) {
      // A cover at a higher level stays valid at lower levels; keep the
      // smaller of the two so the curve is monotone.
      carried.eta = eta;
      if (verify_cover(matrix, carried)) {
        curve[idx] = {eta, carried.size()};
        continue;
      }
    }
    carried = own;
    have_carried = true;
    curve[idx] = {eta, own.size()};
  }
  return curve;
}

}  // namespace simbound
