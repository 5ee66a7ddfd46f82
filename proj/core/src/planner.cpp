// Copyright (c) the simbound authors.
// SPDX-License-Identifier: Apache-2.0

#include "simbound/planner.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <memory>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "simbound/bounds.hpp"
#include "simbound/errors.hpp"
#include "simbound/theory.hpp"

namespace simbound {

PlanMethod parse_plan_method(const std::string& name) {
  if (name == "standard") return PlanMethod::standard;
  if (name == "similarity") return PlanMethod::similarity;
  if (name == "naive-bayes") return PlanMethod::naive_bayes;
  if (name == "thm1") return PlanMethod::closed_form;
  throw std::invalid_argument("unknown method '" + name + "'");
}

std::string plan_method_name(PlanMethod method) {
  switch (method) {
    case PlanMethod::standard: return "standard";
    case PlanMethod::similarity: return "similarity";
    case PlanMethod::naive_bayes: return "naive-bayes";
    case PlanMethod::closed_form: return "thm1";
  }
  return "unknown";
}

void PlanQuery::validate() const {
  if (n < 1) throw std::domain_error("n must be >= 1");
  if (!(mu >= 0.0 && mu <= 1.0)) throw std::domain_error("mu must lie in [0,1]");
  if (!(eta >= 0.0 && eta <= 1.0)) throw std::domain_error("eta must lie in [0,1]");
  if (!(eps > 0.0)) throw std::domain_error("eps must be > 0");
  if (!(delta > 0.0 && delta <= 1.0)) throw std::domain_error("delta must lie in (0,1]");
  if (k_cap < 1) throw std::domain_error("k_cap must be >= 1");
  if (cover_size < 1) throw std::domain_error("cover_size must be >= 1");
}

namespace {

// Probability-of-overfitting bound as a function of k; monotone
// nondecreasing in k for every method.
std::function<double(std::int64_t)> make_bound_fn(const PlanQuery& q) {
  switch (q.method) {
    case PlanMethod::standard: {
      auto ev = std::make_shared<StandardEvaluator>(q.n, q.mu, q.eps);
      return [ev](std::int64_t k) { return ev->probability(k); };
    }
    case PlanMethod::similarity: {
      auto ev = std::make_shared<SimilarityEvaluator>(q.n, q.mu, q.eta, q.eps);
      return [ev](std::int64_t k) { return ev->evaluate(k).probability; };
    }
    case PlanMethod::naive_bayes: {
      auto ev = std::make_shared<NaiveBayesEvaluator>(q.n, q.mu, q.eta, q.eps);
      return [ev](std::int64_t k) { return ev->probability(k); };
    }
    case PlanMethod::closed_form: {
      const PlanQuery qq = q;
      return [qq](std::int64_t k) {
        return std::min(1.0, cover_tail_bound(qq.n, k, qq.cover_size, qq.eta, qq.eps));
      };
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace

MaxModelsResult max_models(const PlanQuery& query) {
  query.validate();
  MaxModelsResult result;

  std::function<double(std::int64_t)> bound;
  try {
    bound = make_bound_fn(query);
  } catch (const infeasible_error& e) {
    result.infeasible = true;
    result.diagnostic = e.what();
    return result;
  }

  const double first = bound(1);
  if (first > query.delta) {
    result.k_max = 0;
    result.diagnostic = "bound already exceeds delta at k = 1";
    result.probability_at_k_max = first;
    return result;
  }

  std::int64_t lo = 1;  // invariant: bound(lo) <= delta
  while (lo < query.k_cap) {
    const std::int64_t probe = std::min(query.k_cap, lo * 2);
    if (bound(probe) <= query.delta) {
      lo = probe;
    } else {
      // bracket (lo, probe): binary search for the last passing k
      std::int64_t hi = probe;
      while (hi - lo > 1) {
        const std::int64_t mid = lo + (hi - lo) / 2;
        if (bound(mid) <= query.delta) {
          lo = mid;
        } else {
          hi = mid;
        }
      }
      result.k_max = lo;
      result.probability_at_k_max = bound(lo);
      return result;
    }
  }
  result.k_max = query.k_cap;
  result.saturated = true;
  result.probability_at_k_max = bound(query.k_cap);
  return result;
}

std::vector<GainsRow> gains(const PlanQuery& base, GridAxis axis,
                            const std::vector<double>& grid) {
  base.validate();
  std::vector<GainsRow> rows;
  rows.reserve(grid.size());

  // On an eta grid the standard bound ignores the axis, so its k is shared.
  std::optional<std::int64_t> shared_standard;
  if (axis == GridAxis::eta) {
    PlanQuery sq = base;
    sq.method = PlanMethod::standard;
    MaxModelsResult r = max_models(sq);
    if (!r.infeasible) shared_standard = r.k_max;
  }

  for (double g : grid) {
    GainsRow row;
    row.grid_value = g;
    PlanQuery q = base;
    if (axis == GridAxis::eta) {
      q.eta = g;
    } else {
      q.eps = g;
    }

    try {
      if (axis == GridAxis::eta) {
        row.k_standard = shared_standard;
      } else {
        PlanQuery sq = q;
        sq.method = PlanMethod::standard;
        MaxModelsResult sr = max_models(sq);
        if (!sr.infeasible) row.k_standard = sr.k_max;
      }
      MaxModelsResult mr = max_models(q);
      if (!mr.infeasible) row.k_method = mr.k_max;
    } catch (const std::domain_error&) {
      // leave cells empty for out-of-domain grid points
    }

    if (row.k_standard && row.k_method && *row.k_standard > 0) {
      row.ratio = static_cast<double>(*row.k_method) /
                  static_cast<double>(*row.k_standard);
    }
    rows.push_back(row);
  }
  return rows;
}

void write_gains_csv(std::ostream& out, const std::vector<GainsRow>& rows) {
  out << "grid_value,k_standard,k_method,ratio\n";
  for (const GainsRow& r : rows) {
    std::ostringstream line;
    line.precision(12);
    line << r.grid_value << ",";
    if (r.k_standard) line << *r.k_standard;
    line << ",";
    if (r.k_method) line << *r.k_method;
    line << ",";
    if (r.ratio) line << *r.ratio;
    out << line.str() << "\n";
  }
}

}  // namespace simbound
