// Copyright (c) the simbound authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef SIMBOUND_PLANNER_HPP
#define SIMBOUND_PLANNER_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace simbound {

enum class PlanMethod { standard, similarity, naive_bayes, closed_form };

// Parses "standard" | "similarity" | "naive-bayes" | "thm1"; throws
// std::invalid_argument otherwise.
PlanMethod parse_plan_method(const std::string& name);
std::string plan_method_name(PlanMethod method);

struct PlanQuery {
  PlanMethod method = PlanMethod::standard;
  std::int64_t n = 50000;
  double mu = 0.244;
  double eta = 0.85;
  double eps = 0.01;
  double delta = 0.05;
  std::int64_t k_cap = 1'000'000'000'000LL;  // 1e12
  std::int64_t cover_size = 1;  // closed_form method only; symmetric families self-cover

  void validate() const;
};

struct MaxModelsResult {
  std::int64_t k_max = 0;
  bool saturated = false;   // even k_cap keeps the bound under delta
  bool infeasible = false;  // method inapplicable at these parameters
  std::string diagnostic;
  double probability_at_k_max = 0.0;
};

// Largest k <= k_cap whose bound probability stays at or below delta, by
// exponential doubling then binary search over the monotone predicate.
MaxModelsResult max_models(const PlanQuery& query);

enum class GridAxis { eta, eps };

struct GainsRow {
  double grid_value = 0.0;
  std::optional<std::int64_t> k_standard;
  std::optional<std::int64_t> k_method;
  std::optional<double> ratio;
};

// k_standard, k_method and their ratio across a grid of eta or eps values.
// Infeasible grid points propagate as empty cells.
std::vector<GainsRow> gains(const PlanQuery& base, GridAxis axis,
                            const std::vector<double>& grid);

// CSV with the fixed header grid_value,k_standard,k_method,ratio.
void write_gains_csv(std::ostream& out, const std::vector<GainsRow>& rows);

}  // namespace simbound

#endif
