// Copyright (c) the simbound authors.
// SPDX-License-Identifier: Apache-2.0
//
// Command-line surface for the similarity-aware test set reuse bounds:
// ingestion and statistics of prediction matrices, the three bound
// evaluators, closed-form rates, covering-number curves, planning queries,
// and the oracle cross-check suite.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "simbound/bounds.hpp"
#include "simbound/cover.hpp"
#include "simbound/dataio.hpp"
#include "simbound/errors.hpp"
#include "simbound/numerics.hpp"
#include "simbound/oracle.hpp"
#include "simbound/planner.hpp"
#include "simbound/theory.hpp"

namespace {

using nlohmann::json;
using namespace simbound;

constexpr int kExitUsage = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitParse = 4;

std::vector<double> parse_grid(const std::string& spec) {
  // "a:b:step" inclusive of both ends (up to rounding slack on the last point)
  double a, b, step;
  char c1, c2;
  std::istringstream in(spec);
  if (!(in >> a >> c1 >> b >> c2 >> step) || c1 != ':' || c2 != ':' || step <= 0.0) {
    throw std::invalid_argument("grid must be start:stop:step with step > 0");
  }
  std::vector<double> grid;
  for (double v = a; v <= b + step * 1e-9; v += step) grid.push_back(std::min(v, b));
  if (grid.empty()) throw std::invalid_argument("empty grid");
  return grid;
}

void emit_result(bool as_json, const std::string& method, const json& params,
                 const json& value, double truncation_error, const json& flags,
                 const std::string& human) {
  if (as_json) {
    json out{{"method", method},
             {"params", params},
             {"value", value},
             {"truncation_error", truncation_error},
             {"flags", flags}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << human;
  }
}

void write_csv_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << contents;
}

struct CommonOpts {
  std::int64_t n = 50000;
  double mu = 0.244;
  double eta = 0.85;
  double eps = 0.01;
  double delta = 0.05;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_delta = true) {
  cmd->add_option("--n", o.n, "test set size");
  cmd->add_option("--mu", o.mu, "common population error rate");
  cmd->add_option("--eta", o.eta, "common pairwise similarity");
  cmd->add_option("--eps", o.eps, "deviation threshold");
  if (with_delta) cmd->add_option("--delta", o.delta, "failure probability budget");
}

json bound_flags(const BoundResult& r) {
  json flags = json::array();
  if (r.exact) flags.push_back("exact");
  if (r.fell_back_to_standard) flags.push_back("fell_back_to_standard");
  return flags;
}

int run_stats(const std::string& path, bool id_col, bool as_json,
              const std::string& out_path) {
  PredictionMatrix m = load_matrix_file(path, LoadOptions{id_col});
  SimilaritySummary s = summarize(m);
  DifficultyHistogram h = difficulty_histogram(m);

  std::ostringstream csv;
  csv << "models_in_error,count,cumulative\n";
  for (std::size_t d = 0; d < h.counts.size(); ++d) {
    csv << d << "," << h.counts[d] << "," << h.cumulative[d] << "\n";
  }
  if (!out_path.empty()) write_csv_file(out_path, csv.str());

  if (as_json) {
    json value{{"n_examples", s.n_examples},
               {"n_models", s.n_models},
               {"model_ids", m.model_ids()},
               {"error_rates", s.error_rates},
               {"mean_similarity", s.mean_similarity},
               {"mean_baseline", s.mean_baseline},
               {"similarity", s.similarity},
               {"baseline", s.baseline},
               {"histogram", h.counts},
               {"histogram_cumulative", h.cumulative}};
    emit_result(true, "stats", {{"matrix", path}}, value, 0.0, json::array(), "");
    return 0;
  }
  std::cout << "examples: " << s.n_examples << "  models: " << s.n_models << "\n";
  std::cout << "mean pairwise similarity: " << s.mean_similarity
            << "  (independence baseline: " << s.mean_baseline << ")\n";
  std::cout << "model error rates:\n";
  for (std::size_t i = 0; i < s.n_models; ++i) {
    std::cout << "  " << m.model_ids()[i] << ": " << s.error_rates[i] << "\n";
  }
  std::cout << "difficulty histogram (models in error -> examples, cumulative):\n";
  for (std::size_t d = 0; d < h.counts.size(); ++d) {
    if (h.counts[d] != 0 || d == 0 || d + 1 == h.counts.size()) {
      std::cout << "  " << d << ": " << h.counts[d] << "  (<=" << d << ": "
                << h.cumulative[d] << ")\n";
    }
  }
  return 0;
}

int run_cover(const std::string& path, bool id_col, const std::string& grid_spec,
              bool as_json, const std::string& out_path) {
  PredictionMatrix m = load_matrix_file(path, LoadOptions{id_col});
  std::vector<double> grid = parse_grid(grid_spec);
  auto curve = cover_curve(m, grid);

  std::ostringstream csv;
  csv << "eta,size\n";
  for (const auto& [eta, size] : curve) csv << eta << "," << size << "\n";
  if (!out_path.empty()) write_csv_file(out_path, csv.str());

  if (as_json) {
    json rows = json::array();
    for (const auto& [eta, size] : curve) {
      rows.push_back({{"eta", eta}, {"size", size}});
    }
    emit_result(true, "cover", {{"matrix", path}, {"eta_grid", grid_spec}}, rows,
                0.0, json::array(), "");
    return 0;
  }
  std::cout << "eta,size (empirical cover)\n";
  for (const auto& [eta, size] : curve) {
    std::cout << eta << "," << size << "\n";
  }
  return 0;
}

int run_max_models(const std::string& method, const CommonOpts& o,
                   std::int64_t k_cap, std::int64_t n_eta, bool as_json) {
  PlanQuery q;
  q.method = parse_plan_method(method);
  q.n = o.n;
  q.mu = o.mu;
  q.eta = o.eta;
  q.eps = o.eps;
  q.delta = o.delta;
  q.k_cap = k_cap;
  q.cover_size = n_eta;
  MaxModelsResult r = max_models(q);
  if (r.infeasible) {
    throw infeasible_error(r.diagnostic.empty() ? "method infeasible" : r.diagnostic);
  }

  json flags = json::array();
  if (r.saturated) flags.push_back("saturated");
  json params{{"n", q.n}, {"mu", q.mu}, {"eta", q.eta}, {"eps", q.eps},
              {"delta", q.delta}, {"k_cap", q.k_cap}};
  if (q.method == PlanMethod::closed_form) params["n_eta"] = q.cover_size;
  std::ostringstream human;
  human << r.k_max << "\n";
  emit_result(as_json, method, params,
              json{{"k_max", r.k_max}, {"probability_at_k_max", r.probability_at_k_max}},
              0.0, flags, human.str());
  return 0;
}

int run_gains(const std::string& method, const CommonOpts& o, std::int64_t k_cap,
              std::int64_t n_eta, const std::string& axis_name,
              const std::string& range_spec, bool as_json,
              const std::string& out_path) {
  GridAxis axis;
  if (axis_name == "eta") {
    axis = GridAxis::eta;
  } else if (axis_name == "eps") {
    axis = GridAxis::eps;
  } else {
    throw std::invalid_argument("--grid must be eta or eps");
  }
  PlanQuery q;
  q.method = parse_plan_method(method);
  q.n = o.n;
  q.mu = o.mu;
  q.eta = o.eta;
  q.eps = o.eps;
  q.delta = o.delta;
  q.k_cap = k_cap;
  q.cover_size = n_eta;

  std::vector<GainsRow> rows = gains(q, axis, parse_grid(range_spec));

  std::ostringstream csv;
  write_gains_csv(csv, rows);
  if (!out_path.empty()) write_csv_file(out_path, csv.str());

  if (as_json) {
    json arr = json::array();
    for (const GainsRow& r : rows) {
      json row{{"grid_value", r.grid_value}};
      row["k_standard"] = r.k_standard ? json(*r.k_standard) : json(nullptr);
      row["k_method"] = r.k_method ? json(*r.k_method) : json(nullptr);
      row["ratio"] = r.ratio ? json(*r.ratio) : json(nullptr);
      arr.push_back(row);
    }
    json params{{"n", q.n}, {"mu", q.mu}, {"eta", q.eta}, {"eps", q.eps},
                {"delta", q.delta}, {"k_cap", q.k_cap}, {"grid", axis_name},
                {"range", range_spec}};
    emit_result(true, method, params, arr, 0.0, json::array(), "");
    return 0;
  }
  std::cout << csv.str();
  return 0;
}

int run_bound(const std::string& method, const CommonOpts& o, std::int64_t k,
              bool as_json) {
  EnsembleSpec spec{o.n, o.mu, o.eta, k};
  BoundResult r;
  PlanMethod pm = parse_plan_method(method);
  switch (pm) {
    case PlanMethod::standard:
      r = standard_union_prob(spec, o.eps);
      break;
    case PlanMethod::similarity:
      r = similarity_union_prob(spec, o.eps);
      break;
    case PlanMethod::naive_bayes:
      r = naive_bayes_prob(spec, o.eps);
      break;
    case PlanMethod::closed_form:
      throw std::invalid_argument("bound supports standard|similarity|naive-bayes");
  }
  json params{{"n", o.n}, {"mu", o.mu}, {"eta", o.eta}, {"eps", o.eps}, {"k", k}};
  json value{{"probability", r.probability}};
  if (r.method == BoundMethod::similarity && !r.fell_back_to_standard) {
    value["slack_t"] = r.slack_t;
  }
  std::ostringstream human;
  human.precision(12);
  human << r.probability << "\n";
  emit_result(as_json, method, params, value, r.truncation_error, bound_flags(r),
              human.str());
  return 0;
}

int run_theory(const std::string& form, std::int64_t n, std::int64_t k,
               std::int64_t n_eta, double eta, double eps, double delta,
               double p1, double p_neg1, double t, double alpha, bool as_json) {
  json params{{"n", n}, {"k", k}};
  json value;
  std::ostringstream human;
  human.precision(12);
  if (form == "lemma1") {
    double v = ternary_chernoff_tail(n, p1, p_neg1, t);
    params["p1"] = p1;
    params["p_neg1"] = p_neg1;
    params["t"] = t;
    value = json{{"bound", v}};
    human << v << "\n";
  } else if (form == "eq4") {
    double v = cover_tail_bound(n, k, n_eta, eta, eps);
    params["n_eta"] = n_eta;
    params["eta"] = eta;
    params["eps"] = eps;
    value = json{{"bound", v}, {"clamped", std::min(v, 1.0)}};
    human << std::min(v, 1.0) << "\n";
  } else if (form == "eq5") {
    params["n_eta"] = n_eta;
    params["eta"] = eta;
    params["delta"] = delta;
    std::optional<double> v = cover_deviation_bound(n, k, n_eta, eta, delta);
    if (v) {
      value = json{{"eps", *v}};
      human << *v << "\n";
    } else {
      value = json{{"eps", nullptr}, {"not_applicable", true}};
      human << "not applicable (similarity above the validity ceiling)\n";
    }
  } else if (form == "eq6") {
    params["n_eta"] = n_eta;
    params["delta"] = delta;
    RateThreshold rt = cover_rate_threshold(n, k, n_eta, delta);
    value = json{{"eps", rt.eps}, {"eta_threshold", rt.eta_threshold}};
    human << "eps = " << rt.eps << "\neta_threshold = " << rt.eta_threshold << "\n";
  } else if (form == "adaptive") {
    params["alpha"] = alpha;
    params["delta"] = delta;
    AdaptiveRate ar = adaptive_analyst_rate(n, k, alpha, delta);
    value = json{{"eps", ar.eps},
                 {"eta_required", ar.eta_required},
                 {"cover_budget", ar.cover_budget}};
    human << "eps = " << ar.eps << "\neta_required = " << ar.eta_required
          << "\ncover_budget = " << ar.cover_budget << "\n";
  } else {
    throw std::invalid_argument("theory form must be lemma1|eq4|eq5|eq6|adaptive");
  }
  emit_result(as_json, "theory/" + form, params, value, 0.0, json::array(),
              human.str());
  return 0;
}

// Oracle cross-check suite: exhaustive enumeration against the summation
// formulas at tiny n, Monte-Carlo against the exact evaluators, and seed
// determinism. Returns zero when every check passes.
int run_verify(std::uint64_t seed, bool quick, bool as_json) {
  int failures = 0;
  json checks = json::array();
  auto report = [&](const std::string& name, bool ok, const std::string& detail) {
    if (!ok) ++failures;
    checks.push_back({{"check", name}, {"ok", ok}, {"detail", detail}});
    if (!as_json) {
      std::cout << (ok ? "ok   " : "FAIL ") << name
                << (detail.empty() ? "" : "  (" + detail + ")") << "\n";
    }
  };

  CounterRng pick(seed, 0xfeed);
  auto uniform = [&](double a, double b) { return a + (b - a) * pick.next_unit(); };

  // joint tails vs exact lattice enumeration
  {
    const int cases = quick ? 100 : 500;
    double worst = 0.0;
    int bad = 0;
    for (int i = 0; i < cases; ++i) {
      std::int64_t n = 1 + static_cast<std::int64_t>(pick.next_u32() % 12);
      double p1 = uniform(0.05, 0.6);
      double p2 = uniform(0.05, 0.6);
      double eta = uniform(independence_similarity(p1, p2), 1.0);
      if (!feasible_triple(p1, p2, eta)) continue;
      double a1 = uniform(0.0, 0.5);
      double a2 = uniform(0.0, 0.5);
      PairwiseJoint j = joint_from_marginals(p1, p2, eta);
      double exact = enumerate_joint_tail(n, j, a1, a2);
      double computed = joint_tail(n, p1, p2, eta, a1, a2).probability.prob();
      double diff = std::fabs(exact - computed);
      worst = std::max(worst, diff);
      if (diff > 1e-12) ++bad;
    }
    std::ostringstream d;
    d << cases << " cases, worst |diff| = " << worst;
    report("joint_tail vs lattice enumeration", bad == 0, d.str());
  }

  // naive-bayes probabilities vs exact lattice enumeration
  {
    const int cases = quick ? 60 : 300;
    double worst = 0.0;
    int bad = 0;
    for (int i = 0; i < cases; ++i) {
      std::int64_t n = 2 + static_cast<std::int64_t>(pick.next_u32() % 11);
      std::int64_t k = 1 + static_cast<std::int64_t>(pick.next_u32() % 3);
      double mu = uniform(0.1, 0.6);
      double eta = uniform(independence_similarity(mu, mu), 1.0);
      double eps = uniform(0.05, 0.4);
      EnsembleSpec spec{n, mu, eta, k};
      double computed = naive_bayes_prob(spec, eps).probability;
      double exact = enumerate_nb_overfit(n, k, nb_params(mu, eta), eps);
      double diff = std::fabs(exact - computed);
      worst = std::max(worst, diff);
      if (diff > 1e-12) ++bad;
    }
    std::ostringstream d;
    d << cases << " cases, worst |diff| = " << worst;
    report("naive-bayes vs lattice enumeration", bad == 0, d.str());
  }

  // Monte-Carlo vs exact naive-bayes evaluator
  {
    const std::int64_t trials = quick ? 200000 : 1000000;
    NaiveBayesParams params = nb_params(0.244, 0.85);
    bool all_ok = true;
    std::ostringstream d;
    for (double eps : {0.03, 0.05, 0.07}) {
      double exact = naive_bayes_prob({200, 0.244, 0.85, 5}, eps).probability;
      SimEstimate est = simulate_nb(params, 200, 5, eps, trials, seed);
      double z = std::fabs(est.frequency - exact) / est.std_error;
      d << "eps=" << eps << ": z=" << z << "  ";
      if (z > 4.0) all_ok = false;
    }
    report("naive-bayes vs Monte-Carlo", all_ok, d.str());
  }

  // coupled pair round trip: simulated moments reproduce (p1, p2, eta)
  {
    const std::int64_t trials = quick ? 2000 : 10000;
    const std::int64_t n = 100;
    std::ostringstream d;
    const double p1 = 0.3, p2 = 0.22, eta = 0.8;
    CouplingParams c = factorize(joint_from_marginals(p1, p2, eta));
    PairEstimate est = simulate_pair(c, n, 0.1, 0.05, trials, seed + 1);
    auto z = [](double hat, double truth, double se) {
      return se > 0 ? std::fabs(hat - truth) / se : 0.0;
    };
    double z1 = z(est.p1_hat, p1, est.se_p1);
    double z2 = z(est.p2_hat, p2, est.se_p2);
    double z3 = z(est.eta_hat, eta, est.se_eta);
    double tail = joint_tail(n, p1, p2, eta, 0.1, 0.05).probability.prob();
    double z4 = z(est.tail_frequency, tail, est.se_tail);
    d << "z(p1)=" << z1 << " z(p2)=" << z2 << " z(eta)=" << z3 << " z(tail)=" << z4;
    report("coupled pair round trip", z1 <= 4 && z2 <= 4 && z3 <= 4 && z4 <= 4,
           d.str());
  }

  // single-model Monte-Carlo vs the two-sided tail
  {
    const std::int64_t trials = quick ? 200000 : 1000000;
    NaiveBayesParams params = nb_params(0.244, 1.0);  // px = 1, pw = mu
    double exact = two_sided_dev_tail(200, 0.244, 0.05).prob();
    SimEstimate est = simulate_nb(params, 200, 1, 0.05, trials, seed + 2);
    double zv = std::fabs(est.frequency - exact) / est.std_error;
    std::ostringstream d;
    d << "z=" << zv;
    report("single-query tail vs Monte-Carlo", zv <= 4.0, d.str());
  }

  // seed determinism
  {
    SimEstimate a = simulate_nb(nb_params(0.3, 0.9), 50, 3, 0.1, 20000, seed + 3);
    SimEstimate b = simulate_nb(nb_params(0.3, 0.9), 50, 3, 0.1, 20000, seed + 3);
    report("seed determinism", a.hits == b.hits,
           "hits " + std::to_string(a.hits) + " == " + std::to_string(b.hits));
  }

  if (as_json) {
    emit_result(true, "verify", {{"seed", seed}, {"quick", quick}}, checks, 0.0,
                json::array({failures == 0 ? "pass" : "fail"}), "");
  } else {
    std::cout << (failures == 0 ? "all checks passed\n"
                                : std::to_string(failures) + " check(s) failed\n");
  }
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bounds on test set reuse from model similarity"};
  app.require_subcommand(1);
  app.fallthrough();  // --json / --out are accepted after a subcommand too
  bool as_json = false;
  std::string out_path;
  app.add_flag("--json", as_json, "emit JSON on stdout");
  app.add_option("--out", out_path, "write CSV output to PATH");

  // stats
  auto* stats = app.add_subcommand("stats", "similarity summary and difficulty histogram");
  std::string stats_matrix;
  bool stats_id_col = false;
  stats->add_option("matrix", stats_matrix, "prediction matrix CSV")->required();
  stats->add_flag("--example-id-col", stats_id_col, "first column is an example id");

  // cover
  auto* cover = app.add_subcommand("cover", "empirical similarity covering numbers");
  std::string cover_matrix, cover_grid = "0.5:1.0:0.05";
  bool cover_id_col = false;
  cover->add_option("matrix", cover_matrix, "prediction matrix CSV")->required();
  cover->add_option("--eta-grid", cover_grid, "similarity grid start:stop:step");
  cover->add_flag("--example-id-col", cover_id_col, "first column is an example id");

  // max-models
  auto* mm = app.add_subcommand("max-models", "largest k whose bound stays under delta");
  std::string mm_method = "standard";
  CommonOpts mm_opts;
  std::int64_t mm_cap = 1'000'000'000'000LL;
  std::int64_t mm_n_eta = 1;
  mm->add_option("--method", mm_method, "standard|similarity|naive-bayes|thm1");
  add_common(mm, mm_opts);
  mm->add_option("--k-cap", mm_cap, "search ceiling");
  mm->add_option("--n-eta", mm_n_eta, "cover size (thm1 method)");

  // gains
  auto* gn = app.add_subcommand("gains", "testable-model gains over the standard bound");
  std::string gn_method = "naive-bayes", gn_axis = "eta", gn_range = "0.65:0.99:0.01";
  CommonOpts gn_opts;
  std::int64_t gn_cap = 1'000'000'000'000LL;
  std::int64_t gn_n_eta = 1;
  gn->add_option("--method", gn_method, "similarity|naive-bayes|thm1");
  gn->add_option("--grid", gn_axis, "grid axis: eta or eps");
  gn->add_option("--range", gn_range, "grid start:stop:step");
  add_common(gn, gn_opts);
  gn->add_option("--k-cap", gn_cap, "search ceiling");
  gn->add_option("--n-eta", gn_n_eta, "cover size (thm1 method)");

  // bound
  auto* bd = app.add_subcommand("bound", "overfitting-probability bound for a fixed k");
  std::string bd_method = "standard";
  CommonOpts bd_opts;
  std::int64_t bd_k = 1;
  bd->add_option("--method", bd_method, "standard|similarity|naive-bayes");
  add_common(bd, bd_opts, false);
  bd->add_option("--k", bd_k, "number of models");

  // theory
  auto* th = app.add_subcommand("theory", "closed-form rates and thresholds");
  th->require_subcommand(1);
  struct TheoryOpts {
    std::int64_t n = 50000, k = 1, n_eta = 1;
    double eta = 0.85, eps = 0.01, delta = 0.05;
    double p1 = 0.1, p_neg1 = 0.1, t = 0.1, alpha = 0.5;
  } th_opts;
  const char* forms[] = {"lemma1", "eq4", "eq5", "eq6", "adaptive"};
  std::vector<CLI::App*> th_subs;
  for (const char* f : forms) {
    auto* sub = th->add_subcommand(f);
    sub->add_option("--n", th_opts.n);
    sub->add_option("--k", th_opts.k);
    sub->add_option("--n-eta", th_opts.n_eta);
    sub->add_option("--eta", th_opts.eta);
    sub->add_option("--eps", th_opts.eps);
    sub->add_option("--delta", th_opts.delta);
    sub->add_option("--p1", th_opts.p1);
    sub->add_option("--p-neg1", th_opts.p_neg1);
    sub->add_option("--t", th_opts.t);
    sub->add_option("--alpha", th_opts.alpha);
    th_subs.push_back(sub);
  }

  // verify
  auto* vf = app.add_subcommand("verify", "oracle cross-check suite");
  std::uint64_t vf_seed = 20190615;
  bool vf_quick = false;
  vf->add_option("--seed", vf_seed, "simulation seed");
  vf->add_flag("--quick", vf_quick, "reduced trial counts");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (stats->parsed()) {
      return run_stats(stats_matrix, stats_id_col, as_json, out_path);
    }
    if (cover->parsed()) {
      return run_cover(cover_matrix, cover_id_col, cover_grid, as_json, out_path);
    }
    if (mm->parsed()) {
      return run_max_models(mm_method, mm_opts, mm_cap, mm_n_eta, as_json);
    }
    if (gn->parsed()) {
      return run_gains(gn_method, gn_opts, gn_cap, gn_n_eta, gn_axis, gn_range,
                       as_json, out_path);
    }
    if (bd->parsed()) {
      return run_bound(bd_method, bd_opts, bd_k, as_json);
    }
    if (th->parsed()) {
      for (std::size_t i = 0; i < th_subs.size(); ++i) {
        if (th_subs[i]->parsed()) {
          return run_theory(forms[i], th_opts.n, th_opts.k, th_opts.n_eta,
                            th_opts.eta, th_opts.eps, th_opts.delta, th_opts.p1,
                            th_opts.p_neg1, th_opts.t, th_opts.alpha, as_json);
        }
      }
    }
    if (vf->parsed()) {
      return run_verify(vf_seed, vf_quick, as_json);
    }
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const infeasible_error& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const std::domain_error& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitUsage;
}
