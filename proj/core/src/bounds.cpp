// Copyright (c) the simbound authors.
// SPDX-License-Identifier: Apache-2.0

#include "simbound/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "simbound/ddouble.hpp"
#include "simbound/errors.hpp"

namespace simbound {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

// Window of the Binomial(n, pw) weights that carries all but a certified
// sliver of mass. The bracketed factors multiplying each weight are always
// in [0,1], so the dropped mass bounds the truncation error of any
// windowed sum; it is kept below 1e-25 so that even k_cap * dropped stays
// under the 1e-12 reporting budget.
struct WeightWindow {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  std::vector<double> log_w;  // index j - lo
  double dropped_mass = 0.0;
};

WeightWindow make_weight_window(std::int64_t n, double pw) {
  WeightWindow w;
  if (pw <= 0.0) {
    w.lo = w.hi = 0;
    w.log_w = {0.0};
    return w;
  }
  if (pw >= 1.0) {
    w.lo = w.hi = n;
    w.log_w = {0.0};
    return w;
  }

  const DDouble log_pw = dd_log(pw);
  const DDouble log_qw = dd_log1p(-pw);
  const DDouble lfn = dd_log_factorial(n);
  auto log_weight = [&](std::int64_t j) {
    DDouble r = lfn - dd_log_factorial(j) - dd_log_factorial(n - j);
    r = r + log_pw * static_cast<double>(j) + log_qw * static_cast<double>(n - j);
    return r.to_double();
  };

  if (n <= 256) {
    w.lo = 0;
    w.hi = n;
    w.log_w.resize(n + 1);
    for (std::int64_t j = 0; j <= n; ++j) w.log_w[j] = log_weight(j);
    return w;
  }

  const std::int64_t peak = std::clamp<std::int64_t>(
      static_cast<std::int64_t>(static_cast<double>(n + 1) * pw), 0, n);
  const double log_peak = log_weight(peak);
  double cutoff = std::log(1e-30);
  for (;;) {
    std::int64_t lo = peak, hi = peak;
    while (lo > 0 && log_weight(lo - 1) >= log_peak + cutoff) --lo;
    while (hi < n && log_weight(hi + 1) >= log_peak + cutoff) ++hi;
    double dropped = 0.0;
    BinomialSpec spec{n, pw};
    if (lo > 0) dropped += binom_tail_pair(spec, lo - 1).cdf.prob();
    if (hi < n) dropped += binom_tail_pair(spec, hi).sf.prob();
    if (dropped <= 1e-25 || (lo == 0 && hi == n)) {
      w.lo = lo;
      w.hi = hi;
      w.dropped_mass = dropped;
      w.log_w.resize(hi - lo + 1);
      for (std::int64_t j = lo; j <= hi; ++j) w.log_w[j - lo] = log_weight(j);
      return w;
    }
    cutoff *= 2.0;
  }
}

// Fixed-order log-sum-exp over the window terms.
LogProb window_log_sum(const std::vector<double>& log_terms) {
  double peak = -std::numeric_limits<double>::infinity();
  for (double lt : log_terms) peak = std::max(peak, lt);
  if (peak == -std::numeric_limits<double>::infinity()) return LogProb::zero();
  NeumaierSum sum;
  for (double lt : log_terms) {
    sum.add(std::exp(lt - peak));
  }
  return LogProb::from_log(peak + std::log(sum.value()));
}

JointTailResult joint_tail_counts(std::int64_t n, const CouplingParams& coup,
                                  std::int64_t m1, std::int64_t m2) {
  if (m1 > n || m2 < 0) return {LogProb::zero(), 0.0};

  WeightWindow w = make_weight_window(n, coup.pw);
  std::vector<double> log_terms(w.log_w.size());
  for (std::int64_t j = w.lo; j <= w.hi; ++j) {
    const double log_a = binom_tail_pair({j, coup.px2}, m2).cdf.log();
    const double log_b = binom_tail_pair({j, coup.px1}, m1 - 1).sf.log();
    log_terms[j - w.lo] = w.log_w[j - w.lo] + log_a + log_b;
  }
  return {window_log_sum(log_terms), w.dropped_mass};
}

}  // namespace

void EnsembleSpec::validate() const {
  if (n < 1) throw std::domain_error("ensemble requires n >= 1");
  if (k < 0) throw std::domain_error("ensemble requires k >= 0");
  if (!(mu >= 0.0 && mu <= 1.0)) throw std::domain_error("mu must lie in [0,1]");
  if (!(eta >= 0.0 && eta <= 1.0)) throw std::domain_error("eta must lie in [0,1]");
  if (k >= 2 && !feasible_triple(mu, mu, eta)) {
    throw infeasible_error("(mu, mu, eta) is not a feasible pairwise triple");
  }
}

JointTailResult joint_tail(std::int64_t n, double p1, double p2, double eta,
                           double alpha1, double alpha2) {
  if (n < 1) throw std::domain_error("joint_tail requires n >= 1");
  CouplingParams coup;
  try {
    coup = factorize(joint_from_marginals(p1, p2, eta));
  } catch (const infeasible_error& e) {
    throw infeasible_error(std::string(e.what()) +
                           "; use the per-pair union bound for this pair");
  }
  const std::int64_t m1 = upper_dev_count(n, p1, alpha1);
  const std::int64_t m2 = lower_dev_count(n, p2, alpha2);
  return joint_tail_counts(n, coup, m1, m2);
}

StandardEvaluator::StandardEvaluator(std::int64_t n, double mu, double eps)
    : tail_(two_sided_dev_tail(n, mu, eps).prob()) {}

double StandardEvaluator::probability(std::int64_t k) const {
  const double kk = static_cast<double>(std::max<std::int64_t>(k, 1));
  return std::min(1.0, kk * tail_);
}

BoundResult standard_union_prob(const EnsembleSpec& spec, double eps) {
  spec.validate();
  if (!(eps > 0.0)) throw std::domain_error("eps must be > 0");
  StandardEvaluator ev(spec.n, spec.mu, eps);
  BoundResult r;
  r.probability = ev.probability(spec.k);
  r.method = BoundMethod::standard;
  r.slack_t = kNan;
  r.truncation_error = 0.0;
  r.exact = false;
  return r;
}

NaiveBayesEvaluator::NaiveBayesEvaluator(std::int64_t n, double mu, double eta,
                                         double eps)
    : params_(nb_params(mu, eta)) {
  if (n < 1) throw std::domain_error("naive bayes evaluator requires n >= 1");
  if (!(eps > 0.0)) throw std::domain_error("eps must be > 0");

  const std::int64_t m_up = upper_dev_count(n, mu, eps);
  const std::int64_t m_lo = lower_dev_count_strict(n, mu, -eps);
  if (m_up <= m_lo + 1) {
    saturated_ = true;  // no count keeps the mean inside the band
    return;
  }

  WeightWindow w = make_weight_window(n, params_.pw);
  truncation_error_ = w.dropped_mass;
  weights_.resize(w.log_w.size());
  log_inner_.resize(w.log_w.size());
  for (std::int64_t j = w.lo; j <= w.hi; ++j) {
    weights_[j - w.lo] = std::exp(w.log_w[j - w.lo]);
    LogProb bad_up = binom_tail_pair({j, params_.px}, m_up - 1).sf;
    LogProb bad_lo = binom_tail_pair({j, params_.px}, m_lo).cdf;
    LogProb bad = bad_up + bad_lo;  // disjoint: m_up > m_lo + 1
    double log_s;
    if (bad.log() >= 0.0) {
      log_s = -std::numeric_limits<double>::infinity();
    } else if (bad.log() < std::log(1e-8)) {
      // log(1 - bad) = -bad to well beyond the accuracy target here, and
      // this form survives bad far below double's log1p resolution.
      log_s = -bad.prob();
    } else {
      log_s = std::log1p(-bad.prob());
    }
    log_inner_[j - w.lo] = log_s;
  }
}

double NaiveBayesEvaluator::probability(std::int64_t k) const {
  const double kk = static_cast<double>(std::max<std::int64_t>(k, 1));
  if (saturated_) return 1.0;
  NeumaierSum sum;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    const double log_s = log_inner_[i];
    double bracket;
    if (log_s == -std::numeric_limits<double>::infinity()) {
      bracket = 1.0;
    } else {
      bracket = -std::expm1(kk * log_s);
    }
    sum.add(weights_[i] * bracket);
  }
  return std::clamp(sum.value(), 0.0, 1.0);
}

BoundResult naive_bayes_prob(const EnsembleSpec& spec, double eps) {
  spec.validate();
  NaiveBayesEvaluator ev(spec.n, spec.mu, spec.eta, eps);
  BoundResult r;
  r.probability = ev.probability(spec.k);
  r.method = BoundMethod::naive_bayes;
  r.slack_t = kNan;
  r.truncation_error = ev.truncation_error();
  r.exact = true;
  return r;
}

SimilarityEvaluator::SimilarityEvaluator(std::int64_t n, double mu, double eta,
                                         double eps)
    : n_(n), mu_(mu), eta_(eta), eps_(eps) {
  if (n < 1) throw std::domain_error("similarity evaluator requires n >= 1");
  if (!(eps > 0.0)) throw std::domain_error("eps must be > 0");
  standard_tail_ = two_sided_dev_tail(n, mu, eps).prob();
  try {
    coup_right_ = factorize(joint_from_marginals(mu, mu, eta));
    coup_left_ = factorize(joint_from_marginals(1.0 - mu, 1.0 - mu, eta));
  } catch (const infeasible_error&) {
    feasible_ = false;
  }
}

const SimilarityEvaluator::Components& SimilarityEvaluator::components(double t) const {
  auto it = memo_.find(t);
  if (it != memo_.end()) return it->second;

  Components c;
  // Right tails: anchor deviates weakly above eps - t; cross terms pair a
  // weak upper deviation at eps with the anchor held weakly at or below
  // eps - t.
  const std::int64_t anchor_r = upper_dev_count(n_, mu_, eps_ - t);
  c.anchor = binom_tail_pair({n_, mu_}, anchor_r - 1).sf.prob();
  JointTailResult jr = joint_tail_counts(
      n_, coup_right_, upper_dev_count(n_, mu_, eps_), lower_dev_count(n_, mu_, eps_ - t));
  c.cross = jr.probability.prob();
  c.trunc = jr.truncation_error;

  // Left tails via the complement transform (mu -> 1 - mu). Lower
  // deviations are counted strictly, so the transformed thresholds are the
  // strict-upper ones.
  const double mu_l = 1.0 - mu_;
  const std::int64_t anchor_l = upper_dev_count_strict(n_, mu_l, eps_ - t);
  c.anchor += binom_tail_pair({n_, mu_l}, anchor_l - 1).sf.prob();
  JointTailResult jl = joint_tail_counts(
      n_, coup_left_, upper_dev_count_strict(n_, mu_l, eps_), lower_dev_count(n_, mu_l, eps_ - t));
  c.cross += jl.probability.prob();
  c.trunc += jl.truncation_error;

  return memo_.emplace(t, c).first->second;
}

double SimilarityEvaluator::value_at(std::int64_t k, double t) const {
  if (!feasible_) throw infeasible_error("similarity coupling infeasible");
  const double kk = static_cast<double>(std::max<std::int64_t>(k, 1));
  const Components& c = components(t);
  return std::min(1.0, c.anchor + (kk - 1.0) * c.cross);
}

SimilarityEvaluator::Evaluation SimilarityEvaluator::evaluate(std::int64_t k) const {
  const std::int64_t k_eff = std::max<std::int64_t>(k, 1);
  Evaluation out;
  if (!feasible_) {
    out.probability = std::min(1.0, static_cast<double>(k_eff) * standard_tail_);
    out.slack_t = kNan;
    out.fell_back = true;
    return out;
  }
  const double kk = static_cast<double>(k_eff);

  // 64-point slack grid, then golden-section refinement around the best
  // grid point. Every slack yields a valid bound, so the search only
  // affects tightness. Slack values are quantized so the memo caches hit
  // across successive k queries.
  constexpr int kGridPoints = 64;
  constexpr double kQuantum = 1.0 / (1 << 20);
  auto quantize = [&](double t) {
    double q = std::round(t / (eps_ * kQuantum)) * (eps_ * kQuantum);
    return std::clamp(q, 0.0, eps_);
  };
  auto value = [&](double t) {
    const Components& c = components(t);
    return c.anchor + (kk - 1.0) * c.cross;
  };

  double best_t = 0.0;
  double best_v = std::numeric_limits<double>::infinity();
  int best_i = 0;
  for (int i = 0; i < kGridPoints; ++i) {
    double t = quantize(eps_ * static_cast<double>(i) / (kGridPoints - 1));
    double v = value(t);
    if (v < best_v) {
      best_v = v;
      best_t = t;
      best_i = i;
    }
  }
  double lo = eps_ * static_cast<double>(std::max(best_i - 1, 0)) / (kGridPoints - 1);
  double hi = eps_ * static_cast<double>(std::min(best_i + 1, kGridPoints - 1)) / (kGridPoints - 1);
  constexpr double kGolden = 0.6180339887498949;
  double x1 = quantize(hi - kGolden * (hi - lo));
  double x2 = quantize(lo + kGolden * (hi - lo));
  for (int iter = 0; iter < 32 && hi - lo > 4.0 * eps_ * kQuantum; ++iter) {
    double f1 = value(x1);
    double f2 = value(x2);
    if (f1 < best_v) {
      best_v = f1;
      best_t = x1;
    }
    if (f2 < best_v) {
      best_v = f2;
      best_t = x2;
    }
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      x1 = quantize(hi - kGolden * (hi - lo));
    } else {
      lo = x1;
      x1 = x2;
      x2 = quantize(lo + kGolden * (hi - lo));
    }
  }

  const double standard = std::min(1.0, kk * standard_tail_);
  out.probability = std::min({1.0, best_v, standard});
  out.slack_t = best_t;
  out.truncation_error = (kk - 1.0) * components(best_t).trunc;
  return out;
}

BoundResult similarity_union_prob(const EnsembleSpec& spec, double eps) {
  spec.validate();
  SimilarityEvaluator ev(spec.n, spec.mu, spec.eta, eps);
  SimilarityEvaluator::Evaluation e = ev.evaluate(spec.k);
  BoundResult r;
  r.probability = e.probability;
  r.method = BoundMethod::similarity;
  r.slack_t = e.slack_t;
  r.truncation_error = e.truncation_error;
  r.exact = false;
  r.fell_back_to_standard = e.fell_back;
  return r;
}

}  // namespace simbound
