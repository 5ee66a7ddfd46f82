// Copyright (c) the simbound authors.
// SPDX-License-Identifier: Apache-2.0

#include "simbound/coupling.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "simbound/errors.hpp"

namespace simbound {

namespace {

constexpr double kCellTol = 1e-12;

void require_unit_interval(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw infeasible_error(std::string(name) + " must lie in [0,1]");
  }
}

double clamp_cell(double v, const char* name) {
  if (v < -kCellTol || v > 1.0 + kCellTol) {
    throw infeasible_error(std::string("infeasible triple: cell ") + name +
                           " = " + std::to_string(v) + " outside [0,1]");
  }
  return std::clamp(v, 0.0, 1.0);
}

}  // namespace

double independence_similarity(double mu1, double mu2) {
  return mu1 * mu2 + (1.0 - mu1) * (1.0 - mu2);
}

bool feasible_triple(double p1, double p2, double eta) {
  if (!(p1 >= 0.0 && p1 <= 1.0) || !(p2 >= 0.0 && p2 <= 1.0) ||
      !(eta >= 0.0 && eta <= 1.0)) {
    return false;
  }
  return std::fabs(p1 - p2) <= 1.0 - eta + 2.0 * kCellTol &&
         p1 + p2 + eta >= 1.0 - 2.0 * kCellTol &&
         p1 + p2 <= 1.0 + eta + 2.0 * kCellTol;
}

PairwiseJoint joint_from_marginals(double p1, double p2, double eta) {
  require_unit_interval(p1, "p1");
  require_unit_interval(p2, "p2");
  require_unit_interval(eta, "eta");

  PairwiseJoint j;
  j.p1 = p1;
  j.p2 = p2;
  j.eta = eta;
  j.p11 = clamp_cell((p1 + p2 + eta - 1.0) / 2.0, "p11");
  j.p10 = clamp_cell((1.0 + p1 - p2 - eta) / 2.0, "p10");
  j.p01 = clamp_cell((1.0 + p2 - p1 - eta) / 2.0, "p01");
  j.p00 = clamp_cell((1.0 + eta - p1 - p2) / 2.0, "p00");
  return j;
}

bool factorizable(const PairwiseJoint& joint) {
  if (joint.p11 == 0.0) return joint.p1 * joint.p2 <= kCellTol;
  return joint.p11 >= joint.p1 * joint.p2 - kCellTol;
}

CouplingParams factorize(const PairwiseJoint& joint) {
  const double product = joint.p1 * joint.p2;
  if (joint.p11 == 0.0) {
    if (product > kCellTol) {
      throw infeasible_error(
          "coupling infeasible: p11 = 0 with positive marginals");
    }
    // Degenerate independence: at least one query is almost surely 0.
    return {joint.p1, joint.p2, 1.0};
  }
  if (joint.p11 < product - kCellTol) {
    throw infeasible_error(
        "coupling infeasible: negatively correlated errors (p11 < p1*p2)");
  }
  CouplingParams c;
  c.px1 = std::min(joint.p11 / (joint.p01 + joint.p11), 1.0);
  c.px2 = std::min(joint.p11 / (joint.p10 + joint.p11), 1.0);
  c.pw = std::min((joint.p10 + joint.p11) * (joint.p01 + joint.p11) / joint.p11, 1.0);
  return c;
}

bool nb_feasible(double mu, double eta) {
  if (!(mu > 0.0 && mu <= 1.0)) return false;
  if (!(eta >= 0.0 && eta <= 1.0)) return false;
  return eta >= independence_similarity(mu, mu) - kCellTol;
}

NaiveBayesParams nb_params(double mu, double eta) {
  if (!(mu > 0.0 && mu <= 1.0)) {
    throw infeasible_error("nb_params requires mu in (0,1]");
  }
  require_unit_interval(eta, "eta");
  if (eta < independence_similarity(mu, mu) - kCellTol) {
    throw infeasible_error(
        "nb infeasible: similarity below the independence level");
  }
  NaiveBayesParams p;
  p.mu = mu;
  p.eta = eta;
  p.px = std::min(1.0 - (1.0 - eta) / (2.0 * mu), 1.0);
  if (!(p.px > 0.0)) {
    throw infeasible_error("nb infeasible: px outside (0,1]");
  }
  p.pw = std::min(mu / p.px, 1.0);
  return p;
}

}  // namespace simbound
