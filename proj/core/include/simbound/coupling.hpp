// Copyright (c) the simbound authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef SIMBOUND_COUPLING_HPP
#define SIMBOUND_COUPLING_HPP

namespace simbound {

// Joint law of two 0/1 queries determined by their marginals and their
// agreement probability eta = P(q1 = q2). Cell p11 = P(q1=1, q2=1) etc.
struct PairwiseJoint {
  double p1 = 0.0;
  double p2 = 0.0;
  double eta = 0.0;
  double p11 = 0.0;
  double p10 = 0.0;
  double p01 = 0.0;
  double p00 = 0.0;
};

// Success probabilities of three independent Bernoulli variables X1, X2, W
// such that (X1*W, X2*W) has the given pairwise joint law.
struct CouplingParams {
  double px1 = 0.0;
  double px2 = 0.0;
  double pw = 0.0;
};

// Symmetric k-model version: q_i = X_i * W with common P(X_i=1) = px and
// P(W=1) = pw, reproducing error rate mu and pairwise similarity eta.
struct NaiveBayesParams {
  double mu = 0.0;
  double eta = 0.0;
  double px = 0.0;
  double pw = 0.0;
};

// Similarity two queries would have if their mistakes were independent.
double independence_similarity(double mu1, double mu2);

// True iff (p1, p2, eta) describes a valid joint law (all four cells
// nonnegative up to a 1e-12 clamp).
bool feasible_triple(double p1, double p2, double eta);

// Builds the joint law; throws infeasible_error when any cell falls outside
// [-1e-12, 1+1e-12]. Cells within the clamp are snapped into [0,1].
PairwiseJoint joint_from_marginals(double p1, double p2, double eta);

// True iff the joint admits the X*W coupling (p11 >= p1*p2 up to 1e-12).
bool factorizable(const PairwiseJoint& joint);

// Bernoulli factorization of the joint; throws infeasible_error when the
// error correlation is negative (p11 < p1*p2) or when p11 = 0 with both
// marginals positive.
CouplingParams factorize(const PairwiseJoint& joint);

// True iff nb_params(mu, eta) is feasible.
bool nb_feasible(double mu, double eta);

// Unique solution of E[q] = px*pw and P(qi = qj) = 1 - 2*pw*px*(1-px).
// Requires mu in (0,1] and eta at least the independence similarity;
// throws infeasible_error otherwise.
NaiveBayesParams nb_params(double mu, double eta);

}  // namespace simbound

#endif
