// pldakit/plda.hpp

// Copyright 2026  The plda-adapt authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef PLDAKIT_PLDA_HPP_
#define PLDAKIT_PLDA_HPP_

#include <Eigen/Dense>

#include "pldakit/embedding.hpp"
#include "pldakit/symmat.hpp"
#include "pldakit/trials.hpp"

namespace pldakit {

/// Two-covariance PLDA model: global mean plus between- and
/// within-speaker covariances.
struct PldaModel {
  Eigen::VectorXd mu;
  SymMatrix phi_b;
  SymMatrix phi_w;

  Eigen::Index dim() const { return mu.size(); }
};

/// Maximum-likelihood (divide-by-N) total covariance about the sample
/// mean, ignoring speaker labels.  Throws InvalidArgumentError with
/// fewer than two records.
SymMatrix TotalCovariance(const EmbeddingSet &data);

/// Moment-based two-covariance estimation from a labeled set:
/// mu is the global mean, phi_w the pooled within-speaker scatter
/// (divide by total utterance count), phi_b the unweighted covariance of
/// speaker means.  Requires >= 2 speakers and at least one speaker with
/// >= 2 utterances.
PldaModel TrainPlda(const EmbeddingSet &data);

/// Precomputed verification scorer for one model.  The log-likelihood
/// ratio log p(e,t|same) - log p(e|.) - log p(t|.) reduces to the
/// quadratic form  0.5 e'Qe + 0.5 t'Qt + e'Pt + const  after block
/// inversion of the same-speaker covariance, so per-trial cost is two
/// matrix-vector products.
class PldaScorer {
 public:
  explicit PldaScorer(const PldaModel &model);

  double Score(const Eigen::VectorXd &enroll, const Eigen::VectorXd &test) const;

  Eigen::Index dim() const { return mu_.size(); }

 private:
  Eigen::VectorXd mu_;
  Eigen::MatrixXd q_;  // T^{-1} - A
  Eigen::MatrixXd p_;  // T^{-1} Phi_b A
  double offset_;
};

/// Scores every trial in `trials` against the enrollment and test sets.
/// Results are independent of trial order.  Throws InvalidArgumentError
/// for an unknown utterance id.
TrialSet ScoreTrials(const PldaModel &model, const EmbeddingSet &enroll_set,
                     const EmbeddingSet &test_set, const TrialSet &trials);

}  // namespace pldakit

#endif  // PLDAKIT_PLDA_HPP_
