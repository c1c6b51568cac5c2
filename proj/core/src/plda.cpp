// pldakit/plda.cpp

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

#include "pldakit/plda.hpp"

#include <cmath>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

namespace pldakit {

namespace {

// Clamps eigenvalues of m to at least `abs_floor`.
SymMatrix FloorSpd(const SymMatrix &m, double abs_floor) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m.mat());
  Eigen::VectorXd lam = es.eigenvalues().cwiseMax(abs_floor);
  return SymMatrix(es.eigenvectors() * lam.asDiagonal() *
                   es.eigenvectors().transpose());
}

double LogDetFromLlt(const Eigen::LLT<Eigen::MatrixXd> &llt) {
  return 2.0 * llt.matrixL().toDenseMatrix().diagonal().array().log().sum();
}

}  // namespace

SymMatrix TotalCovariance(const EmbeddingSet &data) {
  const auto n = static_cast<Eigen::Index>(data.records.size());
  if (n < 2)
    throw InvalidArgumentError("TotalCovariance: need at least 2 records");
  Eigen::VectorXd mean = Eigen::VectorXd::Zero(data.dim);
  for (const auto &r : data.records) mean += r.vector;
  mean /= static_cast<double>(n);

  Eigen::MatrixXd cov = Eigen::MatrixXd::Zero(data.dim, data.dim);
  for (const auto &r : data.records) {
    Eigen::VectorXd d = r.vector - mean;
    cov.noalias() += d * d.transpose();
  }
  cov /= static_cast<double>(n);
  return SymMatrix(cov);
}

PldaModel TrainPlda(const EmbeddingSet &data) {
  if (!data.Labeled())
    throw InvalidArgumentError("TrainPlda: set must be fully labeled");

  // std::map keys keep speaker iteration order independent of record order.
  std::map<std::string, std::vector<const EmbeddingRecord *>> by_speaker;
  for (const auto &r : data.records) by_speaker[*r.speaker_id].push_back(&r);

  const auto n_speakers = static_cast<Eigen::Index>(by_speaker.size());
  if (n_speakers < 2)
    throw InvalidArgumentError("TrainPlda: need at least 2 speakers");
  bool any_multi = false;
  for (const auto &[spk, recs] : by_speaker)
    if (recs.size() >= 2) any_multi = true;
  if (!any_multi)
    throw InvalidArgumentError(
        "TrainPlda: no speaker has more than one utterance");

  const Eigen::Index d = data.dim;
  const auto n_total = static_cast<double>(data.records.size());

  Eigen::VectorXd mu = Eigen::VectorXd::Zero(d);
  for (const auto &r : data.records) mu += r.vector;
  mu /= n_total;

  Eigen::MatrixXd within = Eigen::MatrixXd::Zero(d, d);
  Eigen::VectorXd mean_of_means = Eigen::VectorXd::Zero(d);
  std::vector<Eigen::VectorXd> speaker_means;
  speaker_means.reserve(static_cast<size_t>(n_speakers));
  for (const auto &[spk, recs] : by_speaker) {
    Eigen::VectorXd sm = Eigen::VectorXd::Zero(d);
    for (const auto *r : recs) sm += r->vector;
    sm /= static_cast<double>(recs.size());
    for (const auto *r : recs) {
      Eigen::VectorXd dv = r->vector - sm;
      within.noalias() += dv * dv.transpose();
    }
    mean_of_means += sm;
    speaker_means.push_back(std::move(sm));
  }
  within /= n_total;
  mean_of_means /= static_cast<double>(n_speakers);

  Eigen::MatrixXd between = Eigen::MatrixXd::Zero(d, d);
  for (const auto &sm : speaker_means) {
    Eigen::VectorXd dv = sm - mean_of_means;
    between.noalias() += dv * dv.transpose();
  }
  between /= static_cast<double>(n_speakers);

  PldaModel model;
  model.mu = std::move(mu);
  model.phi_b = SymMatrix(between);
  // Keep phi_w strictly positive definite even for degenerate data.
  const double scale =
      std::max({within.trace() / static_cast<double>(d),
                between.trace() / static_cast<double>(d), 1.0});
  model.phi_w = FloorSpd(SymMatrix(within), 1e-10 * scale);
  return model;
}

PldaScorer::PldaScorer(const PldaModel &model) : mu_(model.mu) {
  model.phi_b.CheckSameDim(model.phi_w);
  const Eigen::MatrixXd &phi_b = model.phi_b.mat();
  Eigen::MatrixXd tot = phi_b + model.phi_w.mat();

  Eigen::LLT<Eigen::MatrixXd> llt_tot(tot);
  if (llt_tot.info() != Eigen::Success)
    throw SingularError("PldaScorer: total covariance not positive definite");
  Eigen::MatrixXd tot_inv =
      llt_tot.solve(Eigen::MatrixXd::Identity(tot.rows(), tot.cols()));

  // Schur complement of the 2x2 block same-speaker covariance
  // [[T, Phi_b], [Phi_b, T]].
  Eigen::MatrixXd schur = tot - phi_b * tot_inv * phi_b;
  Eigen::LLT<Eigen::MatrixXd> llt_schur(schur);
  if (llt_schur.info() != Eigen::Success)
    throw SingularError("PldaScorer: same-speaker covariance not invertible");
  Eigen::MatrixXd a =
      llt_schur.solve(Eigen::MatrixXd::Identity(tot.rows(), tot.cols()));

  q_ = tot_inv - a;
  q_ = 0.5 * (q_ + q_.transpose()).eval();
  p_ = tot_inv * phi_b * a;
  p_ = 0.5 * (p_ + p_.transpose()).eval();
  offset_ = -0.5 * (LogDetFromLlt(llt_schur) - LogDetFromLlt(llt_tot));
}

double PldaScorer::Score(const Eigen::VectorXd &enroll,
                         const Eigen::VectorXd &test) const {
  if (enroll.size() != dim() || test.size() != dim())
    throw DimMismatchError("PldaScorer: vector dimension mismatch");
  Eigen::VectorXd e = enroll - mu_;
  Eigen::VectorXd t = test - mu_;
  return 0.5 * e.dot(q_ * e) + 0.5 * t.dot(q_ * t) + e.dot(p_ * t) + offset_;
}

namespace {

// Resolves a trial side: utterance id match first, otherwise all records
// of the named speaker averaged into one enrollment vector.
Eigen::VectorXd ResolveSide(const EmbeddingSet &set, const std::string &id,
                            const char *side) {
  const EmbeddingRecord *rec = set.Find(id);
  if (rec) return rec->vector;
  Eigen::VectorXd sum = Eigen::VectorXd::Zero(set.dim);
  int count = 0;
  for (const auto &r : set.records) {
    if (r.speaker_id && *r.speaker_id == id) {
      sum += r.vector;
      ++count;
    }
  }
  if (count == 0)
    throw InvalidArgumentError(std::string("ScoreTrials: unknown ") + side +
                               " id '" + id + "'");
  return sum / static_cast<double>(count);
}

}  // namespace

TrialSet ScoreTrials(const PldaModel &model, const EmbeddingSet &enroll_set,
                     const EmbeddingSet &test_set, const TrialSet &trials) {
  PldaScorer scorer(model);

  std::unordered_map<std::string, Eigen::VectorXd> enroll_cache, test_cache;
  TrialSet out = trials;
  for (auto &t : out.trials) {
    auto [ei, enew] = enroll_cache.try_emplace(t.enroll_id);
    if (enew) ei->second = ResolveSide(enroll_set, t.enroll_id, "enrollment");
    auto [ti, tnew] = test_cache.try_emplace(t.test_id);
    if (tnew) ti->second = ResolveSide(test_set, t.test_id, "test");
    t.score = scorer.Score(ei->second, ti->second);
  }
  return out;
}

}  // namespace pldakit
