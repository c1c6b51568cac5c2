// pldakit/preprocess.cpp

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

#include "pldakit/preprocess.hpp"

#include <map>
#include <string>
#include <vector>

namespace pldakit {

Eigen::VectorXd ComputeMean(const EmbeddingSet &data) {
  if (data.records.empty())
    throw InvalidArgumentError("ComputeMean: empty embedding set");
  Eigen::VectorXd mean = Eigen::VectorXd::Zero(data.dim);
  for (const auto &r : data.records) mean += r.vector;
  return mean / static_cast<double>(data.records.size());
}

EmbeddingSet Center(const EmbeddingSet &data, const Eigen::VectorXd &mean) {
  if (mean.size() != data.dim)
    throw DimMismatchError("Center: mean dimension mismatch");
  EmbeddingSet out;
  out.dim = data.dim;
  out.records.reserve(data.records.size());
  for (const auto &r : data.records)
    out.records.push_back({r.utterance_id, r.speaker_id, r.vector - mean});
  return out;
}

LdaProjection LdaFit(const EmbeddingSet &data, Eigen::Index out_dim) {
  if (!data.Labeled())
    throw InvalidArgumentError("LdaFit: set must be fully labeled");

  std::map<std::string, std::vector<const EmbeddingRecord *>> classes;
  for (const auto &r : data.records) classes[*r.speaker_id].push_back(&r);
  const auto n_classes = static_cast<Eigen::Index>(classes.size());
  if (n_classes < 2) throw InvalidArgumentError("LdaFit: need >= 2 classes");
  if (out_dim < 1 || out_dim > data.dim || out_dim > n_classes - 1)
    throw InvalidArgumentError(
        "LdaFit: out_dim must be in [1, min(in_dim, classes - 1)]");

  const Eigen::Index d = data.dim;
  const auto n_total = static_cast<double>(data.records.size());
  Eigen::VectorXd global_mean = ComputeMean(data);

  Eigen::MatrixXd s_w = Eigen::MatrixXd::Zero(d, d);
  Eigen::MatrixXd s_b = Eigen::MatrixXd::Zero(d, d);
  for (const auto &[cls, recs] : classes) {
    Eigen::VectorXd cm = Eigen::VectorXd::Zero(d);
    for (const auto *r : recs) cm += r->vector;
    cm /= static_cast<double>(recs.size());
    for (const auto *r : recs) {
      Eigen::VectorXd dv = r->vector - cm;
      s_w.noalias() += dv * dv.transpose();
    }
    Eigen::VectorXd db = cm - global_mean;
    s_b.noalias() += static_cast<double>(recs.size()) * db * db.transpose();
  }
  s_w /= n_total;
  s_b /= n_total;

  // basis^T S_w basis == I by construction, so projected training data is
  // white within class.
  SimDiag sd = SimultaneousDiag(SymMatrix(s_b), SymMatrix(s_w));

  LdaProjection p;
  p.in_dim = d;
  p.out_dim = out_dim;
  p.mean = std::move(global_mean);
  p.basis = sd.basis.leftCols(out_dim).transpose();
  return p;
}

EmbeddingSet LdaApply(const LdaProjection &p, const EmbeddingSet &data) {
  if (p.in_dim != data.dim)
    throw DimMismatchError("LdaApply: projection input dimension mismatch");
  EmbeddingSet out;
  out.dim = p.out_dim;
  out.records.reserve(data.records.size());
  for (const auto &r : data.records)
    out.records.push_back(
        {r.utterance_id, r.speaker_id, p.basis * (r.vector - p.mean)});
  return out;
}

}  // namespace pldakit
