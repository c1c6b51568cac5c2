// pldakit/preprocess.hpp

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

#ifndef PLDAKIT_PREPROCESS_HPP_
#define PLDAKIT_PREPROCESS_HPP_

#include "pldakit/embedding.hpp"
#include "pldakit/symmat.hpp"

namespace pldakit {

/// Fisher LDA projection: rows of `basis` are generalized eigenvectors of
/// (between-class scatter, within-class scatter), normalized so projected
/// training data has unit within-class covariance.
struct LdaProjection {
  Eigen::Index in_dim = 0;
  Eigen::Index out_dim = 0;
  Eigen::MatrixXd basis;  // out_dim x in_dim
  Eigen::VectorXd mean;   // in_dim
};

Eigen::VectorXd ComputeMean(const EmbeddingSet &data);

/// Subtracts `mean` from every vector; ids and labels preserved.
EmbeddingSet Center(const EmbeddingSet &data, const Eigen::VectorXd &mean);

/// Fits LDA on a labeled set.  out_dim must not exceed in_dim or the
/// number of classes minus one.  Scatter matrices use count-weighted
/// class means (standard Fisher).
LdaProjection LdaFit(const EmbeddingSet &data, Eigen::Index out_dim);

/// Maps every vector to basis * (v - mean).
EmbeddingSet LdaApply(const LdaProjection &p, const EmbeddingSet &data);

}  // namespace pldakit

#endif  // PLDAKIT_PREPROCESS_HPP_
