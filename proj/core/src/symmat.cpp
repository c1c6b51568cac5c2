// pldakit/symmat.cpp

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

#include "pldakit/symmat.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace pldakit {

namespace {

constexpr double kRelFloor = 1e-10;

Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> Decompose(const SymMatrix &m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m.mat());
  if (es.info() != Eigen::Success)
    throw Error("eigendecomposition failed to converge");
  return es;
}

}  // namespace

double EigvalFloor(const Eigen::VectorXd &eigvals) {
  return kRelFloor * eigvals.cwiseAbs().maxCoeff();
}

SymMatrix PsdSqrt(const SymMatrix &m) {
  auto es = Decompose(m);
  Eigen::VectorXd lam = es.eigenvalues();
  const double floor = EigvalFloor(lam);
  if (lam.minCoeff() < -floor)
    throw NotPsdError("PsdSqrt: matrix has negative eigenvalue");
  Eigen::VectorXd root = lam.cwiseMax(0.0).cwiseSqrt();
  return SymMatrix(es.eigenvectors() * root.asDiagonal() *
                   es.eigenvectors().transpose());
}

SymMatrix PsdInvSqrt(const SymMatrix &m) {
  auto es = Decompose(m);
  Eigen::VectorXd lam = es.eigenvalues();
  const double floor = EigvalFloor(lam);
  if (lam.minCoeff() < -floor)
    throw SingularError("PsdInvSqrt: matrix has negative eigenvalue");
  if (lam.maxCoeff() <= 0.0)
    throw SingularError("PsdInvSqrt: matrix is zero");
  // Rank-deficient covariance estimates are common with few speakers;
  // flooring keeps them invertible.
  Eigen::VectorXd floored = lam.cwiseMax(floor);
  Eigen::VectorXd invroot = floored.cwiseSqrt().cwiseInverse();
  return SymMatrix(es.eigenvectors() * invroot.asDiagonal() *
                   es.eigenvectors().transpose());
}

SimDiag SimultaneousDiag(const SymMatrix &y, const SymMatrix &z) {
  y.CheckSameDim(z);
  const SymMatrix w = PsdInvSqrt(z);
  auto es = Decompose(SymMatrix(w.mat() * y.mat() * w.mat()));

  const Eigen::Index d = y.dim();
  Eigen::VectorXd lam = es.eigenvalues().cwiseMax(0.0);
  Eigen::MatrixXd basis = w.mat() * es.eigenvectors();

  // Canonical form: eigenvalues descending, columns sign-fixed so the
  // largest-magnitude entry of each is positive.
  std::vector<Eigen::Index> order(static_cast<size_t>(d));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index a, Eigen::Index b) { return lam(a) > lam(b); });

  SimDiag out;
  out.basis.resize(d, d);
  out.eigvals.resize(d);
  for (Eigen::Index j = 0; j < d; ++j) {
    out.eigvals(j) = lam(order[static_cast<size_t>(j)]);
    Eigen::VectorXd col = basis.col(order[static_cast<size_t>(j)]);
    Eigen::Index imax;
    col.cwiseAbs().maxCoeff(&imax);
    if (col(imax) < 0.0) col = -col;
    out.basis.col(j) = col;
  }
  return out;
}

}  // namespace pldakit
