// pldakit/symmat.hpp

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

#ifndef PLDAKIT_SYMMAT_HPP_
#define PLDAKIT_SYMMAT_HPP_

#include <Eigen/Dense>

#include "pldakit/errors.hpp"

namespace pldakit {

/// Dense symmetric matrix.  Construction symmetrizes the input as
/// (M + M^T)/2, so the stored entries always satisfy m(i,j) == m(j,i)
/// exactly and downstream eigensolvers can rely on it.
class SymMatrix {
 public:
  SymMatrix() = default;

  explicit SymMatrix(const Eigen::MatrixXd &m) {
    if (m.rows() != m.cols() || m.rows() < 1)
      throw DimMismatchError("SymMatrix: input must be square and nonempty");
    mat_ = 0.5 * (m + m.transpose());
  }

  static SymMatrix Identity(Eigen::Index dim) {
    return SymMatrix(Eigen::MatrixXd::Identity(dim, dim));
  }

  static SymMatrix Zero(Eigen::Index dim) {
    return SymMatrix(Eigen::MatrixXd::Zero(dim, dim));
  }

  Eigen::Index dim() const { return mat_.rows(); }
  const Eigen::MatrixXd &mat() const { return mat_; }
  double operator()(Eigen::Index i, Eigen::Index j) const { return mat_(i, j); }

  double trace() const { return mat_.trace(); }

  SymMatrix operator+(const SymMatrix &o) const {
    CheckSameDim(o);
    return SymMatrix(mat_ + o.mat_);
  }
  SymMatrix operator-(const SymMatrix &o) const {
    CheckSameDim(o);
    return SymMatrix(mat_ - o.mat_);
  }
  friend SymMatrix operator*(double s, const SymMatrix &m) {
    return SymMatrix(s * m.mat_);
  }

  void CheckSameDim(const SymMatrix &o) const {
    if (dim() != o.dim())
      throw DimMismatchError("SymMatrix: dimension mismatch");
  }

 private:
  Eigen::MatrixXd mat_;
};

/// Result of simultaneously diagonalizing a symmetric pair (Y, Z):
/// basis^T Z basis == I and basis^T Y basis == diag(eigvals).
struct SimDiag {
  Eigen::MatrixXd basis;
  Eigen::VectorXd eigvals;  // descending, all >= 0
};

/// Relative eigenvalue floor used before inverting or taking roots of
/// covariance estimates: 1e-10 times the largest eigenvalue magnitude.
double EigvalFloor(const Eigen::VectorXd &eigvals);

/// Symmetric PSD square root: R with R*R == M.  Eigenvalues below the
/// relative floor are clamped to the floor first.  Throws NotPsdError if
/// M has an eigenvalue below -floor.
SymMatrix PsdSqrt(const SymMatrix &m);

/// Symmetric inverse square root: W with W*M*W == I.  Rank-deficient
/// directions are floored rather than rejected; throws SingularError only
/// for a genuinely negative eigenvalue or an identically zero matrix.
SymMatrix PsdInvSqrt(const SymMatrix &m);

/// Simultaneous diagonalization of (Y, Z) with Z positive definite,
/// reduced to a symmetric eigenproblem: W = Z^{-1/2}, W*Y*W = U L U^T,
/// basis = W*U.  Eigenvalues are sorted descending and each basis column
/// is sign-fixed so its largest-magnitude entry is positive.
SimDiag SimultaneousDiag(const SymMatrix &y, const SymMatrix &z);

}  // namespace pldakit

#endif  // PLDAKIT_SYMMAT_HPP_
