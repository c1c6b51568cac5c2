#ifndef PLDA_ADAPT_TESTS_TEST_UTIL_HPP_
#define PLDA_ADAPT_TESTS_TEST_UTIL_HPP_

#include <random>

#include <Eigen/Dense>

#include "pldakit/symmat.hpp"

namespace test_util {

inline double RelFrob(const Eigen::MatrixXd &a, const Eigen::MatrixXd &b) {
  const double ref = b.norm();
  return ref > 0.0 ? (a - b).norm() / ref : (a - b).norm();
}

inline Eigen::MatrixXd GaussianMatrix(Eigen::Index rows, Eigen::Index cols,
                                      std::mt19937_64 &rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXd m(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = normal(rng);
  return m;
}

inline Eigen::VectorXd GaussianVector(Eigen::Index dim, std::mt19937_64 &rng) {
  return GaussianMatrix(dim, 1, rng).col(0);
}

// A^T A + eps*I: strictly positive definite with spread eigenvalues.
inline pldakit::SymMatrix RandomSpd(Eigen::Index dim, std::mt19937_64 &rng,
                                    double eps = 0.1) {
  Eigen::MatrixXd a = GaussianMatrix(dim, dim, rng);
  return pldakit::SymMatrix(a.transpose() * a / static_cast<double>(dim) +
                            eps * Eigen::MatrixXd::Identity(dim, dim));
}

// A^T A with A having fewer rows than columns: PSD and rank-deficient.
inline pldakit::SymMatrix RandomPsdRankDeficient(Eigen::Index dim,
                                                 Eigen::Index rank,
                                                 std::mt19937_64 &rng) {
  Eigen::MatrixXd a = GaussianMatrix(rank, dim, rng);
  return pldakit::SymMatrix(a.transpose() * a / static_cast<double>(dim));
}

// Random symmetric PSD matrix with eigenvalue scales in [lo, hi].
inline Eigen::MatrixXd RandomSymmetricScaling(Eigen::Index dim, double lo,
                                              double hi,
                                              std::mt19937_64 &rng) {
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(GaussianMatrix(dim, dim, rng));
  Eigen::MatrixXd q = qr.householderQ();
  std::uniform_real_distribution<double> u(lo, hi);
  Eigen::VectorXd s(dim);
  for (Eigen::Index i = 0; i < dim; ++i) s(i) = u(rng);
  return q * s.asDiagonal() * q.transpose();
}

}  // namespace test_util

#endif  // PLDA_ADAPT_TESTS_TEST_UTIL_HPP_
