#include <doctest.h>

#include <random>

#include "pldakit/preprocess.hpp"
#include "test_util.hpp"

using namespace pldakit;
using test_util::GaussianVector;

namespace {

EmbeddingSet MakeSet(Eigen::Index dim) {
  EmbeddingSet set;
  set.dim = dim;
  return set;
}

}  // namespace

TEST_CASE("ComputeMean basics") {
  auto set = MakeSet(2);
  set.Add("a", std::nullopt, Eigen::Vector2d(1.0, 1.0));
  set.Add("b", std::nullopt, Eigen::Vector2d(3.0, 3.0));
  CHECK((ComputeMean(set) - Eigen::Vector2d(2.0, 2.0)).norm() == 0.0);

  auto single = MakeSet(2);
  single.Add("a", std::nullopt, Eigen::Vector2d(5.0, -1.0));
  CHECK(ComputeMean(single) == single.records[0].vector);

  CHECK_THROWS_AS(ComputeMean(MakeSet(2)), InvalidArgumentError);
}

TEST_CASE("Center removes the mean and composes additively") {
  std::mt19937_64 rng(1);
  auto set = MakeSet(4);
  for (int i = 0; i < 50; ++i)
    set.Add("u" + std::to_string(i), "s" + std::to_string(i % 5),
            GaussianVector(4, rng));

  EmbeddingSet centered = Center(set, ComputeMean(set));
  CHECK(ComputeMean(centered).norm() < 1e-12);
  CHECK(centered.records[0].speaker_id == set.records[0].speaker_id);

  Eigen::VectorXd m1 = GaussianVector(4, rng);
  Eigen::VectorXd m2 = GaussianVector(4, rng);
  EmbeddingSet twice = Center(Center(set, m1), m2);
  EmbeddingSet once = Center(set, m1 + m2);
  for (size_t i = 0; i < set.records.size(); ++i)
    CHECK((twice.records[i].vector - once.records[i].vector).norm() < 1e-12);

  CHECK_THROWS_AS(Center(set, Eigen::Vector2d(0.0, 0.0)), DimMismatchError);
}

TEST_CASE("LdaFit matches the two-class closed form") {
  std::mt19937_64 rng(2);
  auto set = MakeSet(2);
  Eigen::Vector2d mu1(2.0, 0.5), mu2(-2.0, -0.5);
  Eigen::Matrix2d noise;
  noise << 0.8, 0.3, 0.3, 0.6;
  for (int i = 0; i < 200; ++i) {
    set.Add("a" + std::to_string(i), "c1",
            mu1 + noise * GaussianVector(2, rng));
    set.Add("b" + std::to_string(i), "c2",
            mu2 + noise * GaussianVector(2, rng));
  }
  LdaProjection p = LdaFit(set, 1);

  // Closed form for two classes: direction ~ S_w^{-1} (mu1 - mu2).
  Eigen::Matrix2d s_w = Eigen::Matrix2d::Zero();
  Eigen::Vector2d m1 = Eigen::Vector2d::Zero(), m2 = Eigen::Vector2d::Zero();
  for (const auto &r : set.records)
    (*r.speaker_id == "c1" ? m1 : m2) += r.vector;
  m1 /= 200.0;
  m2 /= 200.0;
  for (const auto &r : set.records) {
    Eigen::Vector2d d = r.vector - (*r.speaker_id == "c1" ? m1 : m2);
    s_w += d * d.transpose();
  }
  s_w /= 400.0;
  Eigen::Vector2d oracle = s_w.inverse() * (m1 - m2);
  double cosine = std::abs(p.basis.row(0).dot(oracle.normalized())) /
                  p.basis.row(0).norm();
  CHECK(cosine > 0.999);
}

TEST_CASE("LdaFit whitens the within-class scatter") {
  std::mt19937_64 rng(3);
  auto set = MakeSet(6);
  for (int c = 0; c < 8; ++c) {
    Eigen::VectorXd center = 3.0 * GaussianVector(6, rng);
    for (int i = 0; i < 50; ++i)
      set.Add("c" + std::to_string(c) + "_" + std::to_string(i),
              "class" + std::to_string(c), center + GaussianVector(6, rng));
  }
  LdaProjection p = LdaFit(set, 4);
  EmbeddingSet proj = LdaApply(p, set);

  Eigen::MatrixXd s_w = Eigen::MatrixXd::Zero(4, 4);
  for (int c = 0; c < 8; ++c) {
    Eigen::VectorXd cm = Eigen::VectorXd::Zero(4);
    int n = 0;
    for (const auto &r : proj.records)
      if (*r.speaker_id == "class" + std::to_string(c)) {
        cm += r.vector;
        ++n;
      }
    cm /= n;
    for (const auto &r : proj.records)
      if (*r.speaker_id == "class" + std::to_string(c)) {
        Eigen::VectorXd d = r.vector - cm;
        s_w += d * d.transpose();
      }
  }
  s_w /= static_cast<double>(proj.records.size());
  CHECK((s_w - Eigen::MatrixXd::Identity(4, 4)).norm() < 1e-6);
}

TEST_CASE("LdaFit eigenvalues are invariant to invertible input transforms") {
  std::mt19937_64 rng(4);
  auto set = MakeSet(4);
  for (int c = 0; c < 5; ++c) {
    Eigen::VectorXd center = 2.0 * GaussianVector(4, rng);
    for (int i = 0; i < 30; ++i)
      set.Add("u" + std::to_string(c * 100 + i), "s" + std::to_string(c),
              center + GaussianVector(4, rng));
  }
  Eigen::MatrixXd a = test_util::GaussianMatrix(4, 4, rng) +
                      4.0 * Eigen::MatrixXd::Identity(4, 4);
  auto transformed = MakeSet(4);
  for (const auto &r : set.records)
    transformed.Add(r.utterance_id, r.speaker_id, a * r.vector);

  // Compare generalized eigenvalues via the projected scatter ratio on
  // each basis row (basis rows are S_w-orthonormal).
  LdaProjection p1 = LdaFit(set, 3);
  LdaProjection p2 = LdaFit(transformed, 3);
  // Projected between-class scatter diagonal equals the eigenvalues.
  auto between_diag = [](const LdaProjection &p, const EmbeddingSet &data) {
    EmbeddingSet proj = LdaApply(p, data);
    Eigen::VectorXd gm = ComputeMean(proj);
    Eigen::MatrixXd s_b = Eigen::MatrixXd::Zero(p.out_dim, p.out_dim);
    for (int c = 0; c < 5; ++c) {
      Eigen::VectorXd cm = Eigen::VectorXd::Zero(p.out_dim);
      int n = 0;
      for (const auto &r : proj.records)
        if (*r.speaker_id == "s" + std::to_string(c)) {
          cm += r.vector;
          ++n;
        }
      cm /= n;
      s_b += n * (cm - gm) * (cm - gm).transpose();
    }
    s_b /= static_cast<double>(proj.records.size());
    return Eigen::VectorXd(s_b.diagonal());
  };
  Eigen::VectorXd d1 = between_diag(p1, set);
  Eigen::VectorXd d2 = between_diag(p2, transformed);
  CHECK((d1 - d2).norm() < 1e-9 * d1.norm());
}

TEST_CASE("LdaFit argument validation") {
  std::mt19937_64 rng(5);
  auto set = MakeSet(3);
  for (int i = 0; i < 10; ++i)
    set.Add("u" + std::to_string(i), "s" + std::to_string(i % 2),
            GaussianVector(3, rng));
  CHECK_THROWS_AS(LdaFit(set, 2), InvalidArgumentError);  // > classes - 1
  CHECK_THROWS_AS(LdaFit(set, 0), InvalidArgumentError);

  auto one_class = MakeSet(3);
  for (int i = 0; i < 4; ++i)
    one_class.Add("u" + std::to_string(i), "s0", GaussianVector(3, rng));
  CHECK_THROWS_AS(LdaFit(one_class, 1), InvalidArgumentError);
}

TEST_CASE("LdaApply basics") {
  LdaProjection identity;
  identity.in_dim = 3;
  identity.out_dim = 3;
  identity.basis = Eigen::MatrixXd::Identity(3, 3);
  identity.mean = Eigen::VectorXd::Zero(3);

  std::mt19937_64 rng(6);
  auto set = MakeSet(3);
  set.Add("a", std::nullopt, GaussianVector(3, rng));
  EmbeddingSet out = LdaApply(identity, set);
  CHECK(out.records[0].vector == set.records[0].vector);

  CHECK(LdaApply(identity, MakeSet(3)).records.empty());
  CHECK_THROWS_AS(LdaApply(identity, MakeSet(4)), DimMismatchError);
}
