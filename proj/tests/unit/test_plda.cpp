#include <doctest.h>

#include <cmath>
#include <random>

#include "pldakit/plda.hpp"
#include "pldakit/symmat.hpp"
#include "test_util.hpp"

using namespace pldakit;
using test_util::GaussianVector;
using test_util::RandomSpd;
using test_util::RelFrob;

namespace {

EmbeddingSet MakeSet(Eigen::Index dim) {
  EmbeddingSet set;
  set.dim = dim;
  return set;
}

// Independent oracle: log-density of N(0, cov) evaluated with LU-based
// inverse and determinant, no shared code with PldaScorer.
double LogGaussian(const Eigen::VectorXd &x, const Eigen::MatrixXd &cov) {
  Eigen::FullPivLU<Eigen::MatrixXd> lu(cov);
  const double quad = x.dot(lu.solve(x));
  const double logdet = std::log(lu.determinant());
  return -0.5 * quad - 0.5 * logdet -
         0.5 * static_cast<double>(x.size()) * std::log(2.0 * M_PI);
}

double OracleLlr(const PldaModel &m, const Eigen::VectorXd &enroll,
                 const Eigen::VectorXd &test) {
  const Eigen::Index d = m.dim();
  Eigen::VectorXd e = enroll - m.mu, t = test - m.mu;
  Eigen::MatrixXd tot = m.phi_b.mat() + m.phi_w.mat();
  Eigen::MatrixXd same(2 * d, 2 * d);
  same << tot, m.phi_b.mat(), m.phi_b.mat(), tot;
  Eigen::VectorXd stacked(2 * d);
  stacked << e, t;
  return LogGaussian(stacked, same) - LogGaussian(e, tot) -
         LogGaussian(t, tot);
}

}  // namespace

TEST_CASE("TotalCovariance two-point case") {
  auto set = MakeSet(2);
  set.Add("a", std::nullopt, Eigen::Vector2d(0.0, 0.0));
  set.Add("b", std::nullopt, Eigen::Vector2d(2.0, 0.0));
  SymMatrix c = TotalCovariance(set);
  CHECK(c(0, 0) == doctest::Approx(1.0));
  CHECK(c(1, 1) == doctest::Approx(0.0));
  CHECK(c(0, 1) == doctest::Approx(0.0));
}

TEST_CASE("TotalCovariance of identical records is zero") {
  auto set = MakeSet(3);
  for (int i = 0; i < 5; ++i)
    set.Add("u" + std::to_string(i), std::nullopt,
            Eigen::Vector3d(1.0, 2.0, 3.0));
  CHECK(TotalCovariance(set).mat().norm() == doctest::Approx(0.0));
}

TEST_CASE("TotalCovariance matches double-loop oracle and ignores order") {
  std::mt19937_64 rng(17);
  auto set = MakeSet(4);
  for (int i = 0; i < 100; ++i)
    set.Add("u" + std::to_string(i), std::nullopt, GaussianVector(4, rng));

  // Brute force: accumulate E[xx^T] and E[x] separately.
  Eigen::MatrixXd second = Eigen::MatrixXd::Zero(4, 4);
  Eigen::VectorXd first = Eigen::VectorXd::Zero(4);
  for (const auto &r : set.records) {
    second += r.vector * r.vector.transpose();
    first += r.vector;
  }
  second /= 100.0;
  first /= 100.0;
  Eigen::MatrixXd oracle = second - first * first.transpose();
  CHECK(RelFrob(TotalCovariance(set).mat(), oracle) < 1e-12);

  auto shuffled = set;
  std::shuffle(shuffled.records.begin(), shuffled.records.end(), rng);
  CHECK(RelFrob(TotalCovariance(shuffled).mat(), TotalCovariance(set).mat()) <
        1e-12);
}

TEST_CASE("TotalCovariance needs two records") {
  auto set = MakeSet(2);
  set.Add("a", std::nullopt, Eigen::Vector2d(1.0, 1.0));
  CHECK_THROWS_AS(TotalCovariance(set), InvalidArgumentError);
}

TEST_CASE("TrainPlda hand-computable 1-D case") {
  auto set = MakeSet(1);
  Eigen::VectorXd v(1);
  auto add = [&](const char *utt, const char *spk, double x) {
    v(0) = x;
    set.Add(utt, spk, v);
  };
  add("a1", "s1", -1.5);
  add("a2", "s1", -0.5);
  add("b1", "s2", 0.5);
  add("b2", "s2", 1.5);

  PldaModel m = TrainPlda(set);
  CHECK(m.mu(0) == doctest::Approx(0.0));
  CHECK(m.phi_w(0, 0) == doctest::Approx(0.25));
  CHECK(m.phi_b(0, 0) == doctest::Approx(1.0));
}

TEST_CASE("TrainPlda floors degenerate within-speaker covariance") {
  auto set = MakeSet(2);
  set.Add("a1", "s1", Eigen::Vector2d(1.0, 0.0));
  set.Add("a2", "s1", Eigen::Vector2d(1.0, 0.0));
  set.Add("b1", "s2", Eigen::Vector2d(-1.0, 0.0));
  set.Add("b2", "s2", Eigen::Vector2d(-1.0, 0.0));
  PldaModel m = TrainPlda(set);
  CHECK(m.phi_w.mat().norm() < 1e-8);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m.phi_w.mat());
  CHECK(es.eigenvalues().minCoeff() > 0.0);  // still invertible
}

TEST_CASE("TrainPlda error paths") {
  auto one_speaker = MakeSet(1);
  Eigen::VectorXd v(1);
  v << 1.0;
  one_speaker.Add("a1", "s1", v);
  one_speaker.Add("a2", "s1", v);
  CHECK_THROWS_AS(TrainPlda(one_speaker), InvalidArgumentError);

  auto singles = MakeSet(1);
  singles.Add("a1", "s1", v);
  v << 2.0;
  singles.Add("b1", "s2", v);
  CHECK_THROWS_AS(TrainPlda(singles), InvalidArgumentError);
}

TEST_CASE("score is zero when phi_b vanishes") {
  std::mt19937_64 rng(23);
  PldaModel m;
  m.mu = Eigen::VectorXd::Zero(4);
  m.phi_b = SymMatrix::Zero(4);
  m.phi_w = RandomSpd(4, rng);
  PldaScorer scorer(m);
  for (int i = 0; i < 5; ++i)
    CHECK(scorer.Score(GaussianVector(4, rng), GaussianVector(4, rng)) ==
          doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("1-D score matches closed form and density oracle") {
  PldaModel m;
  m.mu = Eigen::VectorXd::Zero(1);
  m.phi_b = SymMatrix::Identity(1);
  m.phi_w = SymMatrix::Identity(1);
  PldaScorer scorer(m);
  Eigen::VectorXd zero = Eigen::VectorXd::Zero(1);

  const double expect = -0.5 * std::log(3.0) + std::log(2.0);
  CHECK(scorer.Score(zero, zero) == doctest::Approx(expect).epsilon(1e-12));
  CHECK(scorer.Score(zero, zero) ==
        doctest::Approx(OracleLlr(m, zero, zero)).epsilon(1e-10));
}

TEST_CASE("score matches density oracle on random models") {
  std::mt19937_64 rng(31);
  for (int rep = 0; rep < 5; ++rep) {
    PldaModel m;
    m.mu = GaussianVector(6, rng);
    m.phi_b = test_util::RandomPsdRankDeficient(6, 4, rng);
    m.phi_w = RandomSpd(6, rng);
    PldaScorer scorer(m);
    Eigen::VectorXd e = GaussianVector(6, rng);
    Eigen::VectorXd t = GaussianVector(6, rng);
    CHECK(scorer.Score(e, t) ==
          doctest::Approx(OracleLlr(m, e, t)).epsilon(1e-9));
    CHECK(scorer.Score(e, t) == doctest::Approx(scorer.Score(t, e)));
  }
}

TEST_CASE("score increases as test approaches enrollment") {
  std::mt19937_64 rng(37);
  PldaModel m;
  m.mu = Eigen::VectorXd::Zero(8);
  m.phi_b = RandomSpd(8, rng);
  m.phi_w = RandomSpd(8, rng);
  PldaScorer scorer(m);

  SimDiag sd = SimultaneousDiag(m.phi_b, m.phi_w);
  Eigen::VectorXd dir = sd.basis.col(0).normalized();
  Eigen::VectorXd e = 2.0 * dir;
  double prev = scorer.Score(e, -2.0 * dir);
  for (double c = -1.5; c <= 2.0 + 1e-9; c += 0.5) {
    double cur = scorer.Score(e, c * dir);
    CHECK(cur > prev);
    prev = cur;
  }
}

TEST_CASE("ScoreTrials basics") {
  std::mt19937_64 rng(41);
  PldaModel m;
  m.mu = Eigen::VectorXd::Zero(3);
  m.phi_b = RandomSpd(3, rng);
  m.phi_w = RandomSpd(3, rng);

  auto enroll = MakeSet(3);
  auto test = MakeSet(3);
  enroll.Add("e1", "spkA", GaussianVector(3, rng));
  enroll.Add("e2", "spkA", GaussianVector(3, rng));
  test.Add("t1", std::nullopt, GaussianVector(3, rng));

  TrialSet empty;
  CHECK(ScoreTrials(m, enroll, test, empty).trials.empty());

  TrialSet single;
  single.trials.push_back({"e1", "t1", std::nullopt, std::nullopt});
  TrialSet out = ScoreTrials(m, enroll, test, single);
  PldaScorer scorer(m);
  CHECK(*out.trials[0].score ==
        doctest::Approx(scorer.Score(enroll.records[0].vector,
                                     test.records[0].vector)));

  // Speaker-id enrollment pools the speaker's utterances by averaging.
  TrialSet pooled;
  pooled.trials.push_back({"spkA", "t1", std::nullopt, std::nullopt});
  out = ScoreTrials(m, enroll, test, pooled);
  Eigen::VectorXd avg =
      0.5 * (enroll.records[0].vector + enroll.records[1].vector);
  CHECK(*out.trials[0].score ==
        doctest::Approx(scorer.Score(avg, test.records[0].vector)));

  TrialSet unknown;
  unknown.trials.push_back({"nope", "t1", std::nullopt, std::nullopt});
  CHECK_THROWS_AS(ScoreTrials(m, enroll, test, unknown), InvalidArgumentError);
}

TEST_CASE("ScoreTrials output is order independent") {
  std::mt19937_64 rng(43);
  PldaModel m;
  m.mu = Eigen::VectorXd::Zero(2);
  m.phi_b = RandomSpd(2, rng);
  m.phi_w = RandomSpd(2, rng);

  auto enroll = MakeSet(2);
  auto test = MakeSet(2);
  for (int i = 0; i < 10; ++i) {
    enroll.Add("e" + std::to_string(i), std::nullopt, GaussianVector(2, rng));
    test.Add("t" + std::to_string(i), std::nullopt, GaussianVector(2, rng));
  }
  TrialSet trials;
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 10; ++j)
      trials.trials.push_back({"e" + std::to_string(i), "t" + std::to_string(j),
                               std::nullopt, std::nullopt});
  TrialSet forward = ScoreTrials(m, enroll, test, trials);

  TrialSet reversed = trials;
  std::reverse(reversed.trials.begin(), reversed.trials.end());
  TrialSet backward = ScoreTrials(m, enroll, test, reversed);
  for (size_t i = 0; i < forward.trials.size(); ++i) {
    const auto &match = backward.trials[forward.trials.size() - 1 - i];
    CHECK(*forward.trials[i].score == *match.score);
  }
}
