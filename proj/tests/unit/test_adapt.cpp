#include <doctest.h>

#include <random>

#include <unsupported/Eigen/MatrixFunctions>

#include "pldakit/adapt.hpp"
#include "test_util.hpp"

using namespace pldakit;
using test_util::RandomSpd;
using test_util::RelFrob;

namespace {

CovarianceCatalog RandomCatalog(Eigen::Index dim, std::mt19937_64 &rng,
                                bool with_ind = true) {
  SymMatrix phi_ob = RandomSpd(dim, rng);
  SymMatrix phi_ow = RandomSpd(dim, rng);
  SymMatrix c_o = RandomSpd(dim, rng);
  SymMatrix c_i = RandomSpd(dim, rng);
  if (!with_ind) return CovarianceCatalog(phi_ob, phi_ow, c_o, c_i);
  return CovarianceCatalog(phi_ob, phi_ow, c_o, c_i, RandomSpd(dim, rng),
                           RandomSpd(dim, rng));
}

double MinEig(const Eigen::MatrixXd &m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (m + m.transpose()));
  return es.eigenvalues().minCoeff();
}

}  // namespace

TEST_CASE("CoralPseudo is identity when domains match") {
  std::mt19937_64 rng(1);
  SymMatrix phi = RandomSpd(5, rng);
  SymMatrix c = RandomSpd(5, rng);
  CHECK(RelFrob(CoralPseudo(phi, c, c).mat(), phi.mat()) < 1e-10);
}

TEST_CASE("CoralPseudo scalar case") {
  Eigen::MatrixXd phi(1, 1), co(1, 1), ci(1, 1);
  phi << 0.5;
  co << 1.0;
  ci << 4.0;
  CHECK(CoralPseudo(SymMatrix(phi), SymMatrix(co), SymMatrix(ci))(0, 0) ==
        doctest::Approx(2.0));
}

TEST_CASE("CoralPseudo matches explicit five-factor product") {
  std::mt19937_64 rng(2);
  SymMatrix phi = RandomSpd(6, rng);
  SymMatrix c_o = RandomSpd(6, rng);
  SymMatrix c_i = RandomSpd(6, rng);

  // Oracle roots come from Eigen's general matrix sqrt, a different
  // algorithm than the eigendecomposition route under test.
  Eigen::MatrixXd ci_half = c_i.mat().sqrt();
  Eigen::MatrixXd co_half_inv = c_o.mat().sqrt().inverse();
  Eigen::MatrixXd oracle =
      ci_half * co_half_inv * phi.mat() * co_half_inv * ci_half;
  CHECK(RelFrob(CoralPseudo(phi, c_o, c_i).mat(), oracle) < 1e-10);
}

TEST_CASE("CoralPseudo recovers a symmetric population shift") {
  std::mt19937_64 rng(3);
  const Eigen::Index d = 8;
  SymMatrix phi = RandomSpd(d, rng);
  SymMatrix c_o = RandomSpd(d, rng);
  Eigen::MatrixXd a = test_util::RandomSymmetricScaling(d, 0.5, 2.0, rng);

  // A commuting with c_o is not assumed; exactness needs whitened OOD, so
  // use c_o = I as the population statement.
  SymMatrix eye = SymMatrix::Identity(d);
  SymMatrix c_i(a * a.transpose());
  Eigen::MatrixXd expect = a * phi.mat() * a.transpose();
  CHECK(RelFrob(CoralPseudo(phi, eye, c_i).mat(), expect) < 1e-9);
}

TEST_CASE("GammaMax fixed point and diagonal case") {
  std::mt19937_64 rng(4);
  SymMatrix y = RandomSpd(5, rng);
  CHECK(RelFrob(GammaMax(y, y).mat(), y.mat()) < 1e-9);

  Eigen::MatrixXd d = Eigen::Vector2d(2.0, 0.5).asDiagonal();
  Eigen::MatrixXd expect = Eigen::Vector2d(2.0, 1.0).asDiagonal();
  CHECK(RelFrob(GammaMax(SymMatrix(d), SymMatrix::Identity(2)).mat(), expect) <
        1e-12);
}

TEST_CASE("GammaMax dominates both arguments") {
  std::mt19937_64 rng(5);
  for (int rep = 0; rep < 10; ++rep) {
    SymMatrix y = RandomSpd(7, rng);
    SymMatrix z = RandomSpd(7, rng);
    SymMatrix g = GammaMax(y, z);
    CHECK(MinEig(g.mat() - y.mat()) >= -1e-9);
    CHECK(MinEig(g.mat() - z.mat()) >= -1e-9);
  }
}

TEST_CASE("AdaptCovariance endpoints") {
  std::mt19937_64 rng(6);
  CovarianceCatalog cat = RandomCatalog(5, rng);

  AdaptRecipe lip = Preset("lip", 1.0);
  CHECK(RelFrob(AdaptCovariance(lip, cat, CovKind::kBetween).mat(),
                cat.phi_ind_b().mat()) == 0.0);

  lip.alpha = 0.0;
  CHECK(RelFrob(AdaptCovariance(lip, cat, CovKind::kBetween).mat(),
                cat.phi_ood_b().mat()) == 0.0);
}

TEST_CASE("lip reduces to plain interpolation") {
  std::mt19937_64 rng(7);
  CovarianceCatalog cat = RandomCatalog(6, rng);
  Eigen::MatrixXd direct =
      0.5 * cat.phi_ind_w().mat() + 0.5 * cat.phi_ood_w().mat();
  CHECK(RelFrob(AdaptCovariance(Preset("lip", 0.5), cat, CovKind::kWithin).mat(),
                direct) < 1e-12);
}

TEST_CASE("cip_reg equals hand-assembled composition") {
  std::mt19937_64 rng(8);
  CovarianceCatalog cat = RandomCatalog(6, rng);
  for (CovKind kind : {CovKind::kBetween, CovKind::kWithin}) {
    const SymMatrix &ind =
        kind == CovKind::kBetween ? cat.phi_ind_b() : cat.phi_ind_w();
    const SymMatrix &pseudo =
        kind == CovKind::kBetween ? cat.pseudo_b() : cat.pseudo_w();
    Eigen::MatrixXd direct =
        0.3 * ind.mat() + 0.7 * GammaMax(pseudo, ind).mat();
    CHECK(RelFrob(AdaptCovariance(Preset("cip_reg", 0.3), cat, kind).mat(),
                  direct) < 1e-12);
  }
}

TEST_CASE("coral_plus works without an in-domain PLDA") {
  std::mt19937_64 rng(9);
  CovarianceCatalog cat = RandomCatalog(5, rng, /*with_ind=*/false);
  Eigen::MatrixXd direct =
      0.5 * cat.phi_ood_b().mat() +
      0.5 * GammaMax(cat.pseudo_b(), cat.phi_ood_b()).mat();
  CHECK(RelFrob(
            AdaptCovariance(Preset("coral_plus", 0.5), cat, CovKind::kBetween)
                .mat(),
            direct) < 1e-12);
  CHECK_THROWS_AS(AdaptCovariance(Preset("lip", 0.5), cat, CovKind::kBetween),
                  MissingInDomainModelError);
}

TEST_CASE("case8 nests the regularization") {
  std::mt19937_64 rng(10);
  CovarianceCatalog cat = RandomCatalog(5, rng);
  Eigen::MatrixXd inner = GammaMax(cat.pseudo_w(), cat.phi_ood_w()).mat();
  Eigen::MatrixXd direct =
      0.5 * cat.phi_ind_w().mat() +
      0.5 * GammaMax(SymMatrix(inner), cat.phi_ind_w()).mat();
  CHECK(RelFrob(AdaptCovariance(Preset("case8", 0.5), cat, CovKind::kWithin).mat(),
                direct) < 1e-12);
}

TEST_CASE("kaldi row splits the total regularization across kinds") {
  std::mt19937_64 rng(11);
  CovarianceCatalog cat = RandomCatalog(6, rng, /*with_ind=*/false);
  AdaptRecipe rec = Preset("kaldi", 0.0);  // isolate the gamma term
  SymMatrix between = AdaptCovariance(rec, cat, CovKind::kBetween);
  SymMatrix within = AdaptCovariance(rec, cat, CovKind::kWithin);

  SymMatrix ood_total = cat.phi_ood_b() + cat.phi_ood_w();
  Eigen::MatrixXd whole = GammaMax(cat.c_ind(), ood_total).mat();
  CHECK(RelFrob(between.mat() + within.mat(), whole) < 1e-9);
  CHECK(MinEig(between.mat()) >= -1e-9 * between.trace());
  CHECK(MinEig(within.mat()) >= -1e-9 * within.trace());
}

TEST_CASE("adapted covariance is affine in alpha") {
  std::mt19937_64 rng(12);
  CovarianceCatalog cat = RandomCatalog(5, rng);
  for (const auto &name : PresetNames()) {
    Eigen::MatrixXd lo = AdaptCovariance(Preset(name, 0.0), cat,
                                         CovKind::kBetween)
                             .mat();
    Eigen::MatrixXd hi = AdaptCovariance(Preset(name, 1.0), cat,
                                         CovKind::kBetween)
                             .mat();
    Eigen::MatrixXd mid = AdaptCovariance(Preset(name, 0.5), cat,
                                          CovKind::kBetween)
                              .mat();
    CHECK(RelFrob(mid, 0.5 * (lo + hi)) < 1e-12);
  }
}

TEST_CASE("adapted covariances stay PSD across presets and weights") {
  std::mt19937_64 rng(13);
  CovarianceCatalog cat = RandomCatalog(6, rng);
  for (const auto &name : PresetNames())
    for (double alpha : {0.0, 0.25, 0.5, 0.75, 1.0})
      for (CovKind kind : {CovKind::kBetween, CovKind::kWithin}) {
        SymMatrix out = AdaptCovariance(Preset(name, alpha), cat, kind);
        CHECK(MinEig(out.mat()) >= -1e-9 * out.trace());
      }
}

TEST_CASE("AdaptModel adapts both covariances and installs the mean") {
  std::mt19937_64 rng(14);
  CovarianceCatalog cat = RandomCatalog(4, rng);
  Eigen::VectorXd mu = test_util::GaussianVector(4, rng);
  AdaptRecipe rec = Preset("coral_plus", 0.5);
  PldaModel m = AdaptModel(rec, cat, mu);
  CHECK(m.mu == mu);
  CHECK(RelFrob(m.phi_b.mat(),
                AdaptCovariance(rec, cat, CovKind::kBetween).mat()) == 0.0);
  CHECK(RelFrob(m.phi_w.mat(),
                AdaptCovariance(rec, cat, CovKind::kWithin).mat()) == 0.0);
}

TEST_CASE("preset validation") {
  CHECK_THROWS_AS(Preset("nope", 0.5), InvalidArgumentError);
  CHECK_THROWS_AS(Preset("lip", 1.5), InvalidArgumentError);
  CHECK_THROWS_AS(ParseBaseRole("bogus"), InvalidArgumentError);
}
