// pldakit/adapt.cpp

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

#include "pldakit/adapt.hpp"

#include <cctype>
#include <vector>

namespace pldakit {

CovarianceCatalog::CovarianceCatalog(SymMatrix phi_ood_b, SymMatrix phi_ood_w,
                                     SymMatrix c_ood, SymMatrix c_ind,
                                     std::optional<SymMatrix> phi_ind_b,
                                     std::optional<SymMatrix> phi_ind_w)
    : phi_ood_b_(std::move(phi_ood_b)),
      phi_ood_w_(std::move(phi_ood_w)),
      c_ood_(std::move(c_ood)),
      c_ind_(std::move(c_ind)),
      phi_ind_b_(std::move(phi_ind_b)),
      phi_ind_w_(std::move(phi_ind_w)),
      pseudo_b_(CoralPseudo(phi_ood_b_, c_ood_, c_ind_)),
      pseudo_w_(CoralPseudo(phi_ood_w_, c_ood_, c_ind_)) {
  phi_ood_b_.CheckSameDim(phi_ood_w_);
  phi_ood_b_.CheckSameDim(c_ood_);
  phi_ood_b_.CheckSameDim(c_ind_);
  if (phi_ind_b_.has_value() != phi_ind_w_.has_value())
    throw InvalidArgumentError(
        "CovarianceCatalog: in-domain PLDA needs both covariances");
  if (phi_ind_b_) {
    phi_ood_b_.CheckSameDim(*phi_ind_b_);
    phi_ood_b_.CheckSameDim(*phi_ind_w_);
  }
}

const SymMatrix &CovarianceCatalog::phi_ind_b() const {
  if (!phi_ind_b_)
    throw MissingInDomainModelError(
        "catalog has no in-domain PLDA (unsupervised mode)");
  return *phi_ind_b_;
}

const SymMatrix &CovarianceCatalog::phi_ind_w() const {
  if (!phi_ind_w_)
    throw MissingInDomainModelError(
        "catalog has no in-domain PLDA (unsupervised mode)");
  return *phi_ind_w_;
}

SymMatrix CoralPseudo(const SymMatrix &phi_ood, const SymMatrix &c_ood,
                      const SymMatrix &c_ind) {
  phi_ood.CheckSameDim(c_ood);
  phi_ood.CheckSameDim(c_ind);
  const SymMatrix whiten = PsdInvSqrt(c_ood);
  const SymMatrix recolor = PsdSqrt(c_ind);
  Eigen::MatrixXd out = recolor.mat() * whiten.mat() * phi_ood.mat() *
                        whiten.mat() * recolor.mat();
  return SymMatrix(out);
}

SymMatrix GammaMax(const SymMatrix &y, const SymMatrix &z) {
  y.CheckSameDim(z);
  const SimDiag sd = SimultaneousDiag(y, z);
  // basis^T z basis == I, so basis^{-1} == basis^T z and the backward map
  // needs no explicit inverse.
  Eigen::VectorXd d = sd.eigvals.cwiseMax(1.0);
  Eigen::MatrixXd binv = sd.basis.transpose() * z.mat();
  return SymMatrix(binv.transpose() * d.asDiagonal() * binv);
}

namespace {

bool IsKindIndependent(BaseRole r) {
  return r == BaseRole::kTotalOod || r == BaseRole::kTotalInd ||
         r == BaseRole::kOodTotalPlda;
}

const SymMatrix &ResolveBase(BaseRole role, const CovarianceCatalog &cat,
                             CovKind kind, SymMatrix &scratch) {
  switch (role) {
    case BaseRole::kOod:
      return kind == CovKind::kBetween ? cat.phi_ood_b() : cat.phi_ood_w();
    case BaseRole::kInd:
      return kind == CovKind::kBetween ? cat.phi_ind_b() : cat.phi_ind_w();
    case BaseRole::kPseudo:
      return kind == CovKind::kBetween ? cat.pseudo_b() : cat.pseudo_w();
    case BaseRole::kTotalOod:
      return cat.c_ood();
    case BaseRole::kTotalInd:
      return cat.c_ind();
    case BaseRole::kOodTotalPlda:
      scratch = cat.phi_ood_b() + cat.phi_ood_w();
      return scratch;
  }
  throw InvalidArgumentError("unknown covariance role");
}

SymMatrix ResolveRole(const CovRole &role, const CovarianceCatalog &cat,
                      CovKind kind) {
  SymMatrix scratch;
  if (!role.nested) return ResolveBase(role.base, cat, kind, scratch);
  if (role.nested_a == role.nested_b)
    return ResolveBase(role.nested_a, cat, kind, scratch);
  SymMatrix scratch2;
  return GammaMax(ResolveBase(role.nested_a, cat, kind, scratch),
                  ResolveBase(role.nested_b, cat, kind, scratch2));
}

// Regularization term for recipes whose developer and reference slots are
// kind-independent totals (the Kaldi row).  Both kinds share one
// diagonalization of (phi1, phi2); the regularized variance along each
// generalized eigendirection is split between the between and within
// outputs in proportion to the OOD PLDA share along that direction.
SymMatrix SplitTotalGammaTerm(BaseRole phi1, BaseRole phi2,
                              const CovarianceCatalog &cat, CovKind kind) {
  SymMatrix s1, s2;
  const SymMatrix &y = ResolveBase(phi1, cat, CovKind::kBetween, s1);
  const SymMatrix &z = ResolveBase(phi2, cat, CovKind::kBetween, s2);
  const SimDiag sd = SimultaneousDiag(y, z);

  const SymMatrix &part =
      kind == CovKind::kBetween ? cat.phi_ood_b() : cat.phi_ood_w();
  SymMatrix ood_total = cat.phi_ood_b() + cat.phi_ood_w();

  Eigen::VectorXd share =
      (sd.basis.transpose() * part.mat() * sd.basis).diagonal();
  Eigen::VectorXd total_diag =
      (sd.basis.transpose() * ood_total.mat() * sd.basis).diagonal();
  Eigen::VectorXd reg = sd.eigvals.cwiseMax(1.0);
  Eigen::VectorXd diag(share.size());
  for (Eigen::Index j = 0; j < diag.size(); ++j) {
    double t = total_diag(j);
    diag(j) = reg(j) * (t > 0.0 ? share(j) / t : 0.5);
  }
  Eigen::MatrixXd binv = sd.basis.transpose() * z.mat();
  return SymMatrix(binv.transpose() * diag.asDiagonal() * binv);
}

}  // namespace

SymMatrix AdaptCovariance(const AdaptRecipe &recipe,
                          const CovarianceCatalog &catalog, CovKind kind) {
  if (recipe.alpha < 0.0 || recipe.alpha > 1.0)
    throw InvalidArgumentError("AdaptCovariance: alpha must be in [0, 1]");

  SymMatrix phi0 = ResolveRole(recipe.phi0, catalog, kind);

  SymMatrix gamma_term;
  if (recipe.phi1 == recipe.phi2) {
    // Same developer and reference resolve to the same matrix; the max in
    // the diagonalized space is the identity, so skip the decomposition.
    gamma_term = ResolveRole(recipe.phi1, catalog, kind);
  } else if (!recipe.phi1.nested && !recipe.phi2.nested &&
             IsKindIndependent(recipe.phi1.base) &&
             IsKindIndependent(recipe.phi2.base)) {
    gamma_term =
        SplitTotalGammaTerm(recipe.phi1.base, recipe.phi2.base, catalog, kind);
  } else {
    gamma_term = GammaMax(ResolveRole(recipe.phi1, catalog, kind),
                          ResolveRole(recipe.phi2, catalog, kind));
  }

  if (recipe.alpha == 1.0) return phi0;
  if (recipe.alpha == 0.0) return gamma_term;
  return recipe.alpha * phi0 + (1.0 - recipe.alpha) * gamma_term;
}

PldaModel AdaptModel(const AdaptRecipe &recipe, const CovarianceCatalog &catalog,
                     const Eigen::VectorXd &mu) {
  if (mu.size() != catalog.dim())
    throw DimMismatchError("AdaptModel: mean dimension mismatch");
  PldaModel out;
  out.mu = mu;
  out.phi_b = AdaptCovariance(recipe, catalog, CovKind::kBetween);
  out.phi_w = AdaptCovariance(recipe, catalog, CovKind::kWithin);
  return out;
}

AdaptRecipe Preset(const std::string &name, double alpha) {
  if (alpha < 0.0 || alpha > 1.0)
    throw InvalidArgumentError("Preset: alpha must be in [0, 1]");
  using R = BaseRole;
  AdaptRecipe rec;
  rec.alpha = alpha;
  if (name == "coral_plus") {
    rec.phi0 = CovRole::Simple(R::kOod);
    rec.phi1 = CovRole::Simple(R::kPseudo);
    rec.phi2 = CovRole::Simple(R::kOod);
  } else if (name == "kaldi") {
    // The published table prints C_O as developer covariance, which would
    // leave the recipe blind to the new domain; the toolkit it references
    // regularizes against the in-domain total, so that is what we use.
    rec.phi0 = CovRole::Simple(R::kOod);
    rec.phi1 = CovRole::Simple(R::kTotalInd);
    rec.phi2 = CovRole::Simple(R::kOodTotalPlda);
  } else if (name == "lip") {
    rec.phi0 = CovRole::Simple(R::kInd);
    rec.phi1 = CovRole::Simple(R::kOod);
    rec.phi2 = CovRole::Simple(R::kOod);
  } else if (name == "lip_reg") {
    rec.phi0 = CovRole::Simple(R::kInd);
    rec.phi1 = CovRole::Simple(R::kOod);
    rec.phi2 = CovRole::Simple(R::kInd);
  } else if (name == "cip") {
    rec.phi0 = CovRole::Simple(R::kInd);
    rec.phi1 = CovRole::Simple(R::kPseudo);
    rec.phi2 = CovRole::Simple(R::kPseudo);
  } else if (name == "cip_reg") {
    rec.phi0 = CovRole::Simple(R::kInd);
    rec.phi1 = CovRole::Simple(R::kPseudo);
    rec.phi2 = CovRole::Simple(R::kInd);
  } else if (name == "case7") {
    rec.phi0 = CovRole::Simple(R::kInd);
    rec.phi1 = CovRole::Simple(R::kPseudo);
    rec.phi2 = CovRole::Simple(R::kOod);
  } else if (name == "case8") {
    rec.phi0 = CovRole::Simple(R::kInd);
    rec.phi1 = CovRole::Gamma(R::kPseudo, R::kOod);
    rec.phi2 = CovRole::Simple(R::kInd);
  } else {
    throw InvalidArgumentError("Preset: unknown preset '" + name + "'");
  }
  return rec;
}

const std::vector<std::string> &PresetNames() {
  static const std::vector<std::string> names = {
      "coral_plus", "kaldi", "lip", "lip_reg",
      "cip",        "cip_reg", "case7", "case8"};
  return names;
}

BaseRole ParseBaseRole(const std::string &raw) {
  std::string name = raw;
  for (char &c : name) c = static_cast<char>(std::toupper(c));
  if (name == "OOD") return BaseRole::kOod;
  if (name == "IND") return BaseRole::kInd;
  if (name == "PSEUDO") return BaseRole::kPseudo;
  if (name == "TOTAL_OOD") return BaseRole::kTotalOod;
  if (name == "TOTAL_IND") return BaseRole::kTotalInd;
  if (name == "OOD_TOTAL_PLDA") return BaseRole::kOodTotalPlda;
  throw InvalidArgumentError("unknown covariance role '" + raw + "'");
}

}  // namespace pldakit
