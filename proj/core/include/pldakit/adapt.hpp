// pldakit/adapt.hpp

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

#ifndef PLDAKIT_ADAPT_HPP_
#define PLDAKIT_ADAPT_HPP_

#include <optional>
#include <string>
#include <vector>

#include "pldakit/plda.hpp"
#include "pldakit/symmat.hpp"

namespace pldakit {

/// Named covariance statistics of the two domains.  Immutable once
/// built; the CORAL pseudo-in-domain covariances are computed in the
/// constructor and cached.  The in-domain PLDA pair is optional
/// (unsupervised recipes do not need it).
class CovarianceCatalog {
 public:
  CovarianceCatalog(SymMatrix phi_ood_b, SymMatrix phi_ood_w, SymMatrix c_ood,
                    SymMatrix c_ind,
                    std::optional<SymMatrix> phi_ind_b = std::nullopt,
                    std::optional<SymMatrix> phi_ind_w = std::nullopt);

  Eigen::Index dim() const { return phi_ood_b_.dim(); }
  bool HasInDomainPlda() const { return phi_ind_b_.has_value(); }

  const SymMatrix &phi_ood_b() const { return phi_ood_b_; }
  const SymMatrix &phi_ood_w() const { return phi_ood_w_; }
  const SymMatrix &phi_ind_b() const;
  const SymMatrix &phi_ind_w() const;
  const SymMatrix &c_ood() const { return c_ood_; }
  const SymMatrix &c_ind() const { return c_ind_; }
  const SymMatrix &pseudo_b() const { return pseudo_b_; }
  const SymMatrix &pseudo_w() const { return pseudo_w_; }

 private:
  SymMatrix phi_ood_b_, phi_ood_w_;
  SymMatrix c_ood_, c_ind_;
  std::optional<SymMatrix> phi_ind_b_, phi_ind_w_;
  SymMatrix pseudo_b_, pseudo_w_;
};

/// Which PLDA covariance an adaptation step is producing.
enum class CovKind { kBetween, kWithin };

/// Atomic covariance roles a recipe slot can name.
enum class BaseRole {
  kOod,           // OOD PLDA covariance of the requested kind
  kInd,           // InD PLDA covariance of the requested kind
  kPseudo,        // CORAL pseudo-in-domain covariance of the requested kind
  kTotalOod,      // OOD total covariance (same for both kinds)
  kTotalInd,      // InD total covariance (same for both kinds)
  kOodTotalPlda,  // OOD phi_b + phi_w (same for both kinds)
};

/// A recipe slot: either an atomic role or a one-level nested
/// regularization of two atomic roles.
struct CovRole {
  BaseRole base = BaseRole::kOod;
  bool nested = false;
  BaseRole nested_a = BaseRole::kOod;
  BaseRole nested_b = BaseRole::kOod;

  static CovRole Simple(BaseRole r) { return {r, false, r, r}; }
  static CovRole Gamma(BaseRole a, BaseRole b) {
    return {BaseRole::kOod, true, a, b};
  }

  friend bool operator==(const CovRole &, const CovRole &) = default;
};

/// One row of the adaptation table: phi_plus = alpha * phi0
/// + (1 - alpha) * gamma_max(phi1, phi2), applied per covariance kind.
struct AdaptRecipe {
  CovRole phi0;
  CovRole phi1;
  CovRole phi2;
  double alpha = 0.5;
};

/// CORAL recoloring of an OOD covariance into the in-domain feature
/// space: c_ind^{1/2} c_ood^{-1/2} phi c_ood^{-1/2} c_ind^{1/2}.
SymMatrix CoralPseudo(const SymMatrix &phi_ood, const SymMatrix &c_ood,
                      const SymMatrix &c_ind);

/// Covariance regularization: diagonalize (y, z) simultaneously, take the
/// elementwise max of the generalized eigenvalues against one, and map
/// back.  The result dominates both arguments (G - y and G - z are PSD),
/// so no variance direction shrinks.
SymMatrix GammaMax(const SymMatrix &y, const SymMatrix &z);

/// Evaluates one recipe for one covariance kind against a catalog.
SymMatrix AdaptCovariance(const AdaptRecipe &recipe,
                          const CovarianceCatalog &catalog, CovKind kind);

/// Adapts both covariances with a shared recipe and installs the given
/// (in-domain) mean.
PldaModel AdaptModel(const AdaptRecipe &recipe, const CovarianceCatalog &catalog,
                     const Eigen::VectorXd &mu);

/// Named presets, one per table row.  Known names: coral_plus, kaldi,
/// lip, lip_reg, cip, cip_reg, case7, case8.
AdaptRecipe Preset(const std::string &name, double alpha);

/// Names of all presets, in table order.
const std::vector<std::string> &PresetNames();

/// Parses a role name (OOD, IND, PSEUDO, TOTAL_OOD, TOTAL_IND,
/// OOD_TOTAL_PLDA) as used by the CLI's explicit role flags.
BaseRole ParseBaseRole(const std::string &name);

}  // namespace pldakit

#endif  // PLDAKIT_ADAPT_HPP_
