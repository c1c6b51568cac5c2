// pldakit/synthgen.hpp

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

#ifndef PLDAKIT_SYNTHGEN_HPP_
#define PLDAKIT_SYNTHGEN_HPP_

#include <cstdint>

#include "pldakit/adapt.hpp"
#include "pldakit/embedding.hpp"
#include "pldakit/symmat.hpp"
#include "pldakit/trials.hpp"

namespace pldakit {

/// Synthetic domain-shift corpus parameters.  OOD embeddings are drawn
/// from the two-covariance model (speaker mean ~ N(0, phi_b_true),
/// within-noise ~ N(0, phi_w_true)); InD embeddings are drawn the same
/// way and then mapped through v -> shift_a * v + shift_b.
struct SynthConfig {
  Eigen::Index dim = 0;
  int n_speakers_ood = 0;
  int utts_per_speaker_ood = 0;
  int n_speakers_ind = 0;
  int utts_per_speaker_ind = 0;
  SymMatrix phi_b_true;
  SymMatrix phi_w_true;
  Eigen::MatrixXd shift_a;
  Eigen::VectorXd shift_b;
  std::uint64_t seed = 0;
};

struct SynthCorpus {
  EmbeddingSet ood;
  EmbeddingSet ind;
  /// Population-level covariances: OOD PLDA pair, totals of both domains,
  /// and the shifted InD PLDA pair.  Ground truth for adaptation checks.
  CovarianceCatalog truth;
  /// Population InD mean (shift_b; the pre-shift mean is zero).
  Eigen::VectorXd ind_mean_true;
};

/// Fills in random SPD ground-truth covariances and an anisotropic
/// symmetric-PSD shift (per-direction scales in [0.5, 2.0]) derived from
/// the seed.  Counts and dim must be set by the caller.
SynthConfig MakeRandomTruth(SynthConfig config);

/// Deterministic generation: identical config (including seed) yields
/// identical corpora.  Each speaker uses its own counter-derived RNG
/// substream, so output does not depend on generation order.
SynthCorpus Generate(const SynthConfig &config);

/// Splits a labeled set into disjoint enrollment/test halves per speaker
/// and builds a trial list: every cross-split same-speaker pair is a
/// target; nontargets are sampled at `nontarget_factor` times the target
/// count, fixed by the seed.
struct TrialSplit {
  EmbeddingSet enroll;
  EmbeddingSet test;
  TrialSet trials;
};

TrialSplit BuildTrials(const EmbeddingSet &labeled, std::uint64_t seed,
                       int nontarget_factor = 20);

}  // namespace pldakit

#endif  // PLDAKIT_SYNTHGEN_HPP_
