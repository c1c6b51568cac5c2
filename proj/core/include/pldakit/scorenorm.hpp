// pldakit/scorenorm.hpp

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

#ifndef PLDAKIT_SCORENORM_HPP_
#define PLDAKIT_SCORENORM_HPP_

#include "pldakit/plda.hpp"
#include "pldakit/trials.hpp"

namespace pldakit {

/// Adaptive symmetric score normalization.  Each trial side is scored
/// against the full cohort; the mean and standard deviation of its top-k
/// cohort scores normalize the raw score, and the two sides are averaged:
///   s' = ((s - mu_e)/sigma_e + (s - mu_t)/sigma_t) / 2.
/// Cohort ties are broken by utterance id so results do not depend on
/// cohort record order.  A selected cohort with standard deviation below
/// 1e-12 raises InvalidArgumentError rather than passing silently.
TrialSet AsNorm(const PldaModel &model, const TrialSet &trials,
                const EmbeddingSet &enroll_set, const EmbeddingSet &test_set,
                const EmbeddingSet &cohort, int k);

}  // namespace pldakit

#endif  // PLDAKIT_SCORENORM_HPP_
