// pldakit/metrics.hpp

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

#ifndef PLDAKIT_METRICS_HPP_
#define PLDAKIT_METRICS_HPP_

#include <vector>

#include "pldakit/trials.hpp"

namespace pldakit {

/// One operating point of the detection error tradeoff.  Convention:
/// accept iff score >= threshold, ties count as accepts.
struct ErrorPoint {
  double threshold;
  double p_miss;  // fraction of target scores below threshold
  double p_fa;    // fraction of nontarget scores at or above threshold
};

/// Detection cost parameters.  Defaults follow the SRE'18 evaluation
/// plan: two target priors, unit miss and false-alarm costs.
struct CostParams {
  std::vector<double> p_targets = {0.01, 0.005};
  double c_miss = 1.0;
  double c_fa = 1.0;
};

/// Error rates at every distinct score plus the two trivial thresholds.
/// Points are ordered by ascending threshold; p_miss is nondecreasing and
/// p_fa nonincreasing along the curve.
std::vector<ErrorPoint> ErrorCurve(const TrialSet &trials);

/// Equal error rate, linearly interpolated between the two operating
/// points bracketing the sign change of p_miss - p_fa.
double Eer(const TrialSet &trials);

/// Minimum normalized detection cost: minimized over thresholds
/// independently for each target prior, then averaged over priors.
double MinCprimary(const TrialSet &trials, const CostParams &params = {});

}  // namespace pldakit

#endif  // PLDAKIT_METRICS_HPP_
