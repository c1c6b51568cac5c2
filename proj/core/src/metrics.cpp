// pldakit/metrics.cpp

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

#include "pldakit/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pldakit/errors.hpp"

namespace pldakit {

namespace {

struct ScorePools {
  std::vector<double> targets;
  std::vector<double> nontargets;
};

ScorePools SplitScores(const TrialSet &trials) {
  ScorePools pools;
  for (const auto &t : trials.trials) {
    if (!t.label || !t.score)
      throw InvalidArgumentError("metrics: every trial needs label and score");
    if (!std::isfinite(*t.score))
      throw InvalidArgumentError("metrics: non-finite score");
    (*t.label == TrialLabel::kTarget ? pools.targets : pools.nontargets)
        .push_back(*t.score);
  }
  if (pools.targets.empty())
    throw InvalidArgumentError("metrics: no target trials");
  if (pools.nontargets.empty())
    throw InvalidArgumentError("metrics: no nontarget trials");
  std::sort(pools.targets.begin(), pools.targets.end());
  std::sort(pools.nontargets.begin(), pools.nontargets.end());
  return pools;
}

ErrorPoint PointAt(const ScorePools &pools, double threshold) {
  const auto n_tar = static_cast<double>(pools.targets.size());
  const auto n_non = static_cast<double>(pools.nontargets.size());
  const auto miss = std::lower_bound(pools.targets.begin(),
                                     pools.targets.end(), threshold) -
                    pools.targets.begin();
  const auto accept = pools.nontargets.end() -
                      std::lower_bound(pools.nontargets.begin(),
                                       pools.nontargets.end(), threshold);
  return {threshold, static_cast<double>(miss) / n_tar,
          static_cast<double>(accept) / n_non};
}

std::vector<ErrorPoint> CurveFromPools(const ScorePools &pools) {
  std::vector<double> thresholds;
  thresholds.reserve(pools.targets.size() + pools.nontargets.size() + 2);
  thresholds.push_back(-std::numeric_limits<double>::infinity());
  std::merge(pools.targets.begin(), pools.targets.end(),
             pools.nontargets.begin(), pools.nontargets.end(),
             std::back_inserter(thresholds));
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()),
                   thresholds.end());
  thresholds.push_back(std::numeric_limits<double>::infinity());

  std::vector<ErrorPoint> curve;
  curve.reserve(thresholds.size());
  for (double th : thresholds) curve.push_back(PointAt(pools, th));
  return curve;
}

}  // namespace

std::vector<ErrorPoint> ErrorCurve(const TrialSet &trials) {
  return CurveFromPools(SplitScores(trials));
}

double Eer(const TrialSet &trials) {
  const auto curve = CurveFromPools(SplitScores(trials));
  // diff runs from -1 at threshold -inf to +1 at +inf.
  for (size_t i = 0; i < curve.size(); ++i) {
    const double diff = curve[i].p_miss - curve[i].p_fa;
    if (diff < 0.0) continue;
    if (diff == 0.0 || i == 0) return curve[i].p_miss;
    const auto &lo = curve[i - 1];
    const auto &hi = curve[i];
    const double denom =
        (hi.p_miss - lo.p_miss) - (hi.p_fa - lo.p_fa);
    if (denom == 0.0) return 0.5 * (lo.p_miss + hi.p_fa);
    const double t = (lo.p_fa - lo.p_miss) / denom;
    return lo.p_miss + t * (hi.p_miss - lo.p_miss);
  }
  return curve.back().p_miss;  // unreachable for nonempty pools
}

double MinCprimary(const TrialSet &trials, const CostParams &params) {
  if (params.p_targets.empty())
    throw InvalidArgumentError("MinCprimary: need at least one target prior");
  if (params.c_miss <= 0.0 || params.c_fa <= 0.0)
    throw InvalidArgumentError("MinCprimary: costs must be positive");
  const auto curve = CurveFromPools(SplitScores(trials));

  double sum = 0.0;
  for (double p_tar : params.p_targets) {
    if (p_tar <= 0.0 || p_tar >= 1.0)
      throw InvalidArgumentError("MinCprimary: prior must be in (0, 1)");
    const double norm =
        std::min(params.c_miss * p_tar, params.c_fa * (1.0 - p_tar));
    double best = std::numeric_limits<double>::infinity();
    for (const auto &pt : curve) {
      const double cost = params.c_miss * p_tar * pt.p_miss +
                          params.c_fa * (1.0 - p_tar) * pt.p_fa;
      best = std::min(best, cost / norm);
    }
    sum += best;
  }
  return sum / static_cast<double>(params.p_targets.size());
}

}  // namespace pldakit
