// pldakit/scorenorm.cpp

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

#include "pldakit/scorenorm.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_map>
#include <vector>

namespace pldakit {

namespace {

struct SideStats {
  double mean;
  double std;
};

// Mean and divide-by-k stddev of the k highest cohort scores, ties broken
// by cohort utterance id.
SideStats TopKStats(const Eigen::VectorXd &side, const PldaScorer &scorer,
                    const EmbeddingSet &cohort, int k) {
  std::vector<std::pair<double, const std::string *>> scored;
  scored.reserve(cohort.records.size());
  for (const auto &c : cohort.records)
    scored.emplace_back(scorer.Score(side, c.vector), &c.utterance_id);
  std::partial_sort(scored.begin(), scored.begin() + k, scored.end(),
                    [](const auto &a, const auto &b) {
                      if (a.first != b.first) return a.first > b.first;
                      return *a.second < *b.second;
                    });

  double sum = 0.0;
  for (int i = 0; i < k; ++i) sum += scored[static_cast<size_t>(i)].first;
  const double mean = sum / k;
  double var = 0.0;
  for (int i = 0; i < k; ++i) {
    const double d = scored[static_cast<size_t>(i)].first - mean;
    var += d * d;
  }
  const double std = std::sqrt(var / k);
  if (std < 1e-12)
    throw InvalidArgumentError("AsNorm: degenerate cohort (zero variance)");
  return {mean, std};
}

const Eigen::VectorXd &Lookup(const EmbeddingSet &set, const std::string &id,
                              const char *side) {
  const EmbeddingRecord *rec = set.Find(id);
  if (!rec)
    throw InvalidArgumentError(std::string("AsNorm: unknown ") + side +
                               " id '" + id + "'");
  return rec->vector;
}

}  // namespace

TrialSet AsNorm(const PldaModel &model, const TrialSet &trials,
                const EmbeddingSet &enroll_set, const EmbeddingSet &test_set,
                const EmbeddingSet &cohort, int k) {
  if (cohort.records.empty())
    throw InvalidArgumentError("AsNorm: empty cohort");
  if (k < 1 || static_cast<size_t>(k) > cohort.records.size())
    throw InvalidArgumentError("AsNorm: k must be in [1, cohort size]");
  if (!trials.AllScored())
    throw InvalidArgumentError("AsNorm: trials must be scored first");

  const PldaScorer scorer(model);
  std::unordered_map<std::string, SideStats> enroll_stats, test_stats;

  TrialSet out = trials;
  for (auto &t : out.trials) {
    auto [ei, enew] = enroll_stats.try_emplace(t.enroll_id);
    if (enew)
      ei->second =
          TopKStats(Lookup(enroll_set, t.enroll_id, "enrollment"), scorer,
                    cohort, k);
    auto [ti, tnew] = test_stats.try_emplace(t.test_id);
    if (tnew)
      ti->second =
          TopKStats(Lookup(test_set, t.test_id, "test"), scorer, cohort, k);

    const double s = *t.score;
    t.score = 0.5 * ((s - ei->second.mean) / ei->second.std +
                     (s - ti->second.mean) / ti->second.std);
  }
  return out;
}

}  // namespace pldakit
