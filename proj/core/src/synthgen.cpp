// pldakit/synthgen.cpp

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

#include "pldakit/synthgen.hpp"

#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace pldakit {

namespace {

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Counter-based substream key: generation order never matters.
std::uint64_t StreamSeed(std::uint64_t seed, std::uint64_t tag,
                         std::uint64_t index) {
  return SplitMix64(SplitMix64(seed ^ SplitMix64(tag)) ^ index);
}

Eigen::VectorXd GaussianVector(Eigen::Index dim, std::mt19937_64 &rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::VectorXd v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) v(i) = normal(rng);
  return v;
}

Eigen::MatrixXd RandomOrthogonal(Eigen::Index dim, std::mt19937_64 &rng) {
  Eigen::MatrixXd g(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j) g.col(j) = GaussianVector(dim, rng);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  Eigen::MatrixXd q = qr.householderQ();
  // Fix column signs so the factorization is unique.
  Eigen::VectorXd diag = qr.matrixQR().diagonal();
  for (Eigen::Index j = 0; j < dim; ++j)
    if (diag(j) < 0.0) q.col(j) = -q.col(j);
  return q;
}

SymMatrix RandomSpd(Eigen::Index dim, double lo, double hi,
                    std::mt19937_64 &rng) {
  Eigen::MatrixXd q = RandomOrthogonal(dim, rng);
  std::uniform_real_distribution<double> u(lo, hi);
  Eigen::VectorXd lam(dim);
  for (Eigen::Index i = 0; i < dim; ++i) lam(i) = u(rng);
  return SymMatrix(q * lam.asDiagonal() * q.transpose());
}

void Validate(const SynthConfig &c) {
  if (c.dim < 1) throw InvalidArgumentError("SynthConfig: dim must be >= 1");
  if (c.n_speakers_ood < 2 || c.n_speakers_ind < 2)
    throw InvalidArgumentError("SynthConfig: need >= 2 speakers per domain");
  if (c.utts_per_speaker_ood < 1 || c.utts_per_speaker_ind < 1)
    throw InvalidArgumentError("SynthConfig: need >= 1 utterance per speaker");
  if (c.phi_b_true.dim() != c.dim || c.phi_w_true.dim() != c.dim)
    throw InvalidArgumentError("SynthConfig: covariance dim mismatch");
  if (c.shift_a.rows() != c.dim || c.shift_a.cols() != c.dim ||
      c.shift_b.size() != c.dim)
    throw InvalidArgumentError("SynthConfig: shift dim mismatch");
  Eigen::FullPivLU<Eigen::MatrixXd> lu(c.shift_a);
  if (!lu.isInvertible())
    throw InvalidArgumentError("SynthConfig: shift matrix is singular");
}

EmbeddingSet DrawDomain(const SynthConfig &c, int n_speakers, int n_utts,
                        const std::string &prefix, std::uint64_t tag,
                        const Eigen::MatrixXd &between_root,
                        const Eigen::MatrixXd &within_root, bool shifted) {
  EmbeddingSet set;
  set.dim = shifted ? c.shift_a.rows() : c.dim;
  set.records.reserve(static_cast<size_t>(n_speakers) * n_utts);
  for (int s = 0; s < n_speakers; ++s) {
    std::mt19937_64 rng(StreamSeed(c.seed, tag, static_cast<std::uint64_t>(s)));
    const std::string spk = prefix + "spk" + std::to_string(s);
    Eigen::VectorXd speaker_mean = between_root * GaussianVector(c.dim, rng);
    for (int u = 0; u < n_utts; ++u) {
      Eigen::VectorXd v =
          speaker_mean + within_root * GaussianVector(c.dim, rng);
      if (shifted) v = c.shift_a * v + c.shift_b;
      set.records.push_back(
          {spk + "_utt" + std::to_string(u), spk, std::move(v)});
    }
  }
  return set;
}

}  // namespace

SynthConfig MakeRandomTruth(SynthConfig config) {
  std::mt19937_64 rng(StreamSeed(config.seed, 0x7472757468ULL, 0));
  config.phi_b_true = RandomSpd(config.dim, 0.5, 2.0, rng);
  config.phi_w_true = RandomSpd(config.dim, 0.1, 0.5, rng);
  // Symmetric PSD shift with per-direction scales in [0.5, 2.0]; at this
  // strength correlation alignment is exactly achievable in population.
  Eigen::MatrixXd q = RandomOrthogonal(config.dim, rng);
  std::uniform_real_distribution<double> u(0.5, 2.0);
  Eigen::VectorXd scales(config.dim);
  for (Eigen::Index i = 0; i < config.dim; ++i) scales(i) = u(rng);
  config.shift_a = q * scales.asDiagonal() * q.transpose();
  config.shift_b = GaussianVector(config.dim, rng);
  return config;
}

SynthCorpus Generate(const SynthConfig &config) {
  Validate(config);
  const Eigen::MatrixXd between_root = PsdSqrt(config.phi_b_true).mat();
  const Eigen::MatrixXd within_root = PsdSqrt(config.phi_w_true).mat();

  EmbeddingSet ood =
      DrawDomain(config, config.n_speakers_ood, config.utts_per_speaker_ood,
                 "ood_", 0x6f6f64ULL, between_root, within_root, false);
  EmbeddingSet ind =
      DrawDomain(config, config.n_speakers_ind, config.utts_per_speaker_ind,
                 "ind_", 0x696e64ULL, between_root, within_root, true);

  const Eigen::MatrixXd &a = config.shift_a;
  SymMatrix phi_i_b(a * config.phi_b_true.mat() * a.transpose());
  SymMatrix phi_i_w(a * config.phi_w_true.mat() * a.transpose());
  SymMatrix c_ood = config.phi_b_true + config.phi_w_true;
  SymMatrix c_ind = phi_i_b + phi_i_w;

  CovarianceCatalog truth(config.phi_b_true, config.phi_w_true, c_ood, c_ind,
                          phi_i_b, phi_i_w);
  return {std::move(ood), std::move(ind), std::move(truth), config.shift_b};
}

TrialSplit BuildTrials(const EmbeddingSet &labeled, std::uint64_t seed,
                       int nontarget_factor) {
  if (!labeled.Labeled())
    throw InvalidArgumentError("BuildTrials: set must be fully labeled");
  if (nontarget_factor < 1)
    throw InvalidArgumentError("BuildTrials: nontarget factor must be >= 1");

  std::map<std::string, std::vector<const EmbeddingRecord *>> by_speaker;
  for (const auto &r : labeled.records) by_speaker[*r.speaker_id].push_back(&r);

  TrialSplit out;
  out.enroll.dim = labeled.dim;
  out.test.dim = labeled.dim;
  std::vector<std::string> enroll_spk, test_spk;

  for (const auto &[spk, recs] : by_speaker) {
    const size_t n_enroll = (recs.size() + 1) / 2;
    for (size_t i = 0; i < recs.size(); ++i) {
      const auto *r = recs[i];
      if (i < n_enroll) {
        out.enroll.records.push_back(*r);
        enroll_spk.push_back(spk);
      } else {
        out.test.records.push_back(*r);
        test_spk.push_back(spk);
      }
    }
  }

  for (size_t e = 0; e < out.enroll.records.size(); ++e)
    for (size_t t = 0; t < out.test.records.size(); ++t)
      if (enroll_spk[e] == test_spk[t])
        out.trials.trials.push_back({out.enroll.records[e].utterance_id,
                                     out.test.records[t].utterance_id,
                                     TrialLabel::kTarget, std::nullopt});

  const size_t n_targets = out.trials.trials.size();
  if (n_targets == 0)
    throw InvalidArgumentError(
        "BuildTrials: no speaker has utterances on both sides of the split");

  std::mt19937_64 rng(StreamSeed(seed, 0x747269616cULL, 0));
  std::uniform_int_distribution<size_t> pick_e(0, out.enroll.records.size() - 1);
  std::uniform_int_distribution<size_t> pick_t(0, out.test.records.size() - 1);
  std::set<std::pair<size_t, size_t>> used;
  const size_t wanted = n_targets * static_cast<size_t>(nontarget_factor);
  size_t attempts = 0;
  const size_t max_attempts = 100 * wanted + 1000;
  while (used.size() < wanted && attempts++ < max_attempts) {
    const size_t e = pick_e(rng);
    const size_t t = pick_t(rng);
    if (enroll_spk[e] == test_spk[t]) continue;
    used.insert({e, t});
  }
  for (const auto &[e, t] : used)
    out.trials.trials.push_back({out.enroll.records[e].utterance_id,
                                 out.test.records[t].utterance_id,
                                 TrialLabel::kNontarget, std::nullopt});
  return out;
}

}  // namespace pldakit
