// tools/commands.hpp

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

#ifndef PLDA_ADAPT_TOOLS_COMMANDS_HPP_
#define PLDA_ADAPT_TOOLS_COMMANDS_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

// Pipeline commands behind the CLI subcommands.  Kept in a library so
// integration tests can drive them in-process.  All commands throw
// pldakit::Error subclasses; the CLI main turns those into a one-line
// stderr message and nonzero exit.

namespace pldakit::cli {

// Fixed file names inside a model directory written by `train`.
inline constexpr const char *kLdaFile = "lda.txt";
inline constexpr const char *kOodModelFile = "ood_plda.txt";
inline constexpr const char *kIndModelFile = "ind_plda.txt";
inline constexpr const char *kOodTotalFile = "c_ood.symmat";
inline constexpr const char *kIndTotalFile = "c_ind.symmat";
inline constexpr const char *kOodMeanRawFile = "ood_mean_raw.txt";
inline constexpr const char *kIndMeanRawFile = "ind_mean_raw.txt";
inline constexpr const char *kIndMeanProjFile = "ind_mean_proj.txt";

struct SynthOptions {
  std::string out_dir;
  std::string config_path;  // optional key-value file, overrides the fields
  long dim = 32;
  int ood_speakers = 500;
  int ood_utts = 8;
  int ind_speakers = 60;
  int ind_utts = 8;
  int eval_speakers = 40;
  int eval_utts = 8;
  int cohort_size = 60;
  int nontarget_factor = 20;
  std::uint64_t seed = 1;
};

struct TrainOptions {
  std::string ood_path;
  std::string ind_path;
  std::string out_dir;
  long lda_dim = 150;  // clamped to min(in_dim, classes - 1)
  std::string lda_train = "ood";  // "ood" or "ind"
};

struct AdaptOptions {
  std::string model_dir;
  std::string out_path;
  std::string recipe;  // preset name; empty when explicit roles are given
  std::string phi0, phi1, phi2;
  double alpha = 0.5;
};

struct ScoreOptions {
  std::string model_path;
  std::string model_dir;  // supplies LDA and centering mean
  std::string enroll_path;
  std::string test_path;
  std::string trials_path;
  std::string out_path;
  std::string cohort_path;  // nonempty enables AS-norm
  int snorm_k = 200;
};

struct EvalOptions {
  std::string trials_path;
  std::vector<double> p_targets = {0.01, 0.005};
  double c_miss = 1.0;
  double c_fa = 1.0;
  std::string det_out;
};

struct SweepOptions {
  std::string model_dir;
  std::string enroll_path;
  std::string test_path;
  std::string trials_path;
  std::string out_path;
  std::string alpha_grid = "0:1:0.1";
  std::vector<std::string> recipes;  // empty = every applicable preset
  std::string cohort_path;
  int snorm_k = 200;
  std::vector<double> p_targets = {0.01, 0.005};
};

void CmdSynth(const SynthOptions &opt);
void CmdTrain(const TrainOptions &opt);
void CmdAdapt(const AdaptOptions &opt);
void CmdScore(const ScoreOptions &opt);
void CmdEval(const EvalOptions &opt, std::ostream &report);
void CmdSweep(const SweepOptions &opt);

}  // namespace pldakit::cli

#endif  // PLDA_ADAPT_TOOLS_COMMANDS_HPP_
