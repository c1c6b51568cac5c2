// tools/main.cpp

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

#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "pldakit/errors.hpp"

int main(int argc, char **argv) {
  CLI::App app{"Covariance-level PLDA domain adaptation pipeline"};
  app.require_subcommand(1);

  pldakit::cli::SynthOptions synth;
  auto *synth_cmd =
      app.add_subcommand("synth", "Generate a synthetic domain-shift corpus");
  synth_cmd->add_option("--out-dir", synth.out_dir, "Output directory")
      ->required();
  synth_cmd->add_option("--config", synth.config_path,
                        "Key-value config file (keys: dim, ood_speakers, "
                        "ood_utts, ind_speakers, ind_utts, eval_speakers, "
                        "eval_utts, cohort_size, nontarget_factor, seed)");
  synth_cmd->add_option("--dim", synth.dim, "Embedding dimension");
  synth_cmd->add_option("--ood-speakers", synth.ood_speakers, "");
  synth_cmd->add_option("--ood-utts", synth.ood_utts, "");
  synth_cmd->add_option("--ind-speakers", synth.ind_speakers, "");
  synth_cmd->add_option("--ind-utts", synth.ind_utts, "");
  synth_cmd->add_option("--eval-speakers", synth.eval_speakers, "");
  synth_cmd->add_option("--eval-utts", synth.eval_utts, "");
  synth_cmd->add_option("--cohort-size", synth.cohort_size, "");
  synth_cmd->add_option("--nontarget-factor", synth.nontarget_factor, "");
  synth_cmd->add_option("--seed", synth.seed, "RNG seed");

  pldakit::cli::TrainOptions train;
  auto *train_cmd = app.add_subcommand(
      "train", "Fit LDA and train OOD (and InD, if labeled) PLDA models");
  train_cmd->add_option("--ood", train.ood_path, "Labeled OOD embeddings")
      ->required();
  train_cmd->add_option("--ind", train.ind_path, "InD embeddings")->required();
  train_cmd->add_option("--out-dir", train.out_dir, "Model directory")
      ->required();
  train_cmd->add_option("--lda-dim", train.lda_dim,
                        "Target LDA dimension (default 150, clamped)");
  train_cmd->add_option("--lda-train", train.lda_train,
                        "Which domain trains the LDA: ood (default) or ind");

  pldakit::cli::AdaptOptions adapt;
  auto *adapt_cmd =
      app.add_subcommand("adapt", "Adapt the OOD PLDA toward the new domain");
  adapt_cmd->add_option("--model-dir", adapt.model_dir, "train output dir")
      ->required();
  adapt_cmd->add_option("--out", adapt.out_path, "Adapted model file")
      ->required();
  adapt_cmd->add_option("--recipe", adapt.recipe,
                        "Preset: coral_plus|kaldi|lip|lip_reg|cip|cip_reg|"
                        "case7|case8");
  adapt_cmd->add_option("--phi0", adapt.phi0, "Explicit base role");
  adapt_cmd->add_option("--phi1", adapt.phi1, "Explicit developer role");
  adapt_cmd->add_option("--phi2", adapt.phi2, "Explicit reference role");
  adapt_cmd->add_option("--alpha", adapt.alpha, "Interpolation weight [0,1]");

  pldakit::cli::ScoreOptions score;
  auto *score_cmd = app.add_subcommand("score", "Score verification trials");
  score_cmd->add_option("--model", score.model_path, "PLDA model file")
      ->required();
  score_cmd
      ->add_option("--model-dir", score.model_dir,
                   "train output dir (LDA + centering means)")
      ->required();
  score_cmd->add_option("--enroll", score.enroll_path, "Enrollment embeddings")
      ->required();
  score_cmd->add_option("--test", score.test_path, "Test embeddings")
      ->required();
  score_cmd->add_option("--trials", score.trials_path, "Trial list")
      ->required();
  score_cmd->add_option("--out", score.out_path, "Scored trial file")
      ->required();
  score_cmd->add_option("--cohort", score.cohort_path,
                        "Cohort embeddings; enables AS-norm");
  score_cmd->add_option("--snorm-k", score.snorm_k, "AS-norm top-k");

  pldakit::cli::EvalOptions eval;
  auto *eval_cmd = app.add_subcommand("eval", "Compute EER and min_cprimary");
  eval_cmd->add_option("--trials", eval.trials_path, "Scored, labeled trials")
      ->required();
  eval_cmd->add_option("--p-targets", eval.p_targets, "Target priors");
  eval_cmd->add_option("--c-miss", eval.c_miss, "Miss cost");
  eval_cmd->add_option("--c-fa", eval.c_fa, "False-alarm cost");
  eval_cmd->add_option("--det-out", eval.det_out, "DET operating-point TSV");

  pldakit::cli::SweepOptions sweep;
  auto *sweep_cmd = app.add_subcommand(
      "sweep", "Evaluate recipes over an interpolation-weight grid");
  sweep_cmd->add_option("--model-dir", sweep.model_dir, "train output dir")
      ->required();
  sweep_cmd->add_option("--enroll", sweep.enroll_path, "")->required();
  sweep_cmd->add_option("--test", sweep.test_path, "")->required();
  sweep_cmd->add_option("--trials", sweep.trials_path, "")->required();
  sweep_cmd->add_option("--out", sweep.out_path, "TSV output")->required();
  sweep_cmd->add_option("--alpha-grid", sweep.alpha_grid, "lo:hi:step");
  sweep_cmd->add_option("--recipes", sweep.recipes,
                        "Preset subset (default: all applicable)");
  sweep_cmd->add_option("--cohort", sweep.cohort_path, "Enables AS-norm");
  sweep_cmd->add_option("--snorm-k", sweep.snorm_k, "AS-norm top-k");
  sweep_cmd->add_option("--p-targets", sweep.p_targets, "Target priors");

  CLI11_PARSE(app, argc, argv);

  try {
    if (synth_cmd->parsed()) pldakit::cli::CmdSynth(synth);
    if (train_cmd->parsed()) pldakit::cli::CmdTrain(train);
    if (adapt_cmd->parsed()) pldakit::cli::CmdAdapt(adapt);
    if (score_cmd->parsed()) pldakit::cli::CmdScore(score);
    if (eval_cmd->parsed()) pldakit::cli::CmdEval(eval, std::cout);
    if (sweep_cmd->parsed()) pldakit::cli::CmdSweep(sweep);
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
