// tools/commands.cpp

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

#include "commands.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>

#include "pldakit/adapt.hpp"
#include "pldakit/io.hpp"
#include "pldakit/metrics.hpp"
#include "pldakit/plda.hpp"
#include "pldakit/preprocess.hpp"
#include "pldakit/scorenorm.hpp"
#include "pldakit/synthgen.hpp"

namespace fs = std::filesystem;

namespace pldakit::cli {

namespace {

std::string Join(const std::string &dir, const char *name) {
  return (fs::path(dir) / name).string();
}

void EnsureDir(const std::string &dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error("cannot create directory '" + dir + "'");
}

std::map<std::string, std::string> ReadConfigFile(const std::string &path) {
  std::ifstream is(path);
  if (!is) throw FormatError("cannot open config '" + path + "'");
  std::map<std::string, std::string> kv;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string key, value;
    if (!(ls >> key >> value))
      throw FormatError("bad config line '" + line + "'");
    kv[key] = value;
  }
  return kv;
}

template <typename T>
void MaybeSet(const std::map<std::string, std::string> &kv,
              const std::string &key, T &out) {
  auto it = kv.find(key);
  if (it == kv.end()) return;
  std::istringstream ss(it->second);
  if (!(ss >> out)) throw FormatError("bad config value for '" + key + "'");
}

// Gives the eval split its own id namespace so it cannot collide with the
// in-domain training speakers.
void Relabel(EmbeddingSet &set, const std::string &from,
             const std::string &to) {
  for (auto &r : set.records) {
    if (r.utterance_id.rfind(from, 0) == 0)
      r.utterance_id = to + r.utterance_id.substr(from.size());
    if (r.speaker_id && r.speaker_id->rfind(from, 0) == 0)
      r.speaker_id = to + r.speaker_id->substr(from.size());
  }
}

struct ModelDirContents {
  LdaProjection lda;
  PldaModel ood_model;
  std::optional<PldaModel> ind_model;
  SymMatrix c_ood, c_ind;
  Eigen::VectorXd ind_mean_raw;
  Eigen::VectorXd ind_mean_proj;
};

ModelDirContents LoadModelDir(const std::string &dir) {
  ModelDirContents m;
  m.lda = LoadLdaProjection(Join(dir, kLdaFile));
  m.ood_model = LoadPldaModel(Join(dir, kOodModelFile));
  if (fs::exists(Join(dir, kIndModelFile)))
    m.ind_model = LoadPldaModel(Join(dir, kIndModelFile));
  m.c_ood = LoadSymMatrix(Join(dir, kOodTotalFile));
  m.c_ind = LoadSymMatrix(Join(dir, kIndTotalFile));
  m.ind_mean_raw = LoadMeanVector(Join(dir, kIndMeanRawFile));
  m.ind_mean_proj = LoadMeanVector(Join(dir, kIndMeanProjFile));
  return m;
}

CovarianceCatalog MakeCatalog(const ModelDirContents &m) {
  if (m.ind_model)
    return CovarianceCatalog(m.ood_model.phi_b, m.ood_model.phi_w, m.c_ood,
                             m.c_ind, m.ind_model->phi_b, m.ind_model->phi_w);
  return CovarianceCatalog(m.ood_model.phi_b, m.ood_model.phi_w, m.c_ood,
                           m.c_ind);
}

AdaptRecipe MakeRecipe(const AdaptOptions &opt) {
  const bool have_roles =
      !opt.phi0.empty() || !opt.phi1.empty() || !opt.phi2.empty();
  if (!opt.recipe.empty() && have_roles)
    throw InvalidArgumentError(
        "give either --recipe or explicit --phi0/--phi1/--phi2, not both");
  if (!opt.recipe.empty()) return Preset(opt.recipe, opt.alpha);
  if (opt.phi0.empty() || opt.phi1.empty() || opt.phi2.empty())
    throw InvalidArgumentError(
        "explicit recipes need all of --phi0, --phi1, --phi2");
  if (opt.alpha < 0.0 || opt.alpha > 1.0)
    throw InvalidArgumentError("--alpha must be in [0, 1]");
  AdaptRecipe rec;
  rec.phi0 = CovRole::Simple(ParseBaseRole(opt.phi0));
  rec.phi1 = CovRole::Simple(ParseBaseRole(opt.phi1));
  rec.phi2 = CovRole::Simple(ParseBaseRole(opt.phi2));
  rec.alpha = opt.alpha;
  return rec;
}

EmbeddingSet ProjectForScoring(const ModelDirContents &m,
                               const EmbeddingSet &raw) {
  return LdaApply(m.lda, Center(raw, m.ind_mean_raw));
}

std::vector<double> ParseAlphaGrid(const std::string &spec) {
  double lo = 0.0, hi = 1.0, step = 0.1;
  char c1 = 0, c2 = 0;
  std::istringstream ss(spec);
  if (!(ss >> lo >> c1 >> hi >> c2 >> step) || c1 != ':' || c2 != ':' ||
      step <= 0.0)
    throw InvalidArgumentError("bad --alpha-grid '" + spec +
                               "', expected lo:hi:step");
  std::vector<double> grid;
  for (double a = lo; a <= hi + 1e-12; a += step)
    grid.push_back(std::min(std::max(a, 0.0), 1.0));
  if (grid.empty() || grid.front() < 0.0 || grid.back() > 1.0)
    throw InvalidArgumentError("--alpha-grid must stay inside [0, 1]");
  return grid;
}

}  // namespace

void CmdSynth(const SynthOptions &opt) {
  SynthOptions o = opt;
  if (!o.config_path.empty()) {
    auto kv = ReadConfigFile(o.config_path);
    MaybeSet(kv, "dim", o.dim);
    MaybeSet(kv, "ood_speakers", o.ood_speakers);
    MaybeSet(kv, "ood_utts", o.ood_utts);
    MaybeSet(kv, "ind_speakers", o.ind_speakers);
    MaybeSet(kv, "ind_utts", o.ind_utts);
    MaybeSet(kv, "eval_speakers", o.eval_speakers);
    MaybeSet(kv, "eval_utts", o.eval_utts);
    MaybeSet(kv, "cohort_size", o.cohort_size);
    MaybeSet(kv, "nontarget_factor", o.nontarget_factor);
    MaybeSet(kv, "seed", o.seed);
  }
  EnsureDir(o.out_dir);

  SynthConfig base;
  base.dim = o.dim;
  base.seed = o.seed;
  base.n_speakers_ood = o.ood_speakers;
  base.utts_per_speaker_ood = o.ood_utts;
  base.n_speakers_ind = o.ind_speakers;
  base.utts_per_speaker_ind = o.ind_utts;
  base = MakeRandomTruth(base);

  SynthCorpus corpus = Generate(base);

  // Second draw from the same ground truth for the evaluation split.
  SynthConfig eval_cfg = base;
  eval_cfg.seed = base.seed ^ 0x6576616cULL;
  eval_cfg.n_speakers_ood = 2;
  eval_cfg.utts_per_speaker_ood = 1;
  eval_cfg.n_speakers_ind = o.eval_speakers;
  eval_cfg.utts_per_speaker_ind = o.eval_utts;
  EmbeddingSet eval_set = Generate(eval_cfg).ind;
  Relabel(eval_set, "ind_", "eval_");
  TrialSplit split = BuildTrials(eval_set, o.seed, o.nontarget_factor);

  // Unlabeled in-domain cohort for score normalization.
  SynthConfig coh_cfg = base;
  coh_cfg.seed = base.seed ^ 0x636f68ULL;
  coh_cfg.n_speakers_ood = 2;
  coh_cfg.utts_per_speaker_ood = 1;
  coh_cfg.n_speakers_ind = std::max(o.cohort_size, 2);
  coh_cfg.utts_per_speaker_ind = 1;
  EmbeddingSet cohort = Generate(coh_cfg).ind;
  Relabel(cohort, "ind_", "coh_");
  for (auto &r : cohort.records) r.speaker_id.reset();

  SaveEmbeddings(Join(o.out_dir, "ood.emb"), corpus.ood);
  SaveEmbeddings(Join(o.out_dir, "ind.emb"), corpus.ind);
  SaveEmbeddings(Join(o.out_dir, "enroll.emb"), split.enroll);
  SaveEmbeddings(Join(o.out_dir, "test.emb"), split.test);
  SaveEmbeddings(Join(o.out_dir, "cohort.emb"), cohort);
  SaveTrials(Join(o.out_dir, "trials.txt"), split.trials);

  const auto &t = corpus.truth;
  SaveSymMatrix(Join(o.out_dir, "truth_phi_b_ood.symmat"), t.phi_ood_b());
  SaveSymMatrix(Join(o.out_dir, "truth_phi_w_ood.symmat"), t.phi_ood_w());
  SaveSymMatrix(Join(o.out_dir, "truth_phi_b_ind.symmat"), t.phi_ind_b());
  SaveSymMatrix(Join(o.out_dir, "truth_phi_w_ind.symmat"), t.phi_ind_w());
  SaveSymMatrix(Join(o.out_dir, "truth_c_ood.symmat"), t.c_ood());
  SaveSymMatrix(Join(o.out_dir, "truth_c_ind.symmat"), t.c_ind());
}

void CmdTrain(const TrainOptions &opt) {
  if (opt.lda_train != "ood" && opt.lda_train != "ind")
    throw InvalidArgumentError("--lda-train must be 'ood' or 'ind'");
  EnsureDir(opt.out_dir);

  EmbeddingSet ood = LoadEmbeddings(opt.ood_path);
  EmbeddingSet ind = LoadEmbeddings(opt.ind_path);
  if (!ood.Labeled())
    throw InvalidArgumentError("train: OOD set must be labeled");

  // Centering convention: OOD by its own mean, everything in-domain by
  // the in-domain mean.
  Eigen::VectorXd ood_mean = ComputeMean(ood);
  Eigen::VectorXd ind_mean = ComputeMean(ind);
  EmbeddingSet ood_c = Center(ood, ood_mean);
  EmbeddingSet ind_c = Center(ind, ind_mean);

  const EmbeddingSet &lda_data = opt.lda_train == "ood" ? ood_c : ind_c;
  if (!lda_data.Labeled())
    throw InvalidArgumentError("train: LDA training set must be labeled");
  long n_classes = 0;
  {
    std::map<std::string, int> spk;
    for (const auto &r : lda_data.records) spk[*r.speaker_id] = 1;
    n_classes = static_cast<long>(spk.size());
  }
  const long lda_dim =
      std::min({opt.lda_dim, static_cast<long>(ood.dim), n_classes - 1});
  LdaProjection lda = LdaFit(lda_data, lda_dim);

  EmbeddingSet ood_p = LdaApply(lda, ood_c);
  EmbeddingSet ind_p = LdaApply(lda, ind_c);

  SaveLdaProjection(Join(opt.out_dir, kLdaFile), lda);
  SavePldaModel(Join(opt.out_dir, kOodModelFile), TrainPlda(ood_p));
  if (ind.Labeled())
    SavePldaModel(Join(opt.out_dir, kIndModelFile), TrainPlda(ind_p));
  SaveSymMatrix(Join(opt.out_dir, kOodTotalFile), TotalCovariance(ood_p));
  SaveSymMatrix(Join(opt.out_dir, kIndTotalFile), TotalCovariance(ind_p));
  SaveMeanVector(Join(opt.out_dir, kOodMeanRawFile), ood_mean);
  SaveMeanVector(Join(opt.out_dir, kIndMeanRawFile), ind_mean);
  SaveMeanVector(Join(opt.out_dir, kIndMeanProjFile), ComputeMean(ind_p));
}

void CmdAdapt(const AdaptOptions &opt) {
  ModelDirContents m = LoadModelDir(opt.model_dir);
  CovarianceCatalog catalog = MakeCatalog(m);
  AdaptRecipe recipe = MakeRecipe(opt);
  PldaModel adapted = AdaptModel(recipe, catalog, m.ind_mean_proj);
  SavePldaModel(opt.out_path, adapted);
}

void CmdScore(const ScoreOptions &opt) {
  ModelDirContents m = LoadModelDir(opt.model_dir);
  PldaModel model = LoadPldaModel(opt.model_path);
  EmbeddingSet enroll = ProjectForScoring(m, LoadEmbeddings(opt.enroll_path));
  EmbeddingSet test = ProjectForScoring(m, LoadEmbeddings(opt.test_path));
  TrialSet trials = LoadTrials(opt.trials_path);

  TrialSet scored = ScoreTrials(model, enroll, test, trials);
  if (!opt.cohort_path.empty()) {
    EmbeddingSet cohort =
        ProjectForScoring(m, LoadEmbeddings(opt.cohort_path));
    scored = AsNorm(model, scored, enroll, test, cohort, opt.snorm_k);
  }
  SaveTrials(opt.out_path, scored);
}

void CmdEval(const EvalOptions &opt, std::ostream &report) {
  TrialSet trials = LoadTrials(opt.trials_path);
  CostParams params{opt.p_targets, opt.c_miss, opt.c_fa};

  report << std::setprecision(std::numeric_limits<double>::max_digits10);
  report << "eer " << Eer(trials) << "\n";
  report << "min_cprimary " << MinCprimary(trials, params) << "\n";

  if (!opt.det_out.empty()) {
    std::ofstream det(opt.det_out);
    if (!det) throw Error("cannot open '" + opt.det_out + "' for writing");
    det << std::setprecision(std::numeric_limits<double>::max_digits10);
    det << "threshold\tp_miss\tp_fa\n";
    for (const auto &pt : ErrorCurve(trials))
      det << pt.threshold << "\t" << pt.p_miss << "\t" << pt.p_fa << "\n";
  }
}

void CmdSweep(const SweepOptions &opt) {
  ModelDirContents m = LoadModelDir(opt.model_dir);
  CovarianceCatalog catalog = MakeCatalog(m);
  EmbeddingSet enroll = ProjectForScoring(m, LoadEmbeddings(opt.enroll_path));
  EmbeddingSet test = ProjectForScoring(m, LoadEmbeddings(opt.test_path));
  TrialSet trials = LoadTrials(opt.trials_path);
  std::optional<EmbeddingSet> cohort;
  if (!opt.cohort_path.empty())
    cohort = ProjectForScoring(m, LoadEmbeddings(opt.cohort_path));

  std::vector<std::string> recipes = opt.recipes;
  if (recipes.empty()) {
    for (const auto &name : PresetNames()) {
      const bool unsupervised = name == "coral_plus" || name == "kaldi";
      if (unsupervised || catalog.HasInDomainPlda()) recipes.push_back(name);
    }
  }
  const std::vector<double> grid = ParseAlphaGrid(opt.alpha_grid);
  const CostParams params{opt.p_targets, 1.0, 1.0};

  std::ofstream os(opt.out_path);
  if (!os) throw Error("cannot open '" + opt.out_path + "' for writing");
  os << std::setprecision(std::numeric_limits<double>::max_digits10);
  os << "alpha\trecipe\teer\tmin_cprimary\n";
  for (const auto &name : recipes) {
    for (double alpha : grid) {
      PldaModel adapted =
          AdaptModel(Preset(name, alpha), catalog, m.ind_mean_proj);
      TrialSet scored = ScoreTrials(adapted, enroll, test, trials);
      if (cohort)
        scored = AsNorm(adapted, scored, enroll, test, *cohort, opt.snorm_k);
      os << alpha << "\t" << name << "\t" << Eer(scored) << "\t"
         << MinCprimary(scored, params) << "\n";
    }
  }
  if (!os) throw Error("write failed for '" + opt.out_path + "'");
}

}  // namespace pldakit::cli
