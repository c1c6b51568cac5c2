// benchmarks/bench_main.cpp

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

#include <random>

#include <benchmark/benchmark.h>

#include "pldakit/adapt.hpp"
#include "pldakit/plda.hpp"
#include "pldakit/symmat.hpp"

using namespace pldakit;

namespace {

SymMatrix RandomSpd(Eigen::Index dim, std::mt19937_64 &rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXd a(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j)
    for (Eigen::Index i = 0; i < dim; ++i) a(i, j) = normal(rng);
  return SymMatrix(a.transpose() * a / static_cast<double>(dim) +
                   0.1 * Eigen::MatrixXd::Identity(dim, dim));
}

Eigen::VectorXd RandomVector(Eigen::Index dim, std::mt19937_64 &rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::VectorXd v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) v(i) = normal(rng);
  return v;
}

void BM_PsdSqrt(benchmark::State &state) {
  std::mt19937_64 rng(1);
  SymMatrix m = RandomSpd(state.range(0), rng);
  for (auto _ : state) benchmark::DoNotOptimize(PsdSqrt(m));
}
BENCHMARK(BM_PsdSqrt)->Arg(32)->Arg(150);

void BM_SimultaneousDiag(benchmark::State &state) {
  std::mt19937_64 rng(2);
  SymMatrix y = RandomSpd(state.range(0), rng);
  SymMatrix z = RandomSpd(state.range(0), rng);
  for (auto _ : state) benchmark::DoNotOptimize(SimultaneousDiag(y, z));
}
BENCHMARK(BM_SimultaneousDiag)->Arg(32)->Arg(150);

void BM_GammaMax(benchmark::State &state) {
  std::mt19937_64 rng(3);
  SymMatrix y = RandomSpd(state.range(0), rng);
  SymMatrix z = RandomSpd(state.range(0), rng);
  for (auto _ : state) benchmark::DoNotOptimize(GammaMax(y, z));
}
BENCHMARK(BM_GammaMax)->Arg(32)->Arg(150);

void BM_CoralPseudo(benchmark::State &state) {
  std::mt19937_64 rng(4);
  SymMatrix phi = RandomSpd(state.range(0), rng);
  SymMatrix c_o = RandomSpd(state.range(0), rng);
  SymMatrix c_i = RandomSpd(state.range(0), rng);
  for (auto _ : state) benchmark::DoNotOptimize(CoralPseudo(phi, c_o, c_i));
}
BENCHMARK(BM_CoralPseudo)->Arg(32)->Arg(150);

void BM_AdaptCovariance(benchmark::State &state) {
  std::mt19937_64 rng(5);
  const Eigen::Index d = state.range(0);
  CovarianceCatalog cat(RandomSpd(d, rng), RandomSpd(d, rng), RandomSpd(d, rng),
                        RandomSpd(d, rng), RandomSpd(d, rng),
                        RandomSpd(d, rng));
  AdaptRecipe rec = Preset("cip_reg", 0.5);
  for (auto _ : state)
    benchmark::DoNotOptimize(AdaptCovariance(rec, cat, CovKind::kBetween));
}
BENCHMARK(BM_AdaptCovariance)->Arg(32)->Arg(150);

void BM_ScorerConstruction(benchmark::State &state) {
  std::mt19937_64 rng(6);
  PldaModel m;
  m.mu = Eigen::VectorXd::Zero(state.range(0));
  m.phi_b = RandomSpd(state.range(0), rng);
  m.phi_w = RandomSpd(state.range(0), rng);
  for (auto _ : state) benchmark::DoNotOptimize(PldaScorer(m));
}
BENCHMARK(BM_ScorerConstruction)->Arg(32)->Arg(150);

void BM_ScoreThroughput(benchmark::State &state) {
  std::mt19937_64 rng(7);
  const Eigen::Index d = state.range(0);
  PldaModel m;
  m.mu = Eigen::VectorXd::Zero(d);
  m.phi_b = RandomSpd(d, rng);
  m.phi_w = RandomSpd(d, rng);
  PldaScorer scorer(m);
  Eigen::VectorXd e = RandomVector(d, rng);
  Eigen::VectorXd t = RandomVector(d, rng);
  for (auto _ : state) benchmark::DoNotOptimize(scorer.Score(e, t));
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_ScoreThroughput)->Arg(32)->Arg(150);

}  // namespace

BENCHMARK_MAIN();
