// pldakit/io.hpp

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

#ifndef PLDAKIT_IO_HPP_
#define PLDAKIT_IO_HPP_

#include <iosfwd>
#include <string>

#include "pldakit/embedding.hpp"
#include "pldakit/plda.hpp"
#include "pldakit/preprocess.hpp"
#include "pldakit/symmat.hpp"
#include "pldakit/trials.hpp"

// Plain-text file formats shared repo-wide.  Every matrix, embedding,
// model, and projection file opens with a tagged header line carrying the
// dimensions; trial files are one trial per line.  Values are written
// with max_digits10 so round-trips are lossless and reruns byte-identical.
//
//   symmatrix <dim>           full row-major matrix, reader symmetrizes
//   embeddings <dim>          <utt_id> <speaker_id|-> <dim floats>
//   plda <dim>                mu line, then tagged phi_b / phi_w blocks
//   lda <in_dim> <out_dim>    mean line, then out_dim basis rows
//   <enroll> <test> <target|nontarget|-> [<score>]

namespace pldakit {

void WriteSymMatrix(std::ostream &os, const SymMatrix &m);
SymMatrix ReadSymMatrix(std::istream &is);

void WriteEmbeddings(std::ostream &os, const EmbeddingSet &set);
EmbeddingSet ReadEmbeddings(std::istream &is);

void WritePldaModel(std::ostream &os, const PldaModel &model);
PldaModel ReadPldaModel(std::istream &is);

void WriteLdaProjection(std::ostream &os, const LdaProjection &p);
LdaProjection ReadLdaProjection(std::istream &is);

void WriteTrials(std::ostream &os, const TrialSet &trials);
TrialSet ReadTrials(std::istream &is);

// `mean <dim>` header plus one line of floats; used for the centering
// means the train step hands to score/adapt.
void WriteMeanVector(std::ostream &os, const Eigen::VectorXd &mean);
Eigen::VectorXd ReadMeanVector(std::istream &is);

// Path convenience wrappers; throw FormatError with the file name on any
// parse or open failure.
void SaveSymMatrix(const std::string &path, const SymMatrix &m);
SymMatrix LoadSymMatrix(const std::string &path);
void SaveEmbeddings(const std::string &path, const EmbeddingSet &set);
EmbeddingSet LoadEmbeddings(const std::string &path);
void SavePldaModel(const std::string &path, const PldaModel &model);
PldaModel LoadPldaModel(const std::string &path);
void SaveLdaProjection(const std::string &path, const LdaProjection &p);
LdaProjection LoadLdaProjection(const std::string &path);
void SaveTrials(const std::string &path, const TrialSet &trials);
TrialSet LoadTrials(const std::string &path);
void SaveMeanVector(const std::string &path, const Eigen::VectorXd &mean);
Eigen::VectorXd LoadMeanVector(const std::string &path);

}  // namespace pldakit

#endif  // PLDAKIT_IO_HPP_
