// pldakit/embedding.hpp

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

#ifndef PLDAKIT_EMBEDDING_HPP_
#define PLDAKIT_EMBEDDING_HPP_

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "pldakit/errors.hpp"

namespace pldakit {

struct EmbeddingRecord {
  std::string utterance_id;
  std::optional<std::string> speaker_id;
  Eigen::VectorXd vector;
};

/// A set of fixed-dimension speaker embeddings.  The set is "labeled"
/// iff every record carries a speaker id.
struct EmbeddingSet {
  Eigen::Index dim = 0;
  std::vector<EmbeddingRecord> records;

  void Add(std::string utt, std::optional<std::string> spk, Eigen::VectorXd v) {
    if (v.size() != dim)
      throw DimMismatchError("EmbeddingSet: vector dim " +
                             std::to_string(v.size()) + " != " +
                             std::to_string(dim));
    records.push_back({std::move(utt), std::move(spk), std::move(v)});
  }

  bool Labeled() const {
    for (const auto &r : records)
      if (!r.speaker_id) return false;
    return !records.empty();
  }

  const EmbeddingRecord *Find(const std::string &utt) const {
    for (const auto &r : records)
      if (r.utterance_id == utt) return &r;
    return nullptr;
  }
};

}  // namespace pldakit

#endif  // PLDAKIT_EMBEDDING_HPP_
