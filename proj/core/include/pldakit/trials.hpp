// pldakit/trials.hpp

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

#ifndef PLDAKIT_TRIALS_HPP_
#define PLDAKIT_TRIALS_HPP_

#include <optional>
#include <string>
#include <vector>

namespace pldakit {

enum class TrialLabel { kTarget, kNontarget };

struct Trial {
  std::string enroll_id;
  std::string test_id;
  std::optional<TrialLabel> label;
  std::optional<double> score;
};

struct TrialSet {
  std::vector<Trial> trials;

  bool AllScored() const {
    for (const auto &t : trials)
      if (!t.score) return false;
    return true;
  }
  bool AllLabeled() const {
    for (const auto &t : trials)
      if (!t.label) return false;
    return true;
  }
};

}  // namespace pldakit

#endif  // PLDAKIT_TRIALS_HPP_
