// pldakit/io.cpp

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

#include "pldakit/io.hpp"

#include <fstream>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace pldakit {

namespace {

void SetPrecision(std::ostream &os) {
  os << std::setprecision(std::numeric_limits<double>::max_digits10);
}

std::string NextLine(std::istream &is, const char *what) {
  std::string line;
  if (!std::getline(is, line))
    throw FormatError(std::string("unexpected end of file reading ") + what);
  return line;
}

void ExpectTag(std::istream &is, const std::string &tag) {
  std::string line = NextLine(is, tag.c_str());
  std::istringstream ls(line);
  std::string got;
  ls >> got;
  if (got != tag)
    throw FormatError("expected '" + tag + "' line, got '" + got + "'");
}

Eigen::VectorXd ReadVectorLine(std::istream &is, Eigen::Index dim,
                               const char *what) {
  std::istringstream ls(NextLine(is, what));
  Eigen::VectorXd v(dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    if (!(ls >> v(i)))
      throw FormatError(std::string("short ") + what + " line");
  return v;
}

Eigen::VectorXd ReadTaggedVector(std::istream &is, const std::string &tag,
                                 Eigen::Index dim) {
  std::istringstream ls(NextLine(is, tag.c_str()));
  std::string got;
  ls >> got;
  if (got != tag)
    throw FormatError("expected '" + tag + "' line, got '" + got + "'");
  Eigen::VectorXd v(dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    if (!(ls >> v(i))) throw FormatError("short '" + tag + "' line");
  return v;
}

template <typename T, typename Writer>
void SaveToPath(const std::string &path, const T &value, Writer writer) {
  std::ofstream os(path);
  if (!os) throw FormatError("cannot open '" + path + "' for writing");
  writer(os, value);
  if (!os) throw FormatError("write failed for '" + path + "'");
}

template <typename Reader>
auto LoadFromPath(const std::string &path, Reader reader) {
  std::ifstream is(path);
  if (!is) throw FormatError("cannot open '" + path + "'");
  try {
    return reader(is);
  } catch (const FormatError &e) {
    throw FormatError(path + ": " + e.what());
  }
}

}  // namespace

void WriteSymMatrix(std::ostream &os, const SymMatrix &m) {
  SetPrecision(os);
  os << "symmatrix " << m.dim() << "\n";
  for (Eigen::Index i = 0; i < m.dim(); ++i) {
    for (Eigen::Index j = 0; j < m.dim(); ++j)
      os << (j ? " " : "") << m(i, j);
    os << "\n";
  }
}

SymMatrix ReadSymMatrix(std::istream &is) {
  std::istringstream header(NextLine(is, "symmatrix header"));
  std::string tag;
  Eigen::Index dim = 0;
  header >> tag >> dim;
  if (tag != "symmatrix" || dim < 1)
    throw FormatError("bad symmatrix header");
  Eigen::MatrixXd m(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    m.row(i) = ReadVectorLine(is, dim, "matrix row").transpose();
  return SymMatrix(m);  // constructor averages M and M^T
}

void WriteEmbeddings(std::ostream &os, const EmbeddingSet &set) {
  SetPrecision(os);
  os << "embeddings " << set.dim << "\n";
  for (const auto &r : set.records) {
    os << r.utterance_id << " " << (r.speaker_id ? *r.speaker_id : "-");
    for (Eigen::Index i = 0; i < set.dim; ++i) os << " " << r.vector(i);
    os << "\n";
  }
}

EmbeddingSet ReadEmbeddings(std::istream &is) {
  std::istringstream header(NextLine(is, "embeddings header"));
  std::string tag;
  Eigen::Index dim = 0;
  header >> tag >> dim;
  if (tag != "embeddings" || dim < 1)
    throw FormatError("bad embeddings header");
  EmbeddingSet set;
  set.dim = dim;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string utt, spk;
    if (!(ls >> utt >> spk)) throw FormatError("bad embedding record");
    Eigen::VectorXd v(dim);
    for (Eigen::Index i = 0; i < dim; ++i)
      if (!(ls >> v(i))) throw FormatError("short embedding record '" + utt + "'");
    std::string extra;
    if (ls >> extra)
      throw FormatError("trailing values in embedding record '" + utt + "'");
    set.Add(utt, spk == "-" ? std::nullopt : std::optional<std::string>(spk),
            std::move(v));
  }
  return set;
}

void WritePldaModel(std::ostream &os, const PldaModel &model) {
  SetPrecision(os);
  os << "plda " << model.dim() << "\n";
  os << "mu";
  for (Eigen::Index i = 0; i < model.dim(); ++i) os << " " << model.mu(i);
  os << "\n";
  os << "phi_b\n";
  WriteSymMatrix(os, model.phi_b);
  os << "phi_w\n";
  WriteSymMatrix(os, model.phi_w);
}

PldaModel ReadPldaModel(std::istream &is) {
  std::istringstream header(NextLine(is, "plda header"));
  std::string tag;
  Eigen::Index dim = 0;
  header >> tag >> dim;
  if (tag != "plda" || dim < 1) throw FormatError("bad plda header");
  PldaModel model;
  model.mu = ReadTaggedVector(is, "mu", dim);
  ExpectTag(is, "phi_b");
  model.phi_b = ReadSymMatrix(is);
  ExpectTag(is, "phi_w");
  model.phi_w = ReadSymMatrix(is);
  if (model.phi_b.dim() != dim || model.phi_w.dim() != dim)
    throw FormatError("plda covariance dimension mismatch");
  return model;
}

void WriteLdaProjection(std::ostream &os, const LdaProjection &p) {
  SetPrecision(os);
  os << "lda " << p.in_dim << " " << p.out_dim << "\n";
  for (Eigen::Index i = 0; i < p.in_dim; ++i)
    os << (i ? " " : "") << p.mean(i);
  os << "\n";
  for (Eigen::Index r = 0; r < p.out_dim; ++r) {
    for (Eigen::Index c = 0; c < p.in_dim; ++c)
      os << (c ? " " : "") << p.basis(r, c);
    os << "\n";
  }
}

LdaProjection ReadLdaProjection(std::istream &is) {
  std::istringstream header(NextLine(is, "lda header"));
  std::string tag;
  Eigen::Index in_dim = 0, out_dim = 0;
  header >> tag >> in_dim >> out_dim;
  if (tag != "lda" || in_dim < 1 || out_dim < 1 || out_dim > in_dim)
    throw FormatError("bad lda header");
  LdaProjection p;
  p.in_dim = in_dim;
  p.out_dim = out_dim;
  p.mean = ReadVectorLine(is, in_dim, "lda mean");
  p.basis.resize(out_dim, in_dim);
  for (Eigen::Index r = 0; r < out_dim; ++r)
    p.basis.row(r) = ReadVectorLine(is, in_dim, "lda basis row").transpose();
  return p;
}

void WriteTrials(std::ostream &os, const TrialSet &trials) {
  SetPrecision(os);
  for (const auto &t : trials.trials) {
    os << t.enroll_id << " " << t.test_id << " ";
    if (!t.label)
      os << "-";
    else
      os << (*t.label == TrialLabel::kTarget ? "target" : "nontarget");
    if (t.score) os << " " << *t.score;
    os << "\n";
  }
}

TrialSet ReadTrials(std::istream &is) {
  TrialSet set;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    Trial t;
    std::string label;
    if (!(ls >> t.enroll_id >> t.test_id >> label))
      throw FormatError("bad trial line '" + line + "'");
    if (label == "target")
      t.label = TrialLabel::kTarget;
    else if (label == "nontarget")
      t.label = TrialLabel::kNontarget;
    else if (label != "-")
      throw FormatError("bad trial label '" + label + "'");
    std::string score_token;
    if (ls >> score_token) {
      try {
        size_t used = 0;
        t.score = std::stod(score_token, &used);
        if (used != score_token.size()) throw std::invalid_argument(score_token);
      } catch (const std::logic_error &) {
        throw FormatError("bad trial score '" + score_token + "'");
      }
    }
    set.trials.push_back(std::move(t));
  }
  return set;
}

void WriteMeanVector(std::ostream &os, const Eigen::VectorXd &mean) {
  SetPrecision(os);
  os << "mean " << mean.size() << "\n";
  for (Eigen::Index i = 0; i < mean.size(); ++i)
    os << (i ? " " : "") << mean(i);
  os << "\n";
}

Eigen::VectorXd ReadMeanVector(std::istream &is) {
  std::istringstream header(NextLine(is, "mean header"));
  std::string tag;
  Eigen::Index dim = 0;
  header >> tag >> dim;
  if (tag != "mean" || dim < 1) throw FormatError("bad mean header");
  return ReadVectorLine(is, dim, "mean");
}

void SaveSymMatrix(const std::string &path, const SymMatrix &m) {
  SaveToPath(path, m, [](std::ostream &os, const SymMatrix &v) {
    WriteSymMatrix(os, v);
  });
}
SymMatrix LoadSymMatrix(const std::string &path) {
  return LoadFromPath(path, [](std::istream &is) { return ReadSymMatrix(is); });
}
void SaveEmbeddings(const std::string &path, const EmbeddingSet &set) {
  SaveToPath(path, set, [](std::ostream &os, const EmbeddingSet &v) {
    WriteEmbeddings(os, v);
  });
}
EmbeddingSet LoadEmbeddings(const std::string &path) {
  return LoadFromPath(path,
                      [](std::istream &is) { return ReadEmbeddings(is); });
}
void SavePldaModel(const std::string &path, const PldaModel &model) {
  SaveToPath(path, model, [](std::ostream &os, const PldaModel &v) {
    WritePldaModel(os, v);
  });
}
PldaModel LoadPldaModel(const std::string &path) {
  return LoadFromPath(path,
                      [](std::istream &is) { return ReadPldaModel(is); });
}
void SaveLdaProjection(const std::string &path, const LdaProjection &p) {
  SaveToPath(path, p, [](std::ostream &os, const LdaProjection &v) {
    WriteLdaProjection(os, v);
  });
}
LdaProjection LoadLdaProjection(const std::string &path) {
  return LoadFromPath(path,
                      [](std::istream &is) { return ReadLdaProjection(is); });
}
void SaveTrials(const std::string &path, const TrialSet &trials) {
  SaveToPath(path, trials, [](std::ostream &os, const TrialSet &v) {
    WriteTrials(os, v);
  });
}
TrialSet LoadTrials(const std::string &path) {
  return LoadFromPath(path, [](std::istream &is) { return ReadTrials(is); });
}
void SaveMeanVector(const std::string &path, const Eigen::VectorXd &mean) {
  SaveToPath(path, mean, [](std::ostream &os, const Eigen::VectorXd &v) {
    WriteMeanVector(os, v);
  });
}
Eigen::VectorXd LoadMeanVector(const std::string &path) {
  return LoadFromPath(path,
                      [](std::istream &is) { return ReadMeanVector(is); });
}

}  // namespace pldakit
