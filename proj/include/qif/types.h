// Copyright 2026 The topics-qif Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TOPICSQIF_QIF_TYPES_H_
#define TOPICSQIF_QIF_TYPES_H_

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qif {

// Absolute tolerance for stochasticity and probability-mass checks.
inline constexpr double kProbabilityTolerance = 1e-9;

enum class ErrorCode {
  kNonStochasticRow,
  kNegativeEntry,
  kDuplicateLabel,
  kBadLabel,
  kEmptyLabelSet,
  kBadDimensions,
  kLabelMismatch,
  kBadProbability,
  kZeroPriorVulnerability,
  kZeroEntry,
  kMatrixTooLarge,
  kNotDeterministic,
  kTopicNotInTaxonomy,
  kIncompleteAssignment,
  kParamMismatch,
  kBadWorld,
  kMissingMPrime,
  kZeroR,
  kBadParams,
  kOverflow,
  kUnparseable,
  kMalformedCsv,
  kEmptyClassification,
  kInsufficientTopics,
  kEmptyTopSet,
  kMemoryCap,
  kIoError,
};

const char* ErrorCodeName(ErrorCode code);

// All validation failures in this library throw Error; code() identifies the
// condition for programmatic handling, what() carries the human message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

using Label = std::string;

// Guard against multiplicative blow-up in parallel/kronecker compositions:
// operations refuse to build matrices with more than EntryCap() entries.
std::size_t EntryCap();
void SetEntryCap(std::size_t cap);

// A probability distribution over labeled secrets. Entries are validated to
// be non-negative and to sum to 1 within kProbabilityTolerance, then
// renormalized exactly. Immutable after construction.
class Prior {
 public:
  Prior(std::vector<Label> labels, std::vector<double> probs);

  static Prior Uniform(std::vector<Label> labels);
  static Prior Point(std::vector<Label> labels, std::size_t index);

  std::size_t size() const { return labels_.size(); }
  const std::vector<Label>& labels() const { return labels_; }
  const std::vector<double>& probs() const { return probs_; }
  double prob(std::size_t i) const { return probs_[i]; }

 private:
  std::vector<Label> labels_;
  std::vector<double> probs_;
};

// A row-stochastic matrix from labeled secret inputs (rows) to labeled
// observable outputs (columns). Rows must sum to 1 within
// kProbabilityTolerance and are renormalized exactly on construction.
// Immutable after construction; safe to share across threads.
class Channel {
 public:
  Channel(std::vector<Label> row_labels, std::vector<Label> col_labels,
          std::vector<double> row_major_entries);
  Channel(std::vector<Label> row_labels, std::vector<Label> col_labels,
          const std::vector<std::vector<double>>& entries);

  std::size_t num_rows() const { return row_labels_.size(); }
  std::size_t num_cols() const { return col_labels_.size(); }
  const std::vector<Label>& row_labels() const { return row_labels_; }
  const std::vector<Label>& col_labels() const { return col_labels_; }

  double at(std::size_t row, std::size_t col) const {
    return entries_[row * num_cols() + col];
  }
  std::span<const double> row(std::size_t r) const {
    return std::span<const double>(entries_).subspan(r * num_cols(),
                                                     num_cols());
  }
  const std::vector<double>& entries() const { return entries_; }

 private:
  std::vector<Label> row_labels_;
  std::vector<Label> col_labels_;
  std::vector<double> entries_;  // row-major
};

// Non-negative gain table g(action, secret). Rows are adversary actions,
// columns are secrets.
class GainMatrix {
 public:
  GainMatrix(std::vector<Label> action_labels, std::vector<Label> secret_labels,
             std::vector<double> row_major_gains);

  std::size_t num_actions() const { return action_labels_.size(); }
  std::size_t num_secrets() const { return secret_labels_.size(); }
  const std::vector<Label>& action_labels() const { return action_labels_; }
  const std::vector<Label>& secret_labels() const { return secret_labels_; }
  double at(std::size_t action, std::size_t secret) const {
    return gains_[action * num_secrets() + secret];
  }

 private:
  std::vector<Label> action_labels_;
  std::vector<Label> secret_labels_;
  std::vector<double> gains_;
};

// The joint matrix J with J[x][y] = prior[x] * channel[x][y]. Entries are
// non-negative and sum to 1.
class JointMatrix {
 public:
  JointMatrix(const Prior& prior, const Channel& channel);

  std::size_t num_rows() const { return row_labels_.size(); }
  std::size_t num_cols() const { return col_labels_.size(); }
  const std::vector<Label>& row_labels() const { return row_labels_; }
  const std::vector<Label>& col_labels() const { return col_labels_; }
  double at(std::size_t row, std::size_t col) const {
    return entries_[row * num_cols() + col];
  }

 private:
  std::vector<Label> row_labels_;
  std::vector<Label> col_labels_;
  std::vector<double> entries_;
};

// Validates one axis: labels non-empty and duplicate-free.
void ValidateLabels(const std::vector<Label>& labels, const char* axis);

// "(a,b)" — joint label for product compositions.
Label PairLabel(const Label& a, const Label& b);

}  // namespace qif

#endif  // TOPICSQIF_QIF_TYPES_H_
