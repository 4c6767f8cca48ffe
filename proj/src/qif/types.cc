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

#include "qif/types.h"

#include <atomic>
#include <cmath>
#include <cstddef>
#include <sstream>
#include <unordered_set>
#include <utility>

namespace qif {

namespace {

std::atomic<std::size_t> g_entry_cap{100'000'000};  // 10^8 entries

}  // namespace

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNonStochasticRow: return "NonStochasticRow";
    case ErrorCode::kNegativeEntry: return "NegativeEntry";
    case ErrorCode::kDuplicateLabel: return "DuplicateLabel";
    case ErrorCode::kBadLabel: return "BadLabel";
    case ErrorCode::kEmptyLabelSet: return "EmptyLabelSet";
    case ErrorCode::kBadDimensions: return "BadDimensions";
    case ErrorCode::kLabelMismatch: return "LabelMismatch";
    case ErrorCode::kBadProbability: return "BadProbability";
    case ErrorCode::kZeroPriorVulnerability: return "ZeroPriorVulnerability";
    case ErrorCode::kZeroEntry: return "ZeroEntry";
    case ErrorCode::kMatrixTooLarge: return "MatrixTooLarge";
    case ErrorCode::kNotDeterministic: return "NotDeterministic";
    case ErrorCode::kTopicNotInTaxonomy: return "TopicNotInTaxonomy";
    case ErrorCode::kIncompleteAssignment: return "IncompleteAssignment";
    case ErrorCode::kParamMismatch: return "ParamMismatch";
    case ErrorCode::kBadWorld: return "BadWorld";
    case ErrorCode::kMissingMPrime: return "MissingMPrime";
    case ErrorCode::kZeroR: return "ZeroR";
    case ErrorCode::kBadParams: return "BadParams";
    case ErrorCode::kOverflow: return "Overflow";
    case ErrorCode::kUnparseable: return "Unparseable";
    case ErrorCode::kMalformedCsv: return "MalformedCsv";
    case ErrorCode::kEmptyClassification: return "EmptyClassification";
    case ErrorCode::kInsufficientTopics: return "InsufficientTopics";
    case ErrorCode::kEmptyTopSet: return "EmptyTopSet";
    case ErrorCode::kMemoryCap: return "MemoryCap";
    case ErrorCode::kIoError: return "IoError";
  }
  return "UnknownError";
}

std::size_t EntryCap() { return g_entry_cap.load(); }

void SetEntryCap(std::size_t cap) { g_entry_cap.store(cap); }

void ValidateLabels(const std::vector<Label>& labels, const char* axis) {
  if (labels.empty()) {
    throw Error(ErrorCode::kEmptyLabelSet,
                std::string(axis) + " label sequence is empty");
  }
  std::unordered_set<std::string_view> seen;
  seen.reserve(labels.size());
  for (const Label& label : labels) {
    if (label.empty()) {
      throw Error(ErrorCode::kBadLabel,
                  std::string(axis) + " contains an empty label");
    }
    if (!seen.insert(label).second) {
      throw Error(ErrorCode::kDuplicateLabel,
                  std::string(axis) + " label '" + label + "' repeats");
    }
  }
}

Label PairLabel(const Label& a, const Label& b) {
  return "(" + a + "," + b + ")";
}

Prior::Prior(std::vector<Label> labels, std::vector<double> probs)
    : labels_(std::move(labels)), probs_(std::move(probs)) {
  ValidateLabels(labels_, "prior");
  if (probs_.size() != labels_.size()) {
    throw Error(ErrorCode::kBadDimensions,
                "prior has " + std::to_string(labels_.size()) + " labels but " +
                    std::to_string(probs_.size()) + " probabilities");
  }
  double sum = 0.0;
  for (double p : probs_) {
    if (!(p >= 0.0)) {
      throw Error(ErrorCode::kNegativeEntry, "prior probability is negative");
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > kProbabilityTolerance) {
    std::ostringstream os;
    os << "prior mass sums to " << sum;
    throw Error(ErrorCode::kBadProbability, os.str());
  }
  for (double& p : probs_) p /= sum;
}

Prior Prior::Uniform(std::vector<Label> labels) {
  ValidateLabels(labels, "prior");
  const double p = 1.0 / static_cast<double>(labels.size());
  std::vector<double> probs(labels.size(), p);
  return Prior(std::move(labels), std::move(probs));
}

Prior Prior::Point(std::vector<Label> labels, std::size_t index) {
  ValidateLabels(labels, "prior");
  if (index >= labels.size()) {
    throw Error(ErrorCode::kBadDimensions, "point prior index out of range");
  }
  std::vector<double> probs(labels.size(), 0.0);
  probs[index] = 1.0;
  return Prior(std::move(labels), std::move(probs));
}

Channel::Channel(std::vector<Label> row_labels, std::vector<Label> col_labels,
                 std::vector<double> row_major_entries)
    : row_labels_(std::move(row_labels)),
      col_labels_(std::move(col_labels)),
      entries_(std::move(row_major_entries)) {
  ValidateLabels(row_labels_, "row");
  ValidateLabels(col_labels_, "column");
  const std::size_t rows = row_labels_.size();
  const std::size_t cols = col_labels_.size();
  if (rows > EntryCap() / cols) {
    throw Error(ErrorCode::kMatrixTooLarge,
                std::to_string(rows) + "x" + std::to_string(cols) +
                    " exceeds the entry cap of " + std::to_string(EntryCap()));
  }
  if (entries_.size() != rows * cols) {
    throw Error(ErrorCode::kBadDimensions,
                "entry count does not match " + std::to_string(rows) + "x" +
                    std::to_string(cols));
  }
  for (std::size_t i = 0; i < rows; ++i) {
    double sum = 0.0;
    for (std::size_t j = 0; j < cols; ++j) {
      const double v = entries_[i * cols + j];
      if (!(v >= 0.0)) {
        throw Error(ErrorCode::kNegativeEntry,
                    "entry (" + row_labels_[i] + "," + col_labels_[j] +
                        ") is negative");
      }
      sum += v;
    }
    if (std::abs(sum - 1.0) > kProbabilityTolerance) {
      std::ostringstream os;
      os << "row '" << row_labels_[i] << "' sums to " << sum;
      throw Error(ErrorCode::kNonStochasticRow, os.str());
    }
    // Within tolerance of stochastic: remove the residual drift.
    for (std::size_t j = 0; j < cols; ++j) entries_[i * cols + j] /= sum;
  }
}

Channel::Channel(std::vector<Label> row_labels, std::vector<Label> col_labels,
                 const std::vector<std::vector<double>>& entries)
    : Channel(std::move(row_labels), std::move(col_labels), [&entries] {
        std::vector<double> flat;
        std::size_t cols = entries.empty() ? 0 : entries.front().size();
        flat.reserve(entries.size() * cols);
        for (const auto& row : entries) {
          if (row.size() != cols) {
            throw Error(ErrorCode::kBadDimensions, "ragged entry rows");
          }
          flat.insert(flat.end(), row.begin(), row.end());
        }
        return flat;
      }()) {}

GainMatrix::GainMatrix(std::vector<Label> action_labels,
                       std::vector<Label> secret_labels,
                       std::vector<double> row_major_gains)
    : action_labels_(std::move(action_labels)),
      secret_labels_(std::move(secret_labels)),
      gains_(std::move(row_major_gains)) {
  ValidateLabels(action_labels_, "action");
  ValidateLabels(secret_labels_, "secret");
  if (gains_.size() != action_labels_.size() * secret_labels_.size()) {
    throw Error(ErrorCode::kBadDimensions, "gain table shape mismatch");
  }
  for (double g : gains_) {
    if (!(g >= 0.0)) {
      throw Error(ErrorCode::kNegativeEntry, "gain is negative");
    }
  }
}

JointMatrix::JointMatrix(const Prior& prior, const Channel& channel)
    : row_labels_(channel.row_labels()), col_labels_(channel.col_labels()) {
  if (prior.labels() != channel.row_labels()) {
    throw Error(ErrorCode::kLabelMismatch,
                "prior labels do not match channel rows");
  }
  entries_.resize(channel.num_rows() * channel.num_cols());
  for (std::size_t i = 0; i < channel.num_rows(); ++i) {
    for (std::size_t j = 0; j < channel.num_cols(); ++j) {
      entries_[i * channel.num_cols() + j] = prior.prob(i) * channel.at(i, j);
    }
  }
}

}  // namespace qif
