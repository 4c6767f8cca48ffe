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

#include "qif/compose.h"

#include <cstddef>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace qif {

namespace {

void CheckCompatibleRows(const Channel& a, const Channel& b) {
  if (a.row_labels() != b.row_labels()) {
    throw Error(ErrorCode::kLabelMismatch,
                "channels do not share the same input labels");
  }
}

void CheckProbability(double r) {
  if (!(r >= 0.0 && r <= 1.0)) {
    throw Error(ErrorCode::kBadProbability,
                "choice probability " + std::to_string(r) +
                    " outside [0,1]");
  }
}

void CheckProductSize(std::size_t rows, std::size_t cols) {
  if (cols != 0 && rows > EntryCap() / cols) {
    throw Error(ErrorCode::kMatrixTooLarge,
                "composition would produce " + std::to_string(rows) + "x" +
                    std::to_string(cols) + " entries, above the cap of " +
                    std::to_string(EntryCap()));
  }
}

}  // namespace

Channel Cascade(const Channel& first, const Channel& second) {
  if (first.col_labels() != second.row_labels()) {
    throw Error(ErrorCode::kLabelMismatch,
                "first channel's outputs do not match second channel's inputs");
  }
  const std::size_t rows = first.num_rows();
  const std::size_t mid = first.num_cols();
  const std::size_t cols = second.num_cols();
  CheckProductSize(rows, cols);
  std::vector<double> entries(rows * cols, 0.0);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t k = 0; k < mid; ++k) {
      const double f = first.at(i, k);
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < cols; ++j) {
        entries[i * cols + j] += f * second.at(k, j);
      }
    }
  }
  return Channel(first.row_labels(), second.col_labels(), std::move(entries));
}

Channel InternalChoice(const Channel& a, const Channel& b, double r) {
  CheckCompatibleRows(a, b);
  CheckProbability(r);

  std::unordered_map<std::string_view, std::size_t> b_col_index;
  b_col_index.reserve(b.num_cols());
  for (std::size_t j = 0; j < b.num_cols(); ++j) {
    b_col_index.emplace(b.col_labels()[j], j);
  }

  // a's columns in order, then the columns only b has, in b's order.
  std::vector<Label> cols = a.col_labels();
  std::vector<std::size_t> b_only;
  {
    std::unordered_map<std::string_view, std::size_t> a_col_index;
    a_col_index.reserve(a.num_cols());
    for (std::size_t j = 0; j < a.num_cols(); ++j) {
      a_col_index.emplace(a.col_labels()[j], j);
    }
    for (std::size_t j = 0; j < b.num_cols(); ++j) {
      if (!a_col_index.contains(b.col_labels()[j])) {
        b_only.push_back(j);
        cols.push_back(b.col_labels()[j]);
      }
    }
  }

  const std::size_t rows = a.num_rows();
  const std::size_t n_cols = cols.size();
  CheckProductSize(rows, n_cols);
  std::vector<double> entries(rows * n_cols, 0.0);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < a.num_cols(); ++j) {
      auto it = b_col_index.find(a.col_labels()[j]);
      double v = (1.0 - r) * a.at(i, j);
      if (it != b_col_index.end()) v += r * b.at(i, it->second);
      entries[i * n_cols + j] = v;
    }
    for (std::size_t k = 0; k < b_only.size(); ++k) {
      entries[i * n_cols + a.num_cols() + k] = r * b.at(i, b_only[k]);
    }
  }
  return Channel(a.row_labels(), std::move(cols), std::move(entries));
}

Channel ExternalChoice(const Channel& a, const Channel& b, double r) {
  CheckCompatibleRows(a, b);
  CheckProbability(r);
  std::vector<Label> cols;
  cols.reserve(a.num_cols() + b.num_cols());
  for (const Label& y : a.col_labels()) cols.push_back("1:" + y);
  for (const Label& y : b.col_labels()) cols.push_back("2:" + y);

  const std::size_t rows = a.num_rows();
  const std::size_t n_cols = cols.size();
  CheckProductSize(rows, n_cols);
  std::vector<double> entries(rows * n_cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < a.num_cols(); ++j) {
      entries[i * n_cols + j] = (1.0 - r) * a.at(i, j);
    }
    for (std::size_t j = 0; j < b.num_cols(); ++j) {
      entries[i * n_cols + a.num_cols() + j] = r * b.at(i, j);
    }
  }
  return Channel(a.row_labels(), std::move(cols), std::move(entries));
}

Channel Parallel(const Channel& a, const Channel& b) {
  CheckCompatibleRows(a, b);
  const std::size_t rows = a.num_rows();
  if (a.num_cols() != 0 && b.num_cols() > EntryCap() / a.num_cols()) {
    throw Error(ErrorCode::kMatrixTooLarge, "parallel output space too large");
  }
  const std::size_t n_cols = a.num_cols() * b.num_cols();
  CheckProductSize(rows, n_cols);

  std::vector<Label> cols;
  cols.reserve(n_cols);
  for (const Label& y1 : a.col_labels()) {
    for (const Label& y2 : b.col_labels()) {
      cols.push_back(PairLabel(y1, y2));
    }
  }
  std::vector<double> entries(rows * n_cols);
  for (std::size_t x = 0; x < rows; ++x) {
    std::size_t j = 0;
    for (std::size_t y1 = 0; y1 < a.num_cols(); ++y1) {
      for (std::size_t y2 = 0; y2 < b.num_cols(); ++y2, ++j) {
        entries[x * n_cols + j] = a.at(x, y1) * b.at(x, y2);
      }
    }
  }
  return Channel(a.row_labels(), std::move(cols), std::move(entries));
}

Channel Kronecker(const Channel& a, const Channel& b) {
  if (a.num_cols() != 0 && b.num_cols() > EntryCap() / a.num_cols()) {
    throw Error(ErrorCode::kMatrixTooLarge, "kronecker output space too large");
  }
  const std::size_t rows = a.num_rows() * b.num_rows();
  const std::size_t cols = a.num_cols() * b.num_cols();
  CheckProductSize(rows, cols);

  std::vector<Label> row_labels;
  row_labels.reserve(rows);
  for (const Label& x1 : a.row_labels()) {
    for (const Label& x2 : b.row_labels()) {
      row_labels.push_back(PairLabel(x1, x2));
    }
  }
  std::vector<Label> col_labels;
  col_labels.reserve(cols);
  for (const Label& y1 : a.col_labels()) {
    for (const Label& y2 : b.col_labels()) {
      col_labels.push_back(PairLabel(y1, y2));
    }
  }
  std::vector<double> entries(rows * cols);
  std::size_t i = 0;
  for (std::size_t x1 = 0; x1 < a.num_rows(); ++x1) {
    for (std::size_t x2 = 0; x2 < b.num_rows(); ++x2, ++i) {
      std::size_t j = 0;
      for (std::size_t y1 = 0; y1 < a.num_cols(); ++y1) {
        const double left = a.at(x1, y1);
        for (std::size_t y2 = 0; y2 < b.num_cols(); ++y2, ++j) {
          entries[i * cols + j] = left * b.at(x2, y2);
        }
      }
    }
  }
  return Channel(std::move(row_labels), std::move(col_labels),
                 std::move(entries));
}

}  // namespace qif
