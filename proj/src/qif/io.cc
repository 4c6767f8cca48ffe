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

#include "qif/io.h"

#include <charconv>
#include <cstddef>
#include <functional>
#include <sstream>
#include <vector>

namespace qif {

namespace {

nlohmann::json MatrixDoc(const std::vector<Label>& rows,
                         const std::vector<Label>& cols,
                         const std::function<double(std::size_t, std::size_t)>&
                             at) {
  nlohmann::json doc;
  doc["rows"] = rows;
  doc["cols"] = cols;
  nlohmann::json entries = nlohmann::json::array();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < cols.size(); ++j) row.push_back(at(i, j));
    entries.push_back(std::move(row));
  }
  doc["entries"] = std::move(entries);
  return doc;
}

struct ParsedDoc {
  std::vector<Label> rows;
  std::vector<Label> cols;
  std::vector<double> entries;  // row-major
};

ParsedDoc ParseMatrixDoc(const nlohmann::json& doc) {
  if (!doc.contains("rows") || !doc.contains("cols") ||
      !doc.contains("entries")) {
    throw Error(ErrorCode::kUnparseable,
                "document is missing rows/cols/entries");
  }
  ParsedDoc out;
  out.rows = doc.at("rows").get<std::vector<Label>>();
  out.cols = doc.at("cols").get<std::vector<Label>>();
  const auto& entries = doc.at("entries");
  if (!entries.is_array() || entries.size() != out.rows.size()) {
    throw Error(ErrorCode::kBadDimensions, "entries do not match row count");
  }
  out.entries.reserve(out.rows.size() * out.cols.size());
  for (const auto& row : entries) {
    if (!row.is_array() || row.size() != out.cols.size()) {
      throw Error(ErrorCode::kBadDimensions,
                  "entry row does not match column count");
    }
    for (const auto& v : row) out.entries.push_back(v.get<double>());
  }
  return out;
}

std::string FormatDouble(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, end);
}

std::string MatrixCsv(const std::vector<Label>& rows,
                      const std::vector<Label>& cols,
                      const std::function<double(std::size_t, std::size_t)>&
                          at) {
  std::ostringstream os;
  for (const Label& c : cols) os << ',' << CsvField(c);
  os << '\n';
  for (std::size_t i = 0; i < rows.size(); ++i) {
    os << CsvField(rows[i]);
    for (std::size_t j = 0; j < cols.size(); ++j) {
      os << ',' << FormatDouble(at(i, j));
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace

std::string CsvField(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) return value;
  std::string quoted = "\"";
  for (char c : value) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

nlohmann::json ToJson(const Channel& channel) {
  return MatrixDoc(channel.row_labels(), channel.col_labels(),
                   [&](std::size_t i, std::size_t j) { return channel.at(i, j); });
}

nlohmann::json ToJson(const Prior& prior) {
  return MatrixDoc({"pi"}, prior.labels(),
                   [&](std::size_t, std::size_t j) { return prior.prob(j); });
}

nlohmann::json ToJson(const GainMatrix& gain) {
  return MatrixDoc(gain.action_labels(), gain.secret_labels(),
                   [&](std::size_t i, std::size_t j) { return gain.at(i, j); });
}

Channel ChannelFromJson(const nlohmann::json& doc) {
  ParsedDoc parsed = ParseMatrixDoc(doc);
  return Channel(std::move(parsed.rows), std::move(parsed.cols),
                 std::move(parsed.entries));
}

Prior PriorFromJson(const nlohmann::json& doc) {
  ParsedDoc parsed = ParseMatrixDoc(doc);
  if (parsed.rows.size() != 1) {
    throw Error(ErrorCode::kBadDimensions, "prior document must have one row");
  }
  return Prior(std::move(parsed.cols), std::move(parsed.entries));
}

GainMatrix GainMatrixFromJson(const nlohmann::json& doc) {
  ParsedDoc parsed = ParseMatrixDoc(doc);
  return GainMatrix(std::move(parsed.rows), std::move(parsed.cols),
                    std::move(parsed.entries));
}

std::string ToCsv(const Channel& channel) {
  return MatrixCsv(channel.row_labels(), channel.col_labels(),
                   [&](std::size_t i, std::size_t j) { return channel.at(i, j); });
}

std::string ToCsv(const Prior& prior) {
  return MatrixCsv({"pi"}, prior.labels(),
                   [&](std::size_t, std::size_t j) { return prior.prob(j); });
}

std::string ToCsv(const GainMatrix& gain) {
  return MatrixCsv(gain.action_labels(), gain.secret_labels(),
                   [&](std::size_t i, std::size_t j) { return gain.at(i, j); });
}

}  // namespace qif
