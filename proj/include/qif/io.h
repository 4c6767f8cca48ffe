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

#ifndef TOPICSQIF_QIF_IO_H_
#define TOPICSQIF_QIF_IO_H_

#include <string>

#include "json.hpp"
#include "qif/types.h"

namespace qif {

// All three value types share the {"rows":[...], "cols":[...],
// "entries":[[...]]} document shape. A Prior serializes as a single "pi" row.
// Doubles round-trip exactly (shortest-representation printing).
nlohmann::json ToJson(const Channel& channel);
nlohmann::json ToJson(const Prior& prior);
nlohmann::json ToJson(const GainMatrix& gain);

Channel ChannelFromJson(const nlohmann::json& doc);
Prior PriorFromJson(const nlohmann::json& doc);
GainMatrix GainMatrixFromJson(const nlohmann::json& doc);

// CSV export: header row of column labels, first column of row labels.
std::string ToCsv(const Channel& channel);
std::string ToCsv(const Prior& prior);
std::string ToCsv(const GainMatrix& gain);

// Field quoting for values that may contain commas (e.g. pair labels).
std::string CsvField(const std::string& value);

}  // namespace qif

#endif  // TOPICSQIF_QIF_IO_H_
