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

#include "pipeline/ingest.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace pipeline {

using qif::Error;
using qif::ErrorCode;

namespace {

std::string TrimField(const std::string& s) {
  std::size_t begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  std::size_t end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

bool IsLeapYear(int y) {
  return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0;
}

// Days since 1970-01-01 for a civil date.
std::int64_t DaysFromCivil(int y, int m, int d) {
  y -= m <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

}  // namespace

bool ParseIso8601(const std::string& text, std::int64_t* seconds) {
  // YYYY-MM-DD[T ]HH:MM[:SS]
  if (text.size() < 16) return false;
  auto digits = [&](std::size_t pos, std::size_t len, int* out) {
    int v = 0;
    for (std::size_t i = pos; i < pos + len; ++i) {
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        return false;
      v = v * 10 + (text[i] - '0');
    }
    *out = v;
    return true;
  };
  int y, mo, d, h, mi, se = 0;
  if (!digits(0, 4, &y) || text[4] != '-' || !digits(5, 2, &mo) ||
      text[7] != '-' || !digits(8, 2, &d)) {
    return false;
  }
  if (text[10] != 'T' && text[10] != ' ') return false;
  if (!digits(11, 2, &h) || text[13] != ':' || !digits(14, 2, &mi)) {
    return false;
  }
  if (text.size() >= 19) {
    if (text[16] != ':' || !digits(17, 2, &se)) return false;
  } else if (text.size() != 16) {
    return false;
  }
  if (mo < 1 || mo > 12 || d < 1 || h > 23 || mi > 59 || se > 60) return false;
  static const int kDays[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  int dmax = kDays[mo - 1] + (mo == 2 && IsLeapYear(y) ? 1 : 0);
  if (d > dmax) return false;
  *seconds = DaysFromCivil(y, mo, d) * 86400 + h * 3600 + mi * 60 + se;
  return true;
}

std::vector<std::string> SplitCsvLine(const std::string& line) {
  std::vector<std::string> fields;
  std::string current;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          current += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        current += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(current);
      current.clear();
    } else if (c != '\r') {
      current += c;
    }
  }
  fields.push_back(current);
  return fields;
}

IngestResult IngestHistory(std::istream& csv, const SuffixList& suffixes) {
  std::string line;
  if (!std::getline(csv, line)) {
    throw Error(ErrorCode::kMalformedCsv, "empty history file");
  }
  {
    std::vector<std::string> header = SplitCsvLine(line);
    if (header.size() != 3 || TrimField(header[0]) != "user_id" ||
        TrimField(header[1]) != "timestamp" ||
        TrimField(header[2]) != "url_or_domain") {
      throw Error(ErrorCode::kMalformedCsv,
                  "expected header user_id,timestamp,url_or_domain");
    }
  }

  IngestResult result;
  while (std::getline(csv, line)) {
    if (TrimField(line).empty()) continue;
    std::vector<std::string> fields = SplitCsvLine(line);
    if (fields.size() != 3) {
      result.rejects.Add("malformed_row");
      continue;
    }
    VisitRecord record;
    record.user_id = TrimField(fields[0]);
    record.timestamp = TrimField(fields[1]);
    const std::string url = TrimField(fields[2]);
    if (record.user_id.empty()) {
      result.rejects.Add("no_user");
      continue;
    }
    if (url.empty()) {
      result.rejects.Add("no_url");
      continue;
    }
    if (!ParseIso8601(record.timestamp, &record.time_seconds)) {
      result.rejects.Add("bad_timestamp");
      continue;
    }
    try {
      record.domain = NormalizeDomain(url, suffixes);
    } catch (const Error&) {
      result.rejects.Add("unparseable");
      continue;
    }
    result.records.push_back(std::move(record));
  }
  return result;
}

IngestResult IngestHistoryFile(const std::string& path,
                               const SuffixList& suffixes) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kIoError, "cannot open history file: " + path);
  }
  return IngestHistory(in, suffixes);
}

Classification Classification::LoadCsv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    throw Error(ErrorCode::kEmptyClassification, "empty classification file");
  }
  {
    std::vector<std::string> header = SplitCsvLine(line);
    if (header.size() != 2 || TrimField(header[0]) != "domain" ||
        TrimField(header[1]) != "topics") {
      throw Error(ErrorCode::kMalformedCsv, "expected header domain,topics");
    }
  }
  Classification classification;
  std::set<qif::Label> topics;
  while (std::getline(in, line)) {
    if (TrimField(line).empty()) continue;
    std::vector<std::string> fields = SplitCsvLine(line);
    if (fields.size() != 2) continue;
    std::string domain = TrimField(fields[0]);
    std::transform(domain.begin(), domain.end(), domain.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    std::vector<qif::Label> domain_topics;
    std::stringstream ss(fields[1]);
    std::string topic;
    while (std::getline(ss, topic, ';')) {
      topic = TrimField(topic);
      if (!topic.empty()) domain_topics.push_back(topic);
    }
    if (domain.empty() || domain_topics.empty()) continue;
    std::sort(domain_topics.begin(), domain_topics.end());
    domain_topics.erase(
        std::unique(domain_topics.begin(), domain_topics.end()),
        domain_topics.end());
    topics.insert(domain_topics.begin(), domain_topics.end());
    classification.by_domain[domain] = std::move(domain_topics);
  }
  if (classification.by_domain.empty()) {
    throw Error(ErrorCode::kEmptyClassification,
                "classification has no usable rows");
  }
  classification.taxonomy.assign(topics.begin(), topics.end());
  return classification;
}

Classification Classification::LoadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kIoError, "cannot open classification: " + path);
  }
  return LoadCsv(in);
}

JoinResult JoinClassification(const std::vector<VisitRecord>& records,
                              const Classification& classification) {
  if (classification.by_domain.empty()) {
    throw Error(ErrorCode::kEmptyClassification, "empty classification");
  }
  JoinResult result;
  for (const VisitRecord& record : records) {
    auto it = classification.by_domain.find(record.domain);
    if (it != classification.by_domain.end()) {
      result.annotated.push_back({record, it->second, false});
      ++result.full_matches;
      continue;
    }
    // Longest classified ancestor: strip leading labels one at a time.
    std::string candidate = record.domain;
    bool matched = false;
    for (std::size_t dot = candidate.find('.'); dot != std::string::npos;
         dot = candidate.find('.')) {
      candidate = candidate.substr(dot + 1);
      auto ancestor = classification.by_domain.find(candidate);
      if (ancestor != classification.by_domain.end()) {
        result.annotated.push_back({record, ancestor->second, true});
        ++result.partial_matches;
        matched = true;
        break;
      }
    }
    if (!matched) ++result.unmatched;
  }
  return result;
}

}  // namespace pipeline
