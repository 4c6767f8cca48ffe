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

#ifndef TOPICSQIF_PIPELINE_INGEST_H_
#define TOPICSQIF_PIPELINE_INGEST_H_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "pipeline/suffix_list.h"
#include "qif/types.h"

namespace pipeline {

// One browsing-history entry after domain normalization.
struct VisitRecord {
  qif::Label user_id;
  std::string timestamp;     // original ISO-8601 text
  std::int64_t time_seconds; // parsed, for epoch partitioning
  std::string domain;        // registrable domain
};

struct RejectLog {
  std::map<std::string, long> by_reason;
  long total = 0;

  void Add(const std::string& reason) {
    ++by_reason[reason];
    ++total;
  }
};

struct IngestResult {
  std::vector<VisitRecord> records;
  RejectLog rejects;
};

// Reads `user_id,timestamp,url_or_domain` CSV. Bad rows are counted by
// reason and skipped; a missing or wrong header is fatal (MalformedCsv).
IngestResult IngestHistory(std::istream& csv, const SuffixList& suffixes);
IngestResult IngestHistoryFile(const std::string& path,
                               const SuffixList& suffixes);

// Domain -> topic set classification plus the taxonomy it induces
// (sorted distinct topics).
struct Classification {
  std::unordered_map<std::string, std::vector<qif::Label>> by_domain;
  std::vector<qif::Label> taxonomy;

  // Reads `domain,topics` CSV with ';'-separated topic labels.
  static Classification LoadCsv(std::istream& in);
  static Classification LoadFile(const std::string& path);
};

struct AnnotatedVisit {
  VisitRecord visit;
  std::vector<qif::Label> topics;
  bool partial_match = false;  // matched a classification ancestor domain
};

struct JoinResult {
  std::vector<AnnotatedVisit> annotated;
  long full_matches = 0;
  long partial_matches = 0;
  long unmatched = 0;
};

// Annotates each record with its domain's topics. Exact matches win;
// otherwise the longest classified ancestor domain matches partially;
// unclassified records are dropped and counted.
JoinResult JoinClassification(const std::vector<VisitRecord>& records,
                              const Classification& classification);

// Minimal CSV line splitting with double-quote escaping.
std::vector<std::string> SplitCsvLine(const std::string& line);

// Parses "YYYY-MM-DD[T ]HH:MM[:SS]" to seconds since 1970-01-01, no
// timezone handling. Returns false when the text does not parse.
bool ParseIso8601(const std::string& text, std::int64_t* seconds);

}  // namespace pipeline

#endif  // TOPICSQIF_PIPELINE_INGEST_H_
