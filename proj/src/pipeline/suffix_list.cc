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

#include "pipeline/suffix_list.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

#include "qif/types.h"

namespace pipeline {

using qif::Error;
using qif::ErrorCode;

namespace {

std::string Lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::string Trim(const std::string& s) {
  std::size_t begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  std::size_t end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

bool ValidLabel(const std::string& label) {
  if (label.empty() || label.size() > 63) return false;
  if (label.front() == '-' || label.back() == '-') return false;
  for (char c : label) {
    if (!(std::islower(static_cast<unsigned char>(c)) ||
          std::isdigit(static_cast<unsigned char>(c)) || c == '-')) {
      return false;
    }
  }
  return true;
}

std::string JoinTail(const std::vector<std::string>& labels,
                     std::size_t from) {
  std::string out;
  for (std::size_t i = from; i < labels.size(); ++i) {
    if (!out.empty()) out += '.';
    out += labels[i];
  }
  return out;
}

bool AllWs(const std::string& label) {
  return !label.empty() &&
         std::all_of(label.begin(), label.end(), [](char c) { return c == 'w'; });
}

}  // namespace

SuffixList SuffixList::Parse(std::istream& in) {
  SuffixList list;
  std::string line;
  while (std::getline(in, line)) {
    std::string rule = Trim(line);
    if (rule.empty() || rule.rfind("//", 0) == 0) continue;
    // The file format terminates rules at the first whitespace.
    rule = Lower(rule.substr(0, rule.find_first_of(" \t")));
    if (rule.rfind("!", 0) == 0) {
      list.exceptions_.insert(rule.substr(1));
    } else if (rule.rfind("*.", 0) == 0) {
      list.wildcard_bases_.insert(rule.substr(2));
    } else {
      list.rules_.insert(rule);
    }
  }
  return list;
}

SuffixList SuffixList::LoadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kIoError, "cannot open suffix list: " + path);
  }
  return Parse(in);
}

int SuffixList::SuffixLength(const std::vector<std::string>& labels) const {
  const std::size_t n = labels.size();
  int best = 1;  // implicit "*" rule
  for (std::size_t len = 1; len <= n; ++len) {
    const std::string tail = JoinTail(labels, n - len);
    if (exceptions_.contains(tail)) {
      // An exception rule wins outright; its public suffix drops one label.
      return static_cast<int>(len) - 1;
    }
    if (rules_.contains(tail)) {
      best = std::max(best, static_cast<int>(len));
    }
    if (len >= 2 && wildcard_bases_.contains(JoinTail(labels, n - len + 1))) {
      best = std::max(best, static_cast<int>(len));
    }
  }
  return best;
}

std::vector<std::string> SplitHostLabels(const std::string& host) {
  if (host.empty()) {
    throw Error(ErrorCode::kUnparseable, "empty host");
  }
  std::vector<std::string> labels;
  std::string current;
  for (char c : host) {
    if (c == '.') {
      labels.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  labels.push_back(current);
  for (const std::string& label : labels) {
    if (!ValidLabel(label)) {
      throw Error(ErrorCode::kUnparseable,
                  "invalid label '" + label + "' in '" + host + "'");
    }
  }
  return labels;
}

std::string NormalizeDomain(const std::string& raw,
                            const SuffixList& suffixes) {
  std::string host = Lower(Trim(raw));
  if (host.empty()) {
    throw Error(ErrorCode::kUnparseable, "empty input");
  }
  // Scheme, then path/query/fragment, then userinfo, then port.
  if (std::size_t pos = host.find("://"); pos != std::string::npos) {
    host = host.substr(pos + 3);
  }
  if (std::size_t pos = host.find_first_of("/?#"); pos != std::string::npos) {
    host = host.substr(0, pos);
  }
  if (std::size_t pos = host.rfind('@'); pos != std::string::npos) {
    host = host.substr(pos + 1);
  }
  if (std::size_t pos = host.find(':'); pos != std::string::npos) {
    host = host.substr(0, pos);
  }
  if (!host.empty() && host.back() == '.') host.pop_back();

  const std::vector<std::string> labels = SplitHostLabels(host);
  const int suffix_len = suffixes.SuffixLength(labels);
  const int n = static_cast<int>(labels.size());

  if (suffix_len >= n) {
    // The input is itself a public suffix.
    if (suffix_len == 1) {
      throw Error(ErrorCode::kUnparseable,
                  "'" + host + "' is a bare top-level suffix");
    }
    return host;
  }

  const std::string& domain_label = labels[n - suffix_len - 1];
  const std::string suffix = JoinTail(labels, n - suffix_len);
  if (AllWs(domain_label)) {
    if (suffix_len == 1) {
      throw Error(ErrorCode::kUnparseable,
                  "'" + host + "' has no domain besides 'w' padding");
    }
    return suffix;
  }
  return domain_label + "." + suffix;
}

}  // namespace pipeline
