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

#ifndef TOPICSQIF_PIPELINE_SUFFIX_LIST_H_
#define TOPICSQIF_PIPELINE_SUFFIX_LIST_H_

#include <iosfwd>
#include <string>
#include <unordered_set>
#include <vector>

namespace pipeline {

// Public-suffix rules in the publicsuffix.org file format: one rule per
// line, `//` comments, `*.` wildcards, `!` exceptions. Unlisted TLDs fall
// back to the implicit `*` rule.
class SuffixList {
 public:
  static SuffixList Parse(std::istream& in);
  static SuffixList LoadFile(const std::string& path);

  // Number of labels of the prevailing public suffix of `labels` (joined
  // domain labels, leftmost first). Never zero.
  int SuffixLength(const std::vector<std::string>& labels) const;

  std::size_t rule_count() const {
    return rules_.size() + wildcard_bases_.size() + exceptions_.size();
  }

 private:
  std::unordered_set<std::string> rules_;
  std::unordered_set<std::string> wildcard_bases_;  // "*.<base>" rules
  std::unordered_set<std::string> exceptions_;      // "!<rule>" rules
};

// Lowercases, strips scheme/path/port/userinfo, validates the hostname
// labels, and reduces to the registrable domain (public suffix plus one
// label). Inputs equal to a multi-label suffix pass through unchanged, and a
// domain part of only 'w's collapses onto a multi-label suffix. Throws
// Unparseable for anything that does not yield a usable domain.
std::string NormalizeDomain(const std::string& raw, const SuffixList& suffixes);

// Splits a validated hostname into labels. Throws Unparseable on invalid
// characters, empty labels, or hyphen placement.
std::vector<std::string> SplitHostLabels(const std::string& host);

}  // namespace pipeline

#endif  // TOPICSQIF_PIPELINE_SUFFIX_LIST_H_
