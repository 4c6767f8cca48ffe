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

#include "topics/params.h"

#include <algorithm>
#include <string>
#include <unordered_set>
#include <utility>

namespace topics {

using qif::Error;
using qif::ErrorCode;

qif::Label TopicSetLabel(const TopicSet& set) {
  TopicSet sorted = set;
  std::sort(sorted.begin(), sorted.end());
  qif::Label label = "{";
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i > 0) label += ',';
    label += sorted[i];
  }
  label += '}';
  return label;
}

TopicSet CanonicalTopicSet(TopicSet set) {
  std::sort(set.begin(), set.end());
  if (std::adjacent_find(set.begin(), set.end()) != set.end()) {
    throw Error(ErrorCode::kDuplicateLabel, "top-set contains a repeated topic");
  }
  return set;
}

TopicsParams TopicsParams::Create(int m, int s, double r,
                                  std::optional<int> m_prime) {
  if (m < 1 || s < 1) {
    throw Error(ErrorCode::kBadParams, "m and s must be positive");
  }
  if (s > m) {
    throw Error(ErrorCode::kBadParams,
                "top-set size s=" + std::to_string(s) +
                    " exceeds taxonomy size m=" + std::to_string(m));
  }
  if (!(r >= 0.0 && r < 1.0)) {
    throw Error(ErrorCode::kBadProbability,
                "r=" + std::to_string(r) + " outside [0,1)");
  }
  if (m_prime.has_value() && (*m_prime < 1 || *m_prime > m)) {
    throw Error(ErrorCode::kBadParams, "m' must lie in [1, m]");
  }
  return TopicsParams{m, s, r, m_prime};
}

CookieWorld CookieWorld::Create(long n_users, int n_contexts,
                                std::vector<int> history_sizes) {
  if (n_users < 1) {
    throw Error(ErrorCode::kBadWorld, "need at least one user");
  }
  if (n_contexts < 2) {
    throw Error(ErrorCode::kBadWorld, "need at least two contexts");
  }
  for (int h : history_sizes) {
    if (h < 2 || h > n_contexts) {
      throw Error(ErrorCode::kBadWorld,
                  "history size " + std::to_string(h) + " outside [2, c]");
    }
  }
  return CookieWorld{n_users, n_contexts, std::move(history_sizes)};
}

void TopicAssignment::Validate() const {
  qif::ValidateLabels(histories, "history");
  qif::ValidateLabels(taxonomy, "taxonomy");
  if (top_sets.size() != histories.size()) {
    throw Error(ErrorCode::kIncompleteAssignment,
                "every history needs a top-set");
  }
  std::unordered_set<std::string_view> topics(taxonomy.begin(),
                                              taxonomy.end());
  for (const TopicSet& set : top_sets) {
    if (set.empty()) {
      throw Error(ErrorCode::kEmptyTopSet, "top-set is empty");
    }
    for (const qif::Label& t : set) {
      if (!topics.contains(t)) {
        throw Error(ErrorCode::kTopicNotInTaxonomy,
                    "topic '" + t + "' is not in the taxonomy");
      }
    }
  }
}

}  // namespace topics
