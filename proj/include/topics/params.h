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

#ifndef TOPICSQIF_TOPICS_PARAMS_H_
#define TOPICSQIF_TOPICS_PARAMS_H_

#include <optional>
#include <vector>

#include "qif/types.h"

namespace topics {

// A user's top-s interest set, kept sorted and duplicate-free so equal sets
// compare equal and serialize to a canonical label.
using TopicSet = std::vector<qif::Label>;

// Canonical "{a,b,...}" label for a top-set. The input is sorted first.
qif::Label TopicSetLabel(const TopicSet& set);

// Sorts and checks for duplicates.
TopicSet CanonicalTopicSet(TopicSet set);

// The Topics API parameter triple plus the observed number of occurring
// topics m' (when known).
struct TopicsParams {
  int m = 0;         // taxonomy size |T|
  int s = 0;         // top-set size
  double r = 0.0;    // probability of reporting a random taxonomy topic
  std::optional<int> m_prime;  // number of topics that occur, <= m

  static TopicsParams Create(int m, int s, double r,
                             std::optional<int> m_prime = std::nullopt);
};

// Randomized-response parameters for the membership channel:
// p = (1-r)/s + r/m (truthful in-set report), q = r/m, A = p/q.
struct CountingParams {
  double p = 0.0;
  double q = 0.0;
  double A = 0.0;
};

// The third-party-cookies world: N users, c contexts carrying third-party
// calls, and each user's browsing-history size (2 <= h <= c).
struct CookieWorld {
  long n_users = 0;
  int n_contexts = 0;
  std::vector<int> history_sizes;

  static CookieWorld Create(long n_users, int n_contexts,
                            std::vector<int> history_sizes);
};

// Mapping from browsing histories to top-s sets over a fixed taxonomy.
// Histories are ordered; top_sets[i] belongs to histories[i].
struct TopicAssignment {
  std::vector<qif::Label> histories;
  std::vector<TopicSet> top_sets;
  std::vector<qif::Label> taxonomy;

  void Validate() const;
};

}  // namespace topics

#endif  // TOPICSQIF_TOPICS_PARAMS_H_
