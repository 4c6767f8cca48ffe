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

// Seeded generators for property tests. Everything routes through sim::Rng
// so failures reproduce from the seed alone.

#ifndef TOPICSQIF_TESTS_TESTING_RANDOM_INSTANCES_H_
#define TOPICSQIF_TESTS_TESTING_RANDOM_INSTANCES_H_

#include <set>
#include <string>
#include <vector>

#include "qif/types.h"
#include "sim/rng.h"
#include "topics/params.h"

namespace testing_support {

inline std::vector<qif::Label> MakeLabels(const std::string& stem,
                                          std::size_t n) {
  std::vector<qif::Label> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(stem + std::to_string(i));
  }
  return labels;
}

// Row-stochastic channel with rows drawn from a flat Dirichlet-ish scheme.
// `floor` > 0 keeps every entry strictly positive.
inline qif::Channel RandomChannel(sim::Rng* rng, std::size_t rows,
                                  std::size_t cols, const std::string& row_stem,
                                  const std::string& col_stem,
                                  double floor = 0.0) {
  std::vector<double> entries(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    double sum = 0.0;
    for (std::size_t j = 0; j < cols; ++j) {
      const double w = floor + rng->NextDouble();
      entries[i * cols + j] = w;
      sum += w;
    }
    for (std::size_t j = 0; j < cols; ++j) entries[i * cols + j] /= sum;
  }
  return qif::Channel(MakeLabels(row_stem, rows), MakeLabels(col_stem, cols),
                      std::move(entries));
}

inline qif::Prior RandomPrior(sim::Rng* rng, std::size_t n,
                              const std::string& stem = "x") {
  std::vector<double> probs(n);
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    probs[i] = rng->NextDouble() + 1e-3;
    sum += probs[i];
  }
  for (double& p : probs) p /= sum;
  return qif::Prior(MakeLabels(stem, n), std::move(probs));
}

// Non-negative gains in [0, 2) with a sprinkle of exact zeros.
inline qif::GainMatrix RandomGain(sim::Rng* rng, std::size_t actions,
                                  std::size_t secrets,
                                  const std::string& secret_stem = "x") {
  std::vector<double> gains(actions * secrets);
  for (double& g : gains) {
    g = rng->NextBernoulli(0.2) ? 0.0 : 2.0 * rng->NextDouble();
  }
  return qif::GainMatrix(MakeLabels("w", actions), MakeLabels(secret_stem, secrets),
                         std::move(gains));
}

// A family of `count` distinct top-sets of size s over m topics.
struct TopSetFamily {
  std::vector<topics::TopicSet> sets;
  std::vector<qif::Label> taxonomy;
};

inline TopSetFamily RandomTopSetFamily(sim::Rng* rng, int m, int s,
                                       int count) {
  TopSetFamily family;
  family.taxonomy = MakeLabels("t", m);
  std::set<std::vector<int>> seen;
  while (static_cast<int>(family.sets.size()) < count) {
    std::set<int> chosen;
    while (static_cast<int>(chosen.size()) < s) {
      chosen.insert(static_cast<int>(rng->NextBelow(m)));
    }
    std::vector<int> key(chosen.begin(), chosen.end());
    if (!seen.insert(key).second) continue;
    topics::TopicSet set;
    for (int t : key) set.push_back(family.taxonomy[t]);
    family.sets.push_back(topics::CanonicalTopicSet(set));
  }
  return family;
}

}  // namespace testing_support

#endif  // TOPICSQIF_TESTS_TESTING_RANDOM_INSTANCES_H_
