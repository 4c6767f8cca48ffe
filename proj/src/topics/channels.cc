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

#include "topics/channels.h"

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace topics {

using qif::Channel;
using qif::Error;
using qif::ErrorCode;
using qif::GainMatrix;
using qif::Label;

namespace {

void CheckTopicsInTaxonomy(const std::vector<TopicSet>& top_sets,
                           const std::vector<Label>& taxonomy) {
  std::unordered_set<std::string_view> topics(taxonomy.begin(), taxonomy.end());
  for (const TopicSet& set : top_sets) {
    if (set.empty()) {
      throw Error(ErrorCode::kEmptyTopSet, "top-set is empty");
    }
    for (const Label& t : set) {
      if (!topics.contains(t)) {
        throw Error(ErrorCode::kTopicNotInTaxonomy,
                    "topic '" + t + "' is not in the taxonomy");
      }
    }
  }
}

}  // namespace

std::vector<TopicSet> DistinctTopSets(const std::vector<TopicSet>& top_sets) {
  std::vector<TopicSet> distinct;
  std::unordered_set<std::string> seen;
  for (const TopicSet& set : top_sets) {
    TopicSet canonical = CanonicalTopicSet(set);
    if (seen.insert(TopicSetLabel(canonical)).second) {
      distinct.push_back(std::move(canonical));
    }
  }
  return distinct;
}

Channel IdentityChannel(const std::vector<Label>& labels) {
  qif::ValidateLabels(labels, "identity");
  const std::size_t n = labels.size();
  std::vector<double> entries(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) entries[i * n + i] = 1.0;
  return Channel(labels, labels, std::move(entries));
}

Channel GeneralizationChannel(const TopicAssignment& assignment) {
  assignment.Validate();
  std::vector<Label> cols;
  std::unordered_map<std::string, std::size_t> col_index;
  std::vector<std::size_t> assigned_col(assignment.histories.size());
  for (std::size_t i = 0; i < assignment.top_sets.size(); ++i) {
    const Label label = TopicSetLabel(assignment.top_sets[i]);
    auto [it, inserted] = col_index.emplace(label, cols.size());
    if (inserted) cols.push_back(label);
    assigned_col[i] = it->second;
  }
  std::vector<double> entries(assignment.histories.size() * cols.size(), 0.0);
  for (std::size_t i = 0; i < assignment.histories.size(); ++i) {
    entries[i * cols.size() + assigned_col[i]] = 1.0;
  }
  return Channel(assignment.histories, std::move(cols), std::move(entries));
}

int KAnonymityOf(const Channel& generalization) {
  std::vector<int> ones_per_col(generalization.num_cols(), 0);
  for (std::size_t i = 0; i < generalization.num_rows(); ++i) {
    for (std::size_t j = 0; j < generalization.num_cols(); ++j) {
      const double v = generalization.at(i, j);
      if (v == 1.0) {
        ++ones_per_col[j];
      } else if (v != 0.0) {
        throw Error(ErrorCode::kNotDeterministic,
                    "entry (" + generalization.row_labels()[i] + "," +
                        generalization.col_labels()[j] + ") is neither 0 nor 1");
      }
    }
  }
  return *std::min_element(ones_per_col.begin(), ones_per_col.end());
}

Channel BoundedNoiseChannel(const std::vector<TopicSet>& top_sets,
                            const std::vector<Label>& taxonomy) {
  qif::ValidateLabels(taxonomy, "taxonomy");
  const std::vector<TopicSet> rows = DistinctTopSets(top_sets);
  CheckTopicsInTaxonomy(rows, taxonomy);

  std::unordered_map<std::string_view, std::size_t> topic_index;
  for (std::size_t j = 0; j < taxonomy.size(); ++j) {
    topic_index.emplace(taxonomy[j], j);
  }
  std::vector<Label> row_labels;
  row_labels.reserve(rows.size());
  std::vector<double> entries(rows.size() * taxonomy.size(), 0.0);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    row_labels.push_back(TopicSetLabel(rows[i]));
    const double share = 1.0 / static_cast<double>(rows[i].size());
    for (const Label& t : rows[i]) {
      entries[i * taxonomy.size() + topic_index.at(t)] = share;
    }
  }
  return Channel(std::move(row_labels), taxonomy, std::move(entries));
}

Channel DpChannel(const std::vector<TopicSet>& top_sets,
                  const std::vector<Label>& taxonomy) {
  qif::ValidateLabels(taxonomy, "taxonomy");
  const std::vector<TopicSet> rows = DistinctTopSets(top_sets);
  CheckTopicsInTaxonomy(rows, taxonomy);
  std::vector<Label> row_labels;
  row_labels.reserve(rows.size());
  for (const TopicSet& set : rows) row_labels.push_back(TopicSetLabel(set));
  const double share = 1.0 / static_cast<double>(taxonomy.size());
  std::vector<double> entries(rows.size() * taxonomy.size(), share);
  return Channel(std::move(row_labels), taxonomy, std::move(entries));
}

Channel TopicsReportChannel(const std::vector<TopicSet>& top_sets,
                            const TopicsParams& params,
                            const std::vector<Label>& taxonomy) {
  qif::ValidateLabels(taxonomy, "taxonomy");
  if (static_cast<int>(taxonomy.size()) != params.m) {
    throw Error(ErrorCode::kParamMismatch,
                "taxonomy has " + std::to_string(taxonomy.size()) +
                    " topics but params.m=" + std::to_string(params.m));
  }
  const std::vector<TopicSet> rows = DistinctTopSets(top_sets);
  CheckTopicsInTaxonomy(rows, taxonomy);
  for (const TopicSet& set : rows) {
    if (static_cast<int>(set.size()) != params.s) {
      throw Error(ErrorCode::kParamMismatch,
                  "top-set " + TopicSetLabel(set) + " has size " +
                      std::to_string(set.size()) + ", expected s=" +
                      std::to_string(params.s));
    }
  }

  std::unordered_map<std::string_view, std::size_t> topic_index;
  for (std::size_t j = 0; j < taxonomy.size(); ++j) {
    topic_index.emplace(taxonomy[j], j);
  }
  const double out_of_set = params.r / static_cast<double>(params.m);
  const double in_set = (1.0 - params.r) / static_cast<double>(params.s) +
                        out_of_set;
  std::vector<Label> row_labels;
  row_labels.reserve(rows.size());
  std::vector<double> entries(rows.size() * taxonomy.size(), out_of_set);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    row_labels.push_back(TopicSetLabel(rows[i]));
    for (const Label& t : rows[i]) {
      entries[i * taxonomy.size() + topic_index.at(t)] = in_set;
    }
  }
  return Channel(std::move(row_labels), taxonomy, std::move(entries));
}

int BoundedNoiseParameter(const Channel& bounded_noise) {
  int b = -1;
  for (std::size_t i = 0; i < bounded_noise.num_rows(); ++i) {
    int nonzeros = 0;
    for (std::size_t j = 0; j < bounded_noise.num_cols(); ++j) {
      if (bounded_noise.at(i, j) != 0.0) ++nonzeros;
    }
    if (b == -1) {
      b = nonzeros;
    } else if (b != nonzeros) {
      throw Error(ErrorCode::kNotDeterministic,
                  "rows disagree on the noise support size");
    }
  }
  if (b <= 0) {
    throw Error(ErrorCode::kEmptyTopSet, "channel has an all-zero row");
  }
  return b;
}

GainMatrix IbaGain(const std::vector<TopicSet>& top_sets,
                   const std::vector<Label>& taxonomy) {
  qif::ValidateLabels(taxonomy, "taxonomy");
  const std::vector<TopicSet> secrets = DistinctTopSets(top_sets);
  CheckTopicsInTaxonomy(secrets, taxonomy);
  std::unordered_map<std::string_view, std::size_t> topic_index;
  for (std::size_t j = 0; j < taxonomy.size(); ++j) {
    topic_index.emplace(taxonomy[j], j);
  }
  std::vector<Label> secret_labels;
  secret_labels.reserve(secrets.size());
  std::vector<double> gains(taxonomy.size() * secrets.size(), 0.0);
  for (std::size_t x = 0; x < secrets.size(); ++x) {
    secret_labels.push_back(TopicSetLabel(secrets[x]));
    for (const Label& t : secrets[x]) {
      gains[topic_index.at(t) * secrets.size() + x] = 1.0;
    }
  }
  return GainMatrix(taxonomy, std::move(secret_labels), std::move(gains));
}

std::pair<double, double> IbaPosteriorBounds(const qif::Prior& topset_prior,
                                             const std::vector<TopicSet>& top_sets,
                                             const TopicsParams& params) {
  if (params.r >= 0.5) {
    throw Error(ErrorCode::kBadProbability,
                "bounds require r < 0.5, got r=" + std::to_string(params.r));
  }
  if (top_sets.size() != topset_prior.size()) {
    throw Error(ErrorCode::kLabelMismatch,
                "prior labels do not align with the top-set family");
  }
  // Prior IBA vulnerability: the best single topic is the one covering the
  // most prior mass across top-sets.
  std::map<Label, double> mass_by_topic;
  for (std::size_t i = 0; i < top_sets.size(); ++i) {
    for (const Label& t : top_sets[i]) {
      mass_by_topic[t] += topset_prior.prob(i);
    }
  }
  double prior_v = 0.0;
  for (const auto& [topic, mass] : mass_by_topic) {
    prior_v = std::max(prior_v, mass);
  }
  const double lower = 1.0 - params.r;
  const double upper = lower + params.r * prior_v;
  return {lower, std::min(upper, 1.0)};
}

}  // namespace topics
