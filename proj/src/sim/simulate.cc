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

#include "sim/simulate.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <unordered_map>
#include <utility>

#include "qif/compose.h"
#include "topics/channels.h"

namespace sim {

using qif::Channel;
using qif::Error;
using qif::ErrorCode;
using qif::Label;

namespace {

std::string IndexedLabel(const char* stem, long index) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%s%ld", stem, index);
  return buf;
}

}  // namespace

CookieLog SimulateCookieSession(const topics::CookieWorld& world, Rng* rng) {
  // Draw distinct context subsets; re-draw on collision so the linkage is
  // invertible.
  std::set<std::vector<int>> taken;
  std::vector<std::vector<int>> histories;
  histories.reserve(world.n_users);
  for (long u = 0; u < world.n_users; ++u) {
    const int h = world.history_sizes.empty()
                      ? 2
                      : world.history_sizes[u % world.history_sizes.size()];
    std::vector<int> contexts;
    do {
      contexts.clear();
      std::set<int> chosen;
      while (static_cast<int>(chosen.size()) < h) {
        chosen.insert(static_cast<int>(rng->NextBelow(world.n_contexts)));
      }
      contexts.assign(chosen.begin(), chosen.end());
    } while (!taken.insert(contexts).second);
    histories.push_back(std::move(contexts));
  }

  CookieLog log;
  const std::string origin = "tracker.test";
  long next_uid = 0;
  long minute = 0;
  for (long u = 0; u < world.n_users; ++u) {
    const Label user = IndexedLabel("user", u);
    std::string uid;
    for (int context : histories[u]) {
      if (uid.empty()) {
        // First contact with this origin: the cookie jar gains an entry.
        uid = IndexedLabel("uid", next_uid++);
        log.uid_by_user.emplace_back(user, uid);
      }
      char timestamp[32];
      std::snprintf(timestamp, sizeof(timestamp), "2025-03-01T%02ld:%02ld:00",
                    minute / 60 % 24, minute % 60);
      ++minute;
      log.visits.push_back(
          {uid, origin, IndexedLabel("ctx", context), timestamp});
    }
  }
  return log;
}

Channel ReconstructLinkage(const CookieLog& log) {
  // Group observed contexts by uid; the sorted context set is the
  // reconstructed browsing history.
  std::map<std::string, std::set<std::string>> contexts_by_uid;
  for (const CookieVisit& visit : log.visits) {
    contexts_by_uid[visit.uid].insert(visit.context);
  }
  std::vector<Label> histories;
  std::vector<Label> uids;
  for (const auto& [uid, contexts] : contexts_by_uid) {
    std::string signature;
    for (const std::string& context : contexts) {
      if (!signature.empty()) signature += '|';
      signature += context;
    }
    histories.push_back(signature);
    uids.push_back(uid);
  }
  std::vector<double> entries(histories.size() * uids.size(), 0.0);
  for (std::size_t i = 0; i < histories.size(); ++i) {
    entries[i * uids.size() + i] = 1.0;
  }
  return Channel(std::move(histories), std::move(uids), std::move(entries));
}

Label SampleReportedTopic(const topics::TopicSet& top_s,
                          const std::vector<Label>& taxonomy, double r,
                          Rng* rng) {
  if (top_s.empty()) {
    throw Error(ErrorCode::kEmptyTopSet, "cannot report from an empty set");
  }
  if (!(r >= 0.0 && r <= 1.0)) {
    throw Error(ErrorCode::kBadProbability, "r outside [0,1]");
  }
  if (rng->NextBernoulli(r)) {
    return taxonomy[rng->NextBelow(taxonomy.size())];
  }
  return top_s[rng->NextBelow(top_s.size())];
}

EstimatedChannel EstimateChannel(
    const std::function<Label(const Label& row, Rng*)>& sampler,
    const std::vector<Label>& row_labels, const std::vector<Label>& col_labels,
    long trials_per_row, Rng* rng) {
  if (trials_per_row < 1) {
    throw Error(ErrorCode::kBadParams, "need at least one trial per row");
  }
  std::unordered_map<std::string_view, std::size_t> col_index;
  for (std::size_t j = 0; j < col_labels.size(); ++j) {
    col_index.emplace(col_labels[j], j);
  }
  std::vector<double> entries(row_labels.size() * col_labels.size(), 0.0);
  std::vector<std::vector<double>> errors(
      row_labels.size(), std::vector<double>(col_labels.size(), 0.0));
  for (std::size_t i = 0; i < row_labels.size(); ++i) {
    std::vector<long> counts(col_labels.size(), 0);
    for (long t = 0; t < trials_per_row; ++t) {
      const Label outcome = sampler(row_labels[i], rng);
      auto it = col_index.find(outcome);
      if (it == col_index.end()) {
        throw Error(ErrorCode::kLabelMismatch,
                    "sampler produced unknown outcome '" + outcome + "'");
      }
      ++counts[it->second];
    }
    for (std::size_t j = 0; j < col_labels.size(); ++j) {
      const double frequency =
          static_cast<double>(counts[j]) / static_cast<double>(trials_per_row);
      entries[i * col_labels.size() + j] = frequency;
      errors[i][j] = std::sqrt(frequency * (1.0 - frequency) /
                               static_cast<double>(trials_per_row));
    }
  }
  return EstimatedChannel{
      Channel(row_labels, col_labels, std::move(entries)),
      std::move(errors), trials_per_row};
}

namespace {

CountingEstimate FinishEstimate(long successes, long trials) {
  const double estimate =
      static_cast<double>(successes) / static_cast<double>(trials);
  const double standard_error =
      std::sqrt(estimate * (1.0 - estimate) / static_cast<double>(trials));
  return CountingEstimate{estimate, standard_error, trials};
}

}  // namespace

CountingEstimate RunCountingExperiment(int n_users,
                                       const topics::CountingParams& cp,
                                       long trials, Rng* rng,
                                       double membership_prob) {
  if (n_users < 1 || trials < 1) {
    throw Error(ErrorCode::kBadParams, "need users and trials");
  }
  long successes = 0;
  for (long t = 0; t < trials; ++t) {
    int true_count = 0;
    int noisy_count = 0;
    for (int u = 0; u < n_users; ++u) {
      const bool member = rng->NextBernoulli(membership_prob);
      true_count += member;
      noisy_count += rng->NextBernoulli(member ? cp.p : cp.q);
    }
    successes += (noisy_count == true_count);
  }
  return FinishEstimate(successes, trials);
}

CountingEstimate RunCountingExperimentFixedTruth(
    int n_users, int true_count, const topics::CountingParams& cp, long trials,
    Rng* rng) {
  if (n_users < 1 || trials < 1 || true_count < 0 || true_count > n_users) {
    throw Error(ErrorCode::kBadParams, "true count outside [0, N]");
  }
  long successes = 0;
  for (long t = 0; t < trials; ++t) {
    int noisy_count = 0;
    for (int u = 0; u < n_users; ++u) {
      noisy_count += rng->NextBernoulli(u < true_count ? cp.p : cp.q);
    }
    successes += (noisy_count == true_count);
  }
  return FinishEstimate(successes, trials);
}

void EpochWorld::Validate() const {
  if (epochs.empty()) {
    throw Error(ErrorCode::kBadParams, "need at least one epoch");
  }
  if (params.size() != epochs.size()) {
    throw Error(ErrorCode::kBadParams, "per-epoch parameters missing");
  }
  for (const topics::TopicAssignment& epoch : epochs) {
    epoch.Validate();
    if (epoch.histories != epochs.front().histories) {
      throw Error(ErrorCode::kLabelMismatch,
                  "epochs do not share the user set");
    }
  }
}

MultiEpochChannels BuildMultiEpochChannels(const EpochWorld& world) {
  world.Validate();
  auto epoch_privacy = [&](std::size_t e) {
    const topics::TopicAssignment& epoch = world.epochs[e];
    const Channel users = topics::IdentityChannel(epoch.histories);
    const Channel generalization = topics::GeneralizationChannel(epoch);
    const Channel report = topics::TopicsReportChannel(
        epoch.top_sets, world.params[e], epoch.taxonomy);
    return qif::Cascade(qif::Cascade(users, generalization), report);
  };
  auto epoch_utility = [&](std::size_t e) {
    const topics::TopicAssignment& epoch = world.epochs[e];
    return topics::TopicsReportChannel(epoch.top_sets, world.params[e],
                                       epoch.taxonomy);
  };

  Channel privacy = epoch_privacy(0);
  Channel utility = epoch_utility(0);
  for (std::size_t e = 1; e < world.epochs.size(); ++e) {
    try {
      privacy = qif::Parallel(privacy, epoch_privacy(e));
      utility = qif::Kronecker(utility, epoch_utility(e));
    } catch (const Error& error) {
      if (error.code() == ErrorCode::kMatrixTooLarge) {
        throw Error(ErrorCode::kMemoryCap,
                    "multi-epoch channel would exceed the entry cap");
      }
      throw;
    }
  }
  return MultiEpochChannels{std::move(privacy), std::move(utility)};
}

}  // namespace sim
