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

#include "pipeline/profiles.h"

#include <algorithm>
#include <set>
#include <unordered_set>
#include <utility>

#include "json.hpp"

namespace pipeline {

using qif::Error;
using qif::ErrorCode;

std::vector<UserProfile> BuildProfiles(
    const std::vector<AnnotatedVisit>& visits) {
  std::map<qif::Label, UserProfile> by_user;
  for (const AnnotatedVisit& visit : visits) {
    UserProfile& profile = by_user[visit.visit.user_id];
    profile.user_id = visit.visit.user_id;
    profile.history.push_back(visit);
    profile.total_visits += 1;
    for (const qif::Label& topic : visit.topics) {
      profile.topic_counts[topic] += 1;
    }
  }
  std::vector<UserProfile> profiles;
  profiles.reserve(by_user.size());
  for (auto& [user, profile] : by_user) {
    std::unordered_set<std::string> domains;
    for (const AnnotatedVisit& visit : profile.history) {
      domains.insert(visit.visit.domain);
    }
    profile.distinct_domains = static_cast<long>(domains.size());
    profiles.push_back(std::move(profile));
  }
  return profiles;
}

TreatmentStats TreatUsers(std::vector<UserProfile>* profiles,
                          const TreatmentConfig& config) {
  TreatmentStats stats;
  auto dropped = [&](const UserProfile& profile) {
    if (config.drop_singletons && profile.distinct_domains <= 1) {
      ++stats.singletons_dropped;
      return true;
    }
    if (config.outlier_max_visits.has_value() &&
        profile.total_visits > *config.outlier_max_visits) {
      ++stats.outliers_dropped;
      return true;
    }
    return false;
  };
  std::erase_if(*profiles, dropped);
  return stats;
}

bool ComputeTopS(UserProfile* profile, const TreatmentConfig& config) {
  if (static_cast<int>(profile->topic_counts.size()) < config.s) {
    if (config.insufficient_topics == InsufficientTopicsPolicy::kError) {
      throw Error(ErrorCode::kInsufficientTopics,
                  "user '" + profile->user_id + "' has only " +
                      std::to_string(profile->topic_counts.size()) +
                      " distinct topics, needs " + std::to_string(config.s));
    }
    return false;
  }
  std::vector<std::pair<qif::Label, long>> ranked(profile->topic_counts.begin(),
                                                  profile->topic_counts.end());
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  std::vector<qif::Label> top;
  top.reserve(config.s);
  for (int i = 0; i < config.s; ++i) top.push_back(ranked[i].first);
  profile->top_s = std::move(top);
  return true;
}

void ComputeAllTopS(std::vector<UserProfile>* profiles,
                    const TreatmentConfig& config, TreatmentStats* stats) {
  std::erase_if(*profiles, [&](UserProfile& profile) {
    if (!ComputeTopS(&profile, config)) {
      ++stats->insufficient_topics_dropped;
      return true;
    }
    return false;
  });
}

ModelInputs BuildModelInputs(const std::vector<UserProfile>& profiles,
                             const Classification& classification, int s,
                             double r) {
  if (profiles.empty()) {
    throw Error(ErrorCode::kBadParams, "no eligible users");
  }
  topics::TopicAssignment assignment;
  assignment.taxonomy = classification.taxonomy;
  std::set<qif::Label> occurring;
  std::unordered_set<std::string> distinct_sets;
  for (const UserProfile& profile : profiles) {
    if (!profile.top_s.has_value()) {
      throw Error(ErrorCode::kIncompleteAssignment,
                  "user '" + profile.user_id + "' has no top-set");
    }
    assignment.histories.push_back(profile.user_id);
    topics::TopicSet set = topics::CanonicalTopicSet(*profile.top_s);
    occurring.insert(set.begin(), set.end());
    distinct_sets.insert(topics::TopicSetLabel(set));
    assignment.top_sets.push_back(std::move(set));
  }
  assignment.Validate();

  ModelInputs inputs{
      std::move(assignment),
      topics::TopicsParams::Create(
          static_cast<int>(classification.taxonomy.size()), s, r,
          static_cast<int>(occurring.size())),
      qif::Prior::Uniform([&] {
        std::vector<qif::Label> users;
        users.reserve(profiles.size());
        for (const UserProfile& p : profiles) users.push_back(p.user_id);
        return users;
      }()),
      static_cast<int>(distinct_sets.size())};
  return inputs;
}

topics::CookieWorld CookieWorldFromProfiles(
    const std::vector<UserProfile>& profiles) {
  std::unordered_set<std::string> contexts;
  std::vector<int> history_sizes;
  history_sizes.reserve(profiles.size());
  for (const UserProfile& profile : profiles) {
    std::unordered_set<std::string> own;
    for (const AnnotatedVisit& visit : profile.history) {
      contexts.insert(visit.visit.domain);
      own.insert(visit.visit.domain);
    }
    history_sizes.push_back(static_cast<int>(own.size()));
  }
  return topics::CookieWorld::Create(static_cast<long>(profiles.size()),
                                     static_cast<int>(contexts.size()),
                                     std::move(history_sizes));
}

std::vector<std::vector<AnnotatedVisit>> PartitionEpochs(
    const std::vector<AnnotatedVisit>& visits, std::int64_t epoch_seconds) {
  if (epoch_seconds <= 0) {
    throw Error(ErrorCode::kBadParams, "epoch length must be positive");
  }
  if (visits.empty()) return {};
  std::int64_t t0 = visits.front().visit.time_seconds;
  std::int64_t t1 = t0;
  for (const AnnotatedVisit& visit : visits) {
    t0 = std::min(t0, visit.visit.time_seconds);
    t1 = std::max(t1, visit.visit.time_seconds);
  }
  const std::size_t n_epochs =
      static_cast<std::size_t>((t1 - t0) / epoch_seconds) + 1;
  std::vector<std::vector<AnnotatedVisit>> epochs(n_epochs);
  for (const AnnotatedVisit& visit : visits) {
    epochs[(visit.visit.time_seconds - t0) / epoch_seconds].push_back(visit);
  }
  std::erase_if(epochs, [](const auto& e) { return e.empty(); });
  return epochs;
}

std::string ProfilesToJsonLines(const std::vector<UserProfile>& profiles) {
  std::string out;
  for (const UserProfile& profile : profiles) {
    nlohmann::json doc;
    doc["user"] = profile.user_id;
    nlohmann::json history = nlohmann::json::array();
    for (const AnnotatedVisit& visit : profile.history) {
      history.push_back({{"domain", visit.visit.domain},
                         {"timestamp", visit.visit.timestamp},
                         {"topics", visit.topics}});
    }
    doc["history"] = std::move(history);
    if (profile.top_s.has_value()) {
      doc["top_s"] = *profile.top_s;
    }
    out += doc.dump();
    out += '\n';
  }
  return out;
}

}  // namespace pipeline
