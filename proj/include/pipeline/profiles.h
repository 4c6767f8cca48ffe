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

#ifndef TOPICSQIF_PIPELINE_PROFILES_H_
#define TOPICSQIF_PIPELINE_PROFILES_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pipeline/ingest.h"
#include "qif/types.h"
#include "topics/params.h"

namespace pipeline {

enum class InsufficientTopicsPolicy { kDrop, kError };

struct TreatmentConfig {
  int s = 5;
  bool drop_singletons = true;
  std::optional<long> outlier_max_visits;
  InsufficientTopicsPolicy insufficient_topics = InsufficientTopicsPolicy::kDrop;
  // Tie-break is fixed: count descending, then topic label ascending.
};

struct UserProfile {
  qif::Label user_id;
  std::vector<AnnotatedVisit> history;
  std::map<qif::Label, long> topic_counts;
  long total_visits = 0;
  long distinct_domains = 0;
  // Present after top-set computation for eligible users; selection order
  // (count descending, label ascending).
  std::optional<std::vector<qif::Label>> top_s;
};

struct TreatmentStats {
  long singletons_dropped = 0;
  long outliers_dropped = 0;
  long insufficient_topics_dropped = 0;
};

// Groups annotated visits into per-user profiles, ordered by user label.
std::vector<UserProfile> BuildProfiles(const std::vector<AnnotatedVisit>& visits);

// Applies the singleton and outlier rules in place.
TreatmentStats TreatUsers(std::vector<UserProfile>* profiles,
                          const TreatmentConfig& config);

// Fills profile->top_s from its topic counts, or returns false when the user
// has fewer than s distinct topics and the policy says drop. Policy kError
// throws InsufficientTopics instead.
bool ComputeTopS(UserProfile* profile, const TreatmentConfig& config);

// Runs ComputeTopS over all profiles, removing dropped users; the count of
// removals lands in stats->insufficient_topics_dropped.
void ComputeAllTopS(std::vector<UserProfile>* profiles,
                    const TreatmentConfig& config, TreatmentStats* stats);

struct ModelInputs {
  topics::TopicAssignment assignment;
  topics::TopicsParams params;   // m, s, r, and observed m'
  qif::Prior user_prior;         // uniform over users
  int sigma_count = 0;           // |Sigma|, distinct top-sets
};

// Assembles channel-builder inputs from treated profiles. Every profile must
// already carry a top-set.
ModelInputs BuildModelInputs(const std::vector<UserProfile>& profiles,
                             const Classification& classification, int s,
                             double r);

// N, c, and per-user history sizes for the cookies closed forms.
topics::CookieWorld CookieWorldFromProfiles(
    const std::vector<UserProfile>& profiles);

// Splits visits into consecutive epochs of `epoch_seconds`, anchored at the
// earliest timestamp. Every returned epoch is non-empty.
std::vector<std::vector<AnnotatedVisit>> PartitionEpochs(
    const std::vector<AnnotatedVisit>& visits, std::int64_t epoch_seconds);

// Per-user profile dump, one JSON object per line.
std::string ProfilesToJsonLines(const std::vector<UserProfile>& profiles);

}  // namespace pipeline

#endif  // TOPICSQIF_PIPELINE_PROFILES_H_
