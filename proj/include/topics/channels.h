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

#ifndef TOPICSQIF_TOPICS_CHANNELS_H_
#define TOPICSQIF_TOPICS_CHANNELS_H_

#include <utility>
#include <vector>

#include "qif/types.h"
#include "topics/params.h"

namespace topics {

// Square identity channel; models both the users->histories and the
// histories->uid linkage steps of the cookies pipeline.
qif::Channel IdentityChannel(const std::vector<qif::Label>& labels);

// Deterministic histories->top-sets channel. Columns are the distinct
// top-sets in first-occurrence order, labeled canonically.
qif::Channel GeneralizationChannel(const TopicAssignment& assignment);

// Minimum count of ones over the columns of a deterministic 0/1 channel.
int KAnonymityOf(const qif::Channel& generalization);

// Uniform report of one topic from each top-set: entry 1/s for members,
// 0 elsewhere. Rows are the distinct top-sets in first-occurrence order,
// columns the full taxonomy.
qif::Channel BoundedNoiseChannel(const std::vector<TopicSet>& top_sets,
                                 const std::vector<qif::Label>& taxonomy);

// Uniform report over the whole taxonomy: every entry 1/m.
qif::Channel DpChannel(const std::vector<TopicSet>& top_sets,
                       const std::vector<qif::Label>& taxonomy);

// The full reporting channel: (1-r)/s + r/m for topics in the set, r/m
// otherwise. Coincides with InternalChoice(BoundedNoise, Dp, r).
qif::Channel TopicsReportChannel(const std::vector<TopicSet>& top_sets,
                                 const TopicsParams& params,
                                 const std::vector<qif::Label>& taxonomy);

// The number of non-zero entries per row of a bounded-noise channel; every
// row must agree, otherwise NotDeterministic.
int BoundedNoiseParameter(const qif::Channel& bounded_noise);

// Gain 1 when the reported topic genuinely belongs to the user's top-set.
// Actions are taxonomy topics, secrets the distinct top-sets.
qif::GainMatrix IbaGain(const std::vector<TopicSet>& top_sets,
                        const std::vector<qif::Label>& taxonomy);

// The (lower, upper) bounds on the posterior IBA vulnerability of the
// reporting channel: [1-r, (1-r) + r * prior IBA vulnerability]. Requires
// r < 0.5; `top_sets` must align with the prior's labels.
std::pair<double, double> IbaPosteriorBounds(const qif::Prior& topset_prior,
                                             const std::vector<TopicSet>& top_sets,
                                             const TopicsParams& params);

// Distinct top-sets in first-occurrence order.
std::vector<TopicSet> DistinctTopSets(const std::vector<TopicSet>& top_sets);

}  // namespace topics

#endif  // TOPICSQIF_TOPICS_CHANNELS_H_
