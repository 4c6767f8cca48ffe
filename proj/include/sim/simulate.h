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

#ifndef TOPICSQIF_SIM_SIMULATE_H_
#define TOPICSQIF_SIM_SIMULATE_H_

#include <functional>
#include <string>
#include <vector>

#include "qif/types.h"
#include "sim/rng.h"
#include "topics/params.h"

namespace sim {

// ---- Third-party cookies --------------------------------------------------

struct CookieVisit {
  std::string uid;
  std::string origin;
  std::string context;
  std::string timestamp;
};

struct CookieLog {
  std::vector<CookieVisit> visits;
  // Ground truth, for validation only; the adversary sees just `visits`.
  std::vector<std::pair<qif::Label, std::string>> uid_by_user;
};

// Runs the tracking session: every user visits each context of their
// history once; the origin assigns a fresh uid on first contact and reuses
// it afterwards. Histories are drawn as distinct random context subsets of
// the configured sizes.
CookieLog SimulateCookieSession(const topics::CookieWorld& world, Rng* rng);

// Rebuilds the histories->uid linkage channel from the log alone. Row labels
// are reconstructed history signatures (sorted contexts joined by '|').
qif::Channel ReconstructLinkage(const CookieLog& log);

// ---- Topics API reporting -------------------------------------------------

// One run of the reporting step: uniform over the top-set, overridden with
// probability r by a uniform draw from the whole taxonomy.
qif::Label SampleReportedTopic(const topics::TopicSet& top_s,
                               const std::vector<qif::Label>& taxonomy,
                               double r, Rng* rng);

struct EstimatedChannel {
  qif::Channel channel;
  std::vector<std::vector<double>> standard_errors;  // binomial, per entry
  long trials_per_row = 0;
};

// Empirical channel from repeated sampling: rows are frequency histograms
// over `col_labels`. The sampler must only ever return listed columns.
EstimatedChannel EstimateChannel(
    const std::function<qif::Label(const qif::Label& row, Rng*)>& sampler,
    const std::vector<qif::Label>& row_labels,
    const std::vector<qif::Label>& col_labels, long trials_per_row, Rng* rng);

// ---- Counting experiment ---------------------------------------------------

struct CountingEstimate {
  double estimate = 0.0;
  double standard_error = 0.0;
  long trials = 0;
};

// Monte Carlo estimate of P(noisy count = true count) for N users whose
// membership is an independent coin with the given bias.
CountingEstimate RunCountingExperiment(int n_users,
                                       const topics::CountingParams& cp,
                                       long trials, Rng* rng,
                                       double membership_prob = 0.5);

// Variant with a fixed number of genuine members, matching the
// fixed-truth analytical oracle.
CountingEstimate RunCountingExperimentFixedTruth(
    int n_users, int true_count, const topics::CountingParams& cp, long trials,
    Rng* rng);

// ---- Multi-epoch composition ------------------------------------------------

// Per-epoch assignments over a shared user set, with per-epoch parameters.
struct EpochWorld {
  std::vector<topics::TopicAssignment> epochs;
  std::vector<topics::TopicsParams> params;  // aligned with epochs

  void Validate() const;
};

struct MultiEpochChannels {
  qif::Channel privacy;  // users -> tuples of reported topics
  qif::Channel utility;  // tuples of top-sets -> tuples of reported topics
};

// Privacy: parallel composition of the per-epoch users->topics pipelines.
// Utility: Kronecker composition of the per-epoch reporting channels, since
// the secret is the tuple of per-epoch top-sets.
MultiEpochChannels BuildMultiEpochChannels(const EpochWorld& world);

}  // namespace sim

#endif  // TOPICSQIF_SIM_SIMULATE_H_
