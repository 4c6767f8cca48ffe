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

#ifndef TOPICSQIF_TOPICS_FORMULAS_H_
#define TOPICSQIF_TOPICS_FORMULAS_H_

#include <vector>

#include "qif/types.h"
#include "topics/params.h"

namespace topics {

// C(n, k) as a real. Exact 64-bit arithmetic below n=63, lgamma above;
// values past double range come back as +infinity.
double BinomialCoefficient(int n, int k);
double LogBinomialCoefficient(int n, int k);

// ---- Third-party cookies closed forms -------------------------------------

// (1/N) * sum_{h=2}^{c} C(c,h): the posterior guessing gain over the space
// of possible browsing histories.
double CookiesPosteriorVulnerability(const CookieWorld& world);

// Posterior over prior: sum_{h=2}^{c} C(c,h) = 2^c - c - 1. This is the
// leakage figure the worked examples print; it ignores how many users exist.
double CookiesLeakage(const CookieWorld& world);

// min{N, 2^c - c - 1}: what an actual N-user identity pipeline can leak.
double CookiesCapacity(const CookieWorld& world);

// ---- Topics API closed forms ----------------------------------------------

struct LeakageBound {
  double value = 0.0;  // uses m' (observed topics)
  double bound = 0.0;  // uses m (whole taxonomy)
};

// Complete-pipeline leakage r + m'(1-r)/s and its bound r + m(1-r)/s.
// Requires m_prime; throws MissingMPrime otherwise.
LeakageBound TopicsLeakage(const TopicsParams& params);

// C(m, s): the most distinct top-sets a generalization step can output.
double GeneralizationBound(const TopicsParams& params);

// Pipeline leakage up to the bounded-noise step: (m'/s, m/s).
LeakageBound BoundedNoiseLeakage(const TopicsParams& params);

// ln(1 + m(1-r)/(r s)); throws ZeroR when r = 0 (epsilon is infinite).
double TopicsEpsilon(const TopicsParams& params);

// 1 + m(1-r)/(r s) = exp(TopicsEpsilon).
double TopicsMaxCaseCapacity(const TopicsParams& params);

// ---- Counting experiment ---------------------------------------------------

// p = (1-r)/s + r/m, q = r/m, A = p/q. Throws ZeroR when r = 0.
CountingParams CountingParamsFor(const TopicsParams& params);

// 2x2 randomized-response channel [[p, 1-p], [q, 1-q]] over
// in-set/out-of-set membership.
qif::Channel CountingChannel(const CountingParams& cp);

// sum_{n=0}^{N} C(N,n) p^n (1-q)^{N-n}, evaluated in log space. Equals
// (p + 1 - q)^N and exceeds 1; it is an expectation, not a probability.
double CountingPaperExpectation(int n_users, const CountingParams& cp);

// P(noisy count = true count) when each user's membership is an independent
// fair coin. Exact O(N^2) convolution of the per-user count differences.
double CountingExactProbability(int n_users, const CountingParams& cp);

// Same probability conditioned on a fixed number of genuine members.
double CountingExactProbabilityFixedTruth(int n_users, int true_count,
                                          const CountingParams& cp);

// ---- Theory tables ----------------------------------------------------------

struct TheoryRow {
  int m = 0;
  double r = 0.0;
  int s = 0;
  double avg_capacity = 0.0;  // r + m(1-r)/s
  double epsilon = 0.0;
  double max_capacity = 0.0;  // e^epsilon
};

std::vector<TheoryRow> TheoryTable(const std::vector<TopicsParams>& params);

}  // namespace topics

#endif  // TOPICSQIF_TOPICS_FORMULAS_H_
