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

#include "topics/formulas.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace topics {

using qif::Error;
using qif::ErrorCode;

double LogBinomialCoefficient(int n, int k) {
  if (k < 0 || k > n) {
    return -std::numeric_limits<double>::infinity();
  }
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) -
         std::lgamma(n - k + 1.0);
}

double BinomialCoefficient(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  if (n < 63) {
    // Small enough for exact integer arithmetic.
    k = std::min(k, n - k);
    std::uint64_t result = 1;
    for (int i = 1; i <= k; ++i) {
      result = result * static_cast<std::uint64_t>(n - k + i) /
               static_cast<std::uint64_t>(i);
    }
    return static_cast<double>(result);
  }
  return std::exp(LogBinomialCoefficient(n, k));
}

double CookiesPosteriorVulnerability(const CookieWorld& world) {
  if (world.n_contexts < 2) {
    throw Error(ErrorCode::kBadWorld, "need at least two contexts");
  }
  return CookiesLeakage(world) / static_cast<double>(world.n_users);
}

double CookiesLeakage(const CookieWorld& world) {
  if (world.n_contexts < 2) {
    throw Error(ErrorCode::kBadWorld, "need at least two contexts");
  }
  const int c = world.n_contexts;
  if (c <= 62) {
    // 2^c - c - 1 exactly.
    return static_cast<double>((std::uint64_t{1} << c) -
                               static_cast<std::uint64_t>(c) - 1);
  }
  const double log2c = c * std::log(2.0);
  if (log2c > std::log(std::numeric_limits<double>::max())) {
    return std::numeric_limits<double>::infinity();
  }
  return std::exp(log2c) - c - 1;
}

double CookiesCapacity(const CookieWorld& world) {
  return std::min(static_cast<double>(world.n_users), CookiesLeakage(world));
}

LeakageBound TopicsLeakage(const TopicsParams& params) {
  if (!params.m_prime.has_value()) {
    throw Error(ErrorCode::kMissingMPrime,
                "leakage needs the observed topic count m'");
  }
  const double scale = (1.0 - params.r) / static_cast<double>(params.s);
  return LeakageBound{params.r + *params.m_prime * scale,
                      params.r + params.m * scale};
}

double GeneralizationBound(const TopicsParams& params) {
  return BinomialCoefficient(params.m, params.s);
}

LeakageBound BoundedNoiseLeakage(const TopicsParams& params) {
  if (!params.m_prime.has_value()) {
    throw Error(ErrorCode::kMissingMPrime,
                "leakage needs the observed topic count m'");
  }
  const double s = static_cast<double>(params.s);
  return LeakageBound{*params.m_prime / s, params.m / s};
}

double TopicsEpsilon(const TopicsParams& params) {
  return std::log(TopicsMaxCaseCapacity(params));
}

double TopicsMaxCaseCapacity(const TopicsParams& params) {
  if (params.r <= 0.0) {
    throw Error(ErrorCode::kZeroR, "capacity is infinite when r = 0");
  }
  return 1.0 + params.m * (1.0 - params.r) / (params.r * params.s);
}

CountingParams CountingParamsFor(const TopicsParams& params) {
  if (params.r <= 0.0) {
    throw Error(ErrorCode::kZeroR,
                "the counting model degenerates when r = 0");
  }
  const double q = params.r / static_cast<double>(params.m);
  const double p = (1.0 - params.r) / static_cast<double>(params.s) + q;
  return CountingParams{p, q, p / q};
}

qif::Channel CountingChannel(const CountingParams& cp) {
  return qif::Channel({"in_set", "not_in_set"}, {"in_set", "not_in_set"},
                      {cp.p, 1.0 - cp.p, cp.q, 1.0 - cp.q});
}

double CountingPaperExpectation(int n_users, const CountingParams& cp) {
  if (n_users < 1) {
    throw Error(ErrorCode::kBadParams, "need at least one user");
  }
  // log-sum-exp over log C(N,n) + n log p + (N-n) log(1-q).
  const double log_p = std::log(cp.p);
  const double log_1mq = std::log1p(-cp.q);
  std::vector<double> terms(n_users + 1);
  double max_term = -std::numeric_limits<double>::infinity();
  for (int n = 0; n <= n_users; ++n) {
    terms[n] = LogBinomialCoefficient(n_users, n) + n * log_p +
               (n_users - n) * log_1mq;
    max_term = std::max(max_term, terms[n]);
  }
  double sum = 0.0;
  for (double t : terms) sum += std::exp(t - max_term);
  return std::exp(max_term) * sum;
}

namespace {

// Distribution of (noisy count - true count) for one user whose membership
// is 1 with probability `membership`. Support {-1, 0, +1}.
struct StepDistribution {
  double minus = 0.0;
  double zero = 0.0;
  double plus = 0.0;
};

StepDistribution UserStep(const CountingParams& cp, double membership) {
  StepDistribution d;
  d.minus = membership * (1.0 - cp.p);
  d.zero = membership * cp.p + (1.0 - membership) * (1.0 - cp.q);
  d.plus = (1.0 - membership) * cp.q;
  return d;
}

// P(sum of n iid steps = 0) by exact convolution; O(n^2) time.
double ZeroSumProbability(const StepDistribution& step, int n) {
  // offsets[k + i] = P(partial sum = k), k in [-i, i].
  std::vector<double> dist{1.0};
  for (int i = 0; i < n; ++i) {
    std::vector<double> next(dist.size() + 2, 0.0);
    for (std::size_t k = 0; k < dist.size(); ++k) {
      const double mass = dist[k];
      if (mass == 0.0) continue;
      next[k] += mass * step.minus;
      next[k + 1] += mass * step.zero;
      next[k + 2] += mass * step.plus;
    }
    dist.swap(next);
  }
  return dist[n];
}

}  // namespace

double CountingExactProbability(int n_users, const CountingParams& cp) {
  if (n_users < 1) {
    throw Error(ErrorCode::kBadParams, "need at least one user");
  }
  return ZeroSumProbability(UserStep(cp, 0.5), n_users);
}

double CountingExactProbabilityFixedTruth(int n_users, int true_count,
                                          const CountingParams& cp) {
  if (n_users < 1 || true_count < 0 || true_count > n_users) {
    throw Error(ErrorCode::kBadParams, "true count outside [0, N]");
  }
  // Members and non-members contribute independent steps; the noisy count
  // matches when the member shortfall equals the non-member excess.
  const StepDistribution in = UserStep(cp, 1.0);
  const StepDistribution out = UserStep(cp, 0.0);
  // P(k members report out-of-set) ~ Bin(true_count, 1-p);
  // P(k non-members report in-set) ~ Bin(N - true_count, q).
  double total = 0.0;
  const int misses_max = std::min(true_count, n_users - true_count);
  for (int k = 0; k <= misses_max; ++k) {
    const double p_short = BinomialCoefficient(true_count, k) *
                           std::pow(in.minus, k) *
                           std::pow(in.zero, true_count - k);
    const double p_excess = BinomialCoefficient(n_users - true_count, k) *
                            std::pow(out.plus, k) *
                            std::pow(out.zero, n_users - true_count - k);
    total += p_short * p_excess;
  }
  return total;
}

std::vector<TheoryRow> TheoryTable(const std::vector<TopicsParams>& params) {
  std::vector<TheoryRow> rows;
  rows.reserve(params.size());
  for (const TopicsParams& p : params) {
    TheoryRow row;
    row.m = p.m;
    row.r = p.r;
    row.s = p.s;
    row.avg_capacity = p.r + p.m * (1.0 - p.r) / static_cast<double>(p.s);
    row.epsilon = TopicsEpsilon(p);
    row.max_capacity = TopicsMaxCaseCapacity(p);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace topics
