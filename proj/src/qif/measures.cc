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

#include "qif/measures.h"

#include <algorithm>
#include <cmath>

#include "qif/compose.h"

namespace qif {

namespace {

void CheckPriorMatchesGain(const Prior& prior, const GainMatrix& gain) {
  if (gain.secret_labels() != prior.labels()) {
    throw Error(ErrorCode::kLabelMismatch,
                "gain secrets do not match prior labels");
  }
}

void CheckPriorMatchesChannel(const Prior& prior, const Channel& channel) {
  if (channel.row_labels() != prior.labels()) {
    throw Error(ErrorCode::kLabelMismatch,
                "channel rows do not match prior labels");
  }
}

}  // namespace

double PriorGVulnerability(const Prior& prior, const GainMatrix& gain) {
  CheckPriorMatchesGain(prior, gain);
  double best = 0.0;
  bool first = true;
  for (std::size_t w = 0; w < gain.num_actions(); ++w) {
    double expected = 0.0;
    for (std::size_t x = 0; x < prior.size(); ++x) {
      expected += prior.prob(x) * gain.at(w, x);
    }
    if (first || expected > best) {
      best = expected;
      first = false;
    }
  }
  return best;
}

std::size_t BestAction(const Prior& prior, const GainMatrix& gain) {
  CheckPriorMatchesGain(prior, gain);
  std::size_t best_action = 0;
  double best = -1.0;
  for (std::size_t w = 0; w < gain.num_actions(); ++w) {
    double expected = 0.0;
    for (std::size_t x = 0; x < prior.size(); ++x) {
      expected += prior.prob(x) * gain.at(w, x);
    }
    if (expected > best) {
      best = expected;
      best_action = w;
    }
  }
  return best_action;
}

double PosteriorGVulnerability(const Prior& prior, const Channel& channel,
                               const GainMatrix& gain) {
  CheckPriorMatchesChannel(prior, channel);
  CheckPriorMatchesGain(prior, gain);
  double total = 0.0;
  for (std::size_t y = 0; y < channel.num_cols(); ++y) {
    double best = 0.0;
    bool first = true;
    for (std::size_t w = 0; w < gain.num_actions(); ++w) {
      double expected = 0.0;
      for (std::size_t x = 0; x < prior.size(); ++x) {
        expected += prior.prob(x) * channel.at(x, y) * gain.at(w, x);
      }
      if (first || expected > best) {
        best = expected;
        first = false;
      }
    }
    total += best;
  }
  return total;
}

double MultiplicativeGLeakage(const Prior& prior, const Channel& channel,
                              const GainMatrix& gain) {
  const double prior_v = PriorGVulnerability(prior, gain);
  if (prior_v <= 0.0) {
    throw Error(ErrorCode::kZeroPriorVulnerability,
                "prior g-vulnerability is zero");
  }
  return PosteriorGVulnerability(prior, channel, gain) / prior_v;
}

double PriorBayesVulnerability(const Prior& prior) {
  return *std::max_element(prior.probs().begin(), prior.probs().end());
}

double PosteriorBayesVulnerability(const Prior& prior,
                                   const Channel& channel) {
  CheckPriorMatchesChannel(prior, channel);
  double total = 0.0;
  for (std::size_t y = 0; y < channel.num_cols(); ++y) {
    double col_max = 0.0;
    for (std::size_t x = 0; x < channel.num_rows(); ++x) {
      col_max = std::max(col_max, prior.prob(x) * channel.at(x, y));
    }
    total += col_max;
  }
  return total;
}

double BayesLeakage(const Prior& prior, const Channel& channel) {
  const double prior_v = PriorBayesVulnerability(prior);
  if (prior_v <= 0.0) {
    throw Error(ErrorCode::kZeroPriorVulnerability,
                "prior Bayes vulnerability is zero");
  }
  return PosteriorBayesVulnerability(prior, channel) / prior_v;
}

double BayesCapacity(const Channel& channel) {
  double total = 0.0;
  for (std::size_t y = 0; y < channel.num_cols(); ++y) {
    double col_max = 0.0;
    for (std::size_t x = 0; x < channel.num_rows(); ++x) {
      col_max = std::max(col_max, channel.at(x, y));
    }
    total += col_max;
  }
  return total;
}

double MaxCaseCapacity(const Channel& channel) {
  double best = 0.0;
  for (std::size_t y = 0; y < channel.num_cols(); ++y) {
    double col_max = 0.0;
    double col_min = 0.0;
    for (std::size_t x = 0; x < channel.num_rows(); ++x) {
      const double v = channel.at(x, y);
      if (v == 0.0) {
        throw Error(ErrorCode::kZeroEntry,
                    "zero entry in column '" + channel.col_labels()[y] +
                        "'; max-case capacity is infinite");
      }
      if (x == 0) {
        col_max = col_min = v;
      } else {
        col_max = std::max(col_max, v);
        col_min = std::min(col_min, v);
      }
    }
    best = std::max(best, col_max / col_min);
  }
  return best;
}

double EpsilonOf(const Channel& channel) {
  return std::log(MaxCaseCapacity(channel));
}

GainMatrix IdentityGain(const std::vector<Label>& labels) {
  ValidateLabels(labels, "secret");
  const std::size_t n = labels.size();
  std::vector<double> gains(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) gains[i * n + i] = 1.0;
  return GainMatrix(labels, labels, std::move(gains));
}

double DaleniusLeakage(const Prior& rho, const Channel& correlation,
                       const Channel& system, const GainMatrix& gain) {
  return MultiplicativeGLeakage(rho, Cascade(correlation, system), gain);
}

}  // namespace qif
