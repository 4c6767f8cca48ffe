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

#ifndef TOPICSQIF_QIF_MEASURES_H_
#define TOPICSQIF_QIF_MEASURES_H_

#include <cstddef>
#include <vector>

#include "qif/types.h"

namespace qif {

// max over actions w of sum_x prior[x] * g(w, x).
double PriorGVulnerability(const Prior& prior, const GainMatrix& gain);

// sum over outputs y of max over actions w of sum_x prior[x]*C[x][y]*g(w,x).
double PosteriorGVulnerability(const Prior& prior, const Channel& channel,
                               const GainMatrix& gain);

// Posterior divided by prior g-vulnerability. Throws
// ZeroPriorVulnerability when the prior vulnerability is zero.
double MultiplicativeGLeakage(const Prior& prior, const Channel& channel,
                              const GainMatrix& gain);

// max_x prior[x].
double PriorBayesVulnerability(const Prior& prior);

// sum over outputs of the column maximum of the joint matrix.
double PosteriorBayesVulnerability(const Prior& prior, const Channel& channel);

// Posterior divided by prior Bayes vulnerability.
double BayesLeakage(const Prior& prior, const Channel& channel);

// Multiplicative (average-case) Bayes capacity: sum over columns of the
// column maximum. Realized on the uniform prior with the identity gain.
double BayesCapacity(const Channel& channel);

// Max-case capacity: the largest within-column entry ratio. Only defined for
// channels with strictly positive entries; throws ZeroEntry otherwise.
double MaxCaseCapacity(const Channel& channel);

// ln(MaxCaseCapacity); the local differential privacy parameter under the
// discrete metric.
double EpsilonOf(const Channel& channel);

// One-try guessing gain: 1 when the action names the secret, else 0.
GainMatrix IdentityGain(const std::vector<Label>& labels);

// Leakage about a correlated secret Z routed through `system`:
// MultiplicativeGLeakage(rho, correlation * system, gain). Bounded above by
// BayesCapacity(system) for any correlation and non-negative gain.
double DaleniusLeakage(const Prior& rho, const Channel& correlation,
                       const Channel& system, const GainMatrix& gain);

// Index of the first action attaining the prior vulnerability; ties resolve
// to the earliest label so reported witnesses are deterministic.
std::size_t BestAction(const Prior& prior, const GainMatrix& gain);

}  // namespace qif

#endif  // TOPICSQIF_QIF_MEASURES_H_
