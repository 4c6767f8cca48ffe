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

#ifndef TOPICSQIF_PIPELINE_SYNTH_H_
#define TOPICSQIF_PIPELINE_SYNTH_H_

#include <cstdint>
#include <string>

namespace pipeline {

// Synthetic browsing-history generator. Deterministic for a fixed seed;
// domain popularity follows a Zipf law with the given exponent (0 means
// uniform) and every domain carries one to three topics.
struct SynthConfig {
  std::uint64_t seed = 0;
  int n_users = 100;
  int n_domains = 50;
  int taxonomy_size = 10;
  int min_visits_per_user = 2;
  int max_visits_per_user = 20;
  double zipf_exponent = 1.0;
};

struct SynthOutput {
  std::string history_csv;         // user_id,timestamp,url_or_domain
  std::string classification_csv;  // domain,topics
  std::string suffix_list;         // minimal matching suffix file
};

SynthOutput SynthGenerate(const SynthConfig& config);

}  // namespace pipeline

#endif  // TOPICSQIF_PIPELINE_SYNTH_H_
