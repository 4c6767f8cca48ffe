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

#include "pipeline/synth.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "qif/types.h"
#include "sim/rng.h"

namespace pipeline {

using qif::Error;
using qif::ErrorCode;

namespace {

std::string Numbered(const char* stem, int index, int width) {
  std::string digits = std::to_string(index);
  if (static_cast<int>(digits.size()) < width) {
    digits.insert(0, width - digits.size(), '0');
  }
  return stem + digits;
}

int DigitsFor(int n) {
  int width = 1;
  while (n >= 10) {
    n /= 10;
    ++width;
  }
  return width;
}

}  // namespace

SynthOutput SynthGenerate(const SynthConfig& config) {
  if (config.n_users < 1 || config.n_domains < 1 ||
      config.taxonomy_size < 1 || config.min_visits_per_user < 1 ||
      config.max_visits_per_user < config.min_visits_per_user ||
      config.zipf_exponent < 0.0) {
    throw Error(ErrorCode::kBadParams, "invalid synthetic-world sizes");
  }

  sim::Rng rng(config.seed);
  const int domain_width = DigitsFor(config.n_domains - 1);
  const int topic_width = DigitsFor(config.taxonomy_size - 1);
  const int user_width = DigitsFor(config.n_users - 1);

  std::vector<std::string> domains(config.n_domains);
  for (int i = 0; i < config.n_domains; ++i) {
    domains[i] = Numbered("site", i, domain_width) + ".test";
  }

  // Zipf popularity over domains; exponent 0 degenerates to uniform.
  std::vector<double> cumulative(config.n_domains);
  double total = 0.0;
  for (int i = 0; i < config.n_domains; ++i) {
    total += 1.0 / std::pow(static_cast<double>(i + 1), config.zipf_exponent);
    cumulative[i] = total;
  }

  SynthOutput out;
  out.classification_csv = "domain,topics\n";
  for (int i = 0; i < config.n_domains; ++i) {
    const int n_topics =
        1 + static_cast<int>(rng.NextBelow(
                std::min(3, config.taxonomy_size)));
    std::vector<int> picked;
    while (static_cast<int>(picked.size()) < n_topics) {
      int t = static_cast<int>(rng.NextBelow(config.taxonomy_size));
      if (std::find(picked.begin(), picked.end(), t) == picked.end()) {
        picked.push_back(t);
      }
    }
    std::sort(picked.begin(), picked.end());
    out.classification_csv += domains[i] + ",";
    for (std::size_t j = 0; j < picked.size(); ++j) {
      if (j > 0) out.classification_csv += ';';
      out.classification_csv += Numbered("topic", picked[j], topic_width);
    }
    out.classification_csv += '\n';
  }

  out.history_csv = "user_id,timestamp,url_or_domain\n";
  for (int u = 0; u < config.n_users; ++u) {
    const std::string user = Numbered("user", u, user_width);
    const int visits =
        config.min_visits_per_user +
        static_cast<int>(rng.NextBelow(config.max_visits_per_user -
                                       config.min_visits_per_user + 1));
    for (int v = 0; v < visits; ++v) {
      const double pick = rng.NextDouble() * total;
      const int domain_index = static_cast<int>(
          std::lower_bound(cumulative.begin(), cumulative.end(), pick) -
          cumulative.begin());
      // Three-week window so epoch partitioning has something to split.
      const int day = 1 + static_cast<int>(rng.NextBelow(21));
      const int hour = static_cast<int>(rng.NextBelow(24));
      const int minute = static_cast<int>(rng.NextBelow(60));
      const int second = static_cast<int>(rng.NextBelow(60));
      char timestamp[32];
      std::snprintf(timestamp, sizeof(timestamp),
                    "2025-03-%02dT%02d:%02d:%02d", day, hour, minute, second);
      out.history_csv +=
          user + "," + timestamp + "," + domains[domain_index] + "\n";
    }
  }

  out.suffix_list = "// synthetic suffix list\ntest\n";
  return out;
}

}  // namespace pipeline
