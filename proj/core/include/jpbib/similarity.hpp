// Copyright 2026 The jpbib Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace jpbib::similarity {

using WordSet = std::set<std::string>;

struct MatchConfig {
    /// Two tokens count as equal when their edit distance is below this.
    std::size_t lev_threshold = 2;
    /// Minimum token-set similarity for two names to match, in [0, 1].
    double match_threshold = 0.75;

    /// Throws ConfigError unless match_threshold lies in [0, 1].
    void validate() const;
};

/// Unit-cost edit distance over code points.
std::size_t levenshtein(std::string_view s, std::string_view t);

/// |S n T| / |S u T|, compared case-insensitively; 1 for two empty sets.
double jaccard(const WordSet& s, const WordSet& t);

/// Jaccard coefficient where two tokens intersect when their distance is
/// below cfg.lev_threshold. Tokens are paired one-to-one, closest pairs
/// first.
double jaccard_lev(const WordSet& s, const WordSet& t, const MatchConfig& cfg);

/// Whitespace tokens of a full name.
WordSet tokens(std::string_view full_name);

bool names_match(std::string_view a, std::string_view b, const MatchConfig& cfg);

/// (precision, recall) of `answer` against `relevant`. Empty answer gives
/// precision 1, empty relevant set gives recall 1.
template <typename Id>
std::pair<double, double> precision_recall(const std::set<Id>& answer, const std::set<Id>& relevant) {
    std::size_t hits = 0;
    for (const Id& id : answer)
        hits += relevant.count(id);
    const double precision =
        answer.empty() ? 1.0 : static_cast<double>(hits) / static_cast<double>(answer.size());
    const double recall =
        relevant.empty() ? 1.0 : static_cast<double>(hits) / static_cast<double>(relevant.size());
    return {precision, recall};
}

}  // namespace jpbib::similarity
