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

#include "jpbib/similarity.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "jpbib/errors.hpp"
#include "jpbib/utf8.hpp"

namespace jpbib::similarity {

namespace {

WordSet lowered(const WordSet& words) {
    WordSet out;
    for (const std::string& w : words)
        out.insert(utf8::ascii_lower(w));
    return out;
}

}  // namespace

void MatchConfig::validate() const {
    if (!(match_threshold >= 0.0 && match_threshold <= 1.0))
        throw ConfigError("match threshold", "must lie in [0, 1], got " + std::to_string(match_threshold));
}

std::size_t levenshtein(std::string_view s, std::string_view t) {
    const std::u32string a = utf8::decode(s);
    const std::u32string b = utf8::decode(t);

    // Single row of the (|a|+1) x (|b|+1) matrix.
    std::vector<std::size_t> row(b.size() + 1);
    std::iota(row.begin(), row.end(), std::size_t{0});
    for (std::size_t i = 1; i <= a.size(); ++i) {
        std::size_t diagonal = row[0];
        row[0] = i;
        for (std::size_t j = 1; j <= b.size(); ++j) {
            const std::size_t above = row[j];
            const std::size_t substitution = diagonal + (a[i - 1] == b[j - 1] ? 0 : 1);
            row[j] = std::min({substitution, row[j - 1] + 1, above + 1});
            diagonal = above;
        }
    }
    return row[b.size()];
}

double jaccard(const WordSet& s, const WordSet& t) {
    const WordSet a = lowered(s);
    const WordSet b = lowered(t);
    if (a.empty() && b.empty())
        return 1.0;
    std::size_t common = 0;
    for (const std::string& w : a)
        common += b.count(w);
    return static_cast<double>(common) / static_cast<double>(a.size() + b.size() - common);
}

double jaccard_lev(const WordSet& s, const WordSet& t, const MatchConfig& cfg) {
    const WordSet low_s = lowered(s);
    const WordSet low_t = lowered(t);
    const std::vector<std::string> a(low_s.begin(), low_s.end());
    const std::vector<std::string> b(low_t.begin(), low_t.end());
    if (a.empty() && b.empty())
        return 1.0;

    struct Candidate {
        std::size_t distance;
        const std::string* low;
        const std::string* high;
        std::size_t i;
        std::size_t j;
    };
    std::vector<Candidate> candidates;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            const std::size_t d = levenshtein(a[i], b[j]);
            if (d >= cfg.lev_threshold)
                continue;
            const bool ordered = a[i] <= b[j];
            candidates.push_back({d, ordered ? &a[i] : &b[j], ordered ? &b[j] : &a[i], i, j});
        }
    }
    // The key depends only on the unordered token pair, so swapping the
    // arguments does not change which pairs are taken.
    std::sort(candidates.begin(), candidates.end(), [](const Candidate& x, const Candidate& y) {
        return std::tie(x.distance, *x.low, *x.high) < std::tie(y.distance, *y.low, *y.high);
    });

    std::vector<bool> used_a(a.size()), used_b(b.size());
    std::size_t matched = 0;
    for (const Candidate& c : candidates) {
        if (used_a[c.i] || used_b[c.j])
            continue;
        used_a[c.i] = used_b[c.j] = true;
        ++matched;
    }
    return static_cast<double>(matched) / static_cast<double>(a.size() + b.size() - matched);
}

WordSet tokens(std::string_view full_name) {
    WordSet out;
    const std::string collapsed = utf8::collapse_whitespace(full_name);
    std::size_t start = 0;
    while (start < collapsed.size()) {
        std::size_t end = collapsed.find(' ', start);
        if (end == std::string::npos)
            end = collapsed.size();
        out.insert(collapsed.substr(start, end - start));
        start = end + 1;
    }
    return out;
}

bool names_match(std::string_view a, std::string_view b, const MatchConfig& cfg) {
    return jaccard_lev(tokens(a), tokens(b), cfg) >= cfg.match_threshold;
}

}  // namespace jpbib::similarity
