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


// Harvest counters and their text and JSON reports.

#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "jpbib/junii2.hpp"
#include "jpbib/name_matching.hpp"

namespace jpbib::pipeline {

/// What happened to one harvested record.
struct HarvestEvent {
    bool deleted = false;
    bool parse_error = false;
    std::optional<std::string> publication_type;  // set for parsed records
    std::optional<oai::Language> language;
    std::vector<names::NameStatus> author_statuses;
    bool duplicate = false;  // found in the corpus
};

struct RunStatistics {
    std::size_t records_with_metadata = 0;
    std::size_t deleted_records = 0;
    std::size_t parse_errors = 0;
    std::size_t duplicates_found = 0;
    std::map<std::string, std::size_t> per_type;
    std::map<std::string, std::size_t> per_language;
    std::array<std::size_t, names::kNameStatusCount> per_status{};

    void add(const HarvestEvent& event);

    std::size_t total_authors() const noexcept;
    std::size_t count(names::NameStatus status) const noexcept;
    /// Share of all author occurrences, in percent; 0 when there are none.
    double percentage(names::NameStatus status) const noexcept;

    /// Plain-text report with one table per counter group.
    std::string to_text() const;
    /// Stable JSON document (sorted keys, no timestamps).
    std::string to_json() const;

    friend bool operator==(const RunStatistics&, const RunStatistics&) = default;
};

RunStatistics record_statistics(std::span<const HarvestEvent> events);

}  // namespace jpbib::pipeline
