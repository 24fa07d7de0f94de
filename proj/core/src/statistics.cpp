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


#include "jpbib/statistics.hpp"

#include <cmath>
#include <cstdio>
#include <numeric>

#include <nlohmann/json.hpp>

namespace jpbib::pipeline {

namespace {

std::string percent(double value) {
    char buffer[16];
    std::snprintf(buffer, sizeof buffer, "%.1f%%", value);
    return buffer;
}

std::string row(const std::string& label, std::size_t count, const std::string& extra = {}) {
    char buffer[160];
    std::snprintf(buffer, sizeof buffer, "  %-32s %8zu %s", label.c_str(), count, extra.c_str());
    std::string out = buffer;
    while (!out.empty() && out.back() == ' ')
        out.pop_back();
    return out + "\n";
}

}  // namespace

void RunStatistics::add(const HarvestEvent& event) {
    if (event.deleted) {
        ++deleted_records;
        return;
    }
    if (event.parse_error || !event.publication_type) {
        ++parse_errors;
        return;
    }
    ++records_with_metadata;
    ++per_type[event.publication_type->empty() ? std::string("(none)") : *event.publication_type];
    ++per_language[std::string(oai::to_string(event.language.value_or(oai::Language::other)))];
    for (const names::NameStatus status : event.author_statuses)
        ++per_status[static_cast<std::size_t>(status)];
    if (event.duplicate)
        ++duplicates_found;
}

std::size_t RunStatistics::total_authors() const noexcept {
    return std::accumulate(per_status.begin(), per_status.end(), std::size_t{0});
}

std::size_t RunStatistics::count(names::NameStatus status) const noexcept {
    return per_status[static_cast<std::size_t>(status)];
}

double RunStatistics::percentage(names::NameStatus status) const noexcept {
    const std::size_t total = total_authors();
    return total == 0 ? 0.0 : 100.0 * static_cast<double>(count(status)) / static_cast<double>(total);
}

std::string RunStatistics::to_text() const {
    std::string out = "Harvest statistics\n";
    out += row("records with metadata", records_with_metadata);
    out += row("deleted records", deleted_records);
    out += row("unparsable records", parse_errors);
    out += row("already in corpus", duplicates_found);
    out += "Publication types\n";
    for (const auto& [type, n] : per_type)
        out += row(type, n);
    out += "Languages\n";
    for (const auto& [language, n] : per_language)
        out += row(language, n);
    out += "Name status (" + std::to_string(total_authors()) + " authors)\n";
    for (const names::NameStatus status : names::all_name_statuses())
        out += row(std::string(names::to_string(status)), count(status), percent(percentage(status)));
    return out;
}

std::string RunStatistics::to_json() const {
    nlohmann::ordered_json status = nlohmann::ordered_json::object();
    for (const names::NameStatus s : names::all_name_statuses())
        status[std::string(names::to_string(s))] = {{"count", count(s)},
                                                    {"percent", std::round(percentage(s) * 10.0) / 10.0}};
    nlohmann::ordered_json doc = {
        {"records_with_metadata", records_with_metadata},
        {"deleted_records", deleted_records},
        {"parse_errors", parse_errors},
        {"duplicates_found", duplicates_found},
        {"publication_types", per_type},
        {"languages", per_language},
        {"authors", total_authors()},
        {"name_status", status},
    };
    return doc.dump(2) + "\n";
}

RunStatistics record_statistics(std::span<const HarvestEvent> events) {
    RunStatistics stats;
    for (const HarvestEvent& event : events)
        stats.add(event);
    return stats;
}

}  // namespace jpbib::pipeline
