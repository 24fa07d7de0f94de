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

// Resolution of Japanese author names: splitting Latin names into given and
// family parts, pairing them with the kanji form through the name
// dictionary, and proposing Latin readings for kanji-only authors.
//
// Latin input is given-name first unless a comma says otherwise
// ("Mori, Shinsuke"). Kanji input is family-name first and carries no
// separator, so every split point is tried against the dictionary.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jpbib/name_dictionary.hpp"
#include "jpbib/transcription.hpp"

namespace jpbib::names {

enum class NameStatus {
    ok,
    undefined_latin_missing,
    abbreviated,
    not_found_in_dictionary,
    no_kanji_matching_found,
    bad_data_quality,
    possible_name_anomaly,
    name_anomaly,
};

inline constexpr std::size_t kNameStatusCount = 8;

/// Label used in BHT status elements and reports, e.g. "no kanji matching found".
std::string_view to_string(NameStatus status) noexcept;
std::optional<NameStatus> parse_name_status(std::string_view label) noexcept;
std::vector<NameStatus> all_name_statuses();

struct PersonName {
    std::string given;
    std::string family;

    /// "Given Family", skipping an empty part; a name anomaly carries the
    /// same text in both parts and is shown once.
    std::string display() const;

    friend bool operator==(const PersonName&, const PersonName&) = default;
};

struct AuthorResolution {
    std::optional<PersonName> latin;
    std::optional<PersonName> kanji;
    std::vector<PersonName> candidates;  // only filled when latin is absent
    NameStatus status = NameStatus::undefined_latin_missing;
};

struct MatchOptions {
    bool use_unclassified = false;
    std::size_t vowel_site_cap = transcription::kDefaultVowelSiteCap;
};

struct LatinSplit {
    PersonName name;
    NameStatus hint = NameStatus::ok;
};

/// Splits a normalized Latin full name into given and family name.
LatinSplit split_latin_full_name(std::string_view raw, const NameDictionary& dict,
                                 const MatchOptions& options = {});

/// True when a name token is a single letter, with or without a period.
bool detect_abbreviated(std::string_view raw);

/// Every spelling a Latin name token is probed under: Hepburn form,
/// separator and m/n variants, h-lengthening removed, vowels doubled.
/// Input first, no duplicates. Throws VariantExplosionError.
std::vector<std::string> latin_lookup_variants(std::string_view name,
                                               std::size_t vowel_site_cap = transcription::kDefaultVowelSiteCap);

/// Finds the split of `kanji` (family first) whose parts are dictionary
/// surfaces with readings matching the Latin parts.
AuthorResolution match_latin_kanji(const PersonName& latin, std::string_view kanji,
                                   const NameDictionary& dict, const MatchOptions& options = {});

/// "Given Family" Latin readings for a kanji name, for every split whose
/// parts are both in the dictionary.
std::vector<PersonName> kanji_name_candidates(std::string_view kanji, const NameDictionary& dict,
                                              const MatchOptions& options = {});

/// Full resolution of one author occurrence from its raw Latin and kanji
/// forms, either of which may be missing.
AuthorResolution resolve_author(const std::optional<std::string>& latin,
                                const std::optional<std::string>& kanji, const NameDictionary& dict,
                                const MatchOptions& options = {});

/// Kanji string with whitespace and name separators removed.
std::string clean_kanji(std::string_view kanji);

}  // namespace jpbib::names
