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

#include "jpbib/name_matching.hpp"

#include <algorithm>
#include <array>
#include <regex>
#include <set>
#include <unordered_set>

#include "jpbib/errors.hpp"
#include "jpbib/utf8.hpp"

namespace jpbib::names {

using enamdict::NameRecord;
using enamdict::NameType;
using enamdict::NameTypes;

namespace {

constexpr std::array<std::string_view, kNameStatusCount> kStatusLabels = {
    "ok",
    "undefined",
    "abbreviated",
    "not found in name dictionary",
    "no kanji matching found",
    "bad data quality in source",
    "possible name anomaly",
    "name anomaly",
};

NameTypes family_types(const MatchOptions& options) {
    NameTypes t = enamdict::kFamilyTypes;
    if (options.use_unclassified)
        t.insert(NameType::unclassified);
    return t;
}

NameTypes given_types(const MatchOptions& options) {
    NameTypes t = enamdict::kGivenTypes;
    if (options.use_unclassified)
        t.insert(NameType::unclassified);
    return t;
}

std::string capitalize(std::string_view word) {
    std::string out = utf8::ascii_lower(word);
    if (!out.empty() && out[0] >= 'a' && out[0] <= 'z')
        out[0] = static_cast<char>(out[0] - 'a' + 'A');
    return out;
}

std::vector<std::string> split_words(std::string_view text) {
    std::vector<std::string> out;
    std::string current;
    for (char c : text) {
        if (c == ' ') {
            if (!current.empty())
                out.push_back(std::move(current));
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    if (!current.empty())
        out.push_back(std::move(current));
    return out;
}

std::string join(const std::vector<std::string>& words, std::size_t begin, std::size_t end) {
    std::string out;
    for (std::size_t i = begin; i < end; ++i) {
        if (!out.empty())
            out.push_back(' ');
        out += words[i];
    }
    return out;
}

bool is_initial(std::string_view token) {
    if (token.empty() || token.size() > 2)
        return false;
    const char c = token[0];
    const bool letter = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
    return letter && (token.size() == 1 || token[1] == '.');
}

// "T.", "E. F." -> every token is an initial.
bool is_initials(std::string_view part) {
    std::string spaced;
    for (char c : part) {
        spaced.push_back(c);
        if (c == '.')
            spaced.push_back(' ');
    }
    const auto words = split_words(spaced);
    return !words.empty() &&
           std::all_of(words.begin(), words.end(), [](const std::string& w) { return is_initial(w); });
}

// Spellings a token is looked up under, lowercased. Tokens with too many
// vowels fall back to the unmodified and fully doubled spellings.
std::unordered_set<std::string> probe_set(std::string_view token, const MatchOptions& options) {
    std::unordered_set<std::string> out;
    if (token.empty())
        return out;
    try {
        for (const std::string& v : latin_lookup_variants(token, options.vowel_site_cap))
            out.insert(utf8::ascii_lower(v));
    } catch (const VariantExplosionError&) {
        out.insert(utf8::ascii_lower(token));
        for (const std::string& sep : transcription::separator_variants(transcription::to_hepburn(token))) {
            for (const std::string& cons : transcription::consonant_variants(sep)) {
                const auto stripped = transcription::strip_length_h(cons);
                out.insert(utf8::ascii_lower(stripped.text));
                out.insert(utf8::ascii_lower(transcription::fully_doubled(stripped)));
            }
        }
    }
    return out;
}

bool latin_has_type(std::string_view token, NameTypes wanted, const NameDictionary& dict,
                    const MatchOptions& options) {
    for (const std::string& spelling : probe_set(token, options))
        for (const NameRecord* record : dict.by_latin(spelling))
            if (record->types.intersects(wanted))
                return true;
    return false;
}

// How a Latin name part is compared with dictionary readings.
class PartMatcher {
public:
    PartMatcher(std::string_view part, const MatchOptions& options)
        : initial_(is_initials(part)) {
        if (initial_)
            letter_ = utf8::ascii_lower(part.substr(0, 1));
        else
            spellings_ = probe_set(part, options);
    }

    bool initial() const noexcept { return initial_; }

    bool accepts(const NameRecord& record) const {
        const std::string latin = utf8::ascii_lower(record.latin);
        if (initial_)
            return latin.starts_with(letter_);
        return spellings_.contains(latin);
    }

private:
    bool initial_;
    std::string letter_;
    std::unordered_set<std::string> spellings_;
};

bool surface_matches(const std::string& surface, NameTypes wanted, const PartMatcher& matcher,
                     const NameDictionary& dict) {
    for (const NameRecord* record : dict.by_surface(surface))
        if (record->types.intersects(wanted) && matcher.accepts(*record))
            return true;
    return false;
}

struct KanjiSplit {
    std::string family;
    std::string given;
};

std::vector<KanjiSplit> split_points(std::string_view kanji) {
    const auto cps = utf8::split_code_points(kanji);
    std::vector<KanjiSplit> out;
    for (std::size_t i = 1; i < cps.size(); ++i) {
        KanjiSplit split;
        for (std::size_t k = 0; k < cps.size(); ++k)
            (k < i ? split.family : split.given) += cps[k];
        out.push_back(std::move(split));
    }
    return out;
}

std::vector<std::string> readings(const std::string& surface, NameTypes wanted, const NameDictionary& dict) {
    std::vector<std::string> out;
    for (const NameRecord* record : dict.by_surface(surface))
        if (record->types.intersects(wanted) &&
            std::find(out.begin(), out.end(), record->latin) == out.end())
            out.push_back(record->latin);
    return out;
}

std::optional<KanjiSplit> first_candidate_split(std::string_view kanji, const NameDictionary& dict,
                                                const MatchOptions& options) {
    for (KanjiSplit& split : split_points(kanji))
        if (!readings(split.family, family_types(options), dict).empty() &&
            !readings(split.given, given_types(options), dict).empty())
            return std::move(split);
    return std::nullopt;
}

PersonName unsplit(std::string_view kanji) {
    return {"", std::string(kanji)};
}

NameStatus dictionary_hint(const PersonName& name, const NameDictionary& dict, const MatchOptions& options) {
    const bool family = latin_has_type(name.family, family_types(options), dict, options);
    const bool given = latin_has_type(name.given, given_types(options), dict, options);
    return family && given ? NameStatus::ok : NameStatus::not_found_in_dictionary;
}

// Two tokens in unknown order: the dictionary decides, given-first otherwise.
LatinSplit categorize_pair(const std::string& first, const std::string& second, const NameDictionary& dict,
                           const MatchOptions& options) {
    const NameTypes fam = family_types(options);
    const NameTypes giv = given_types(options);
    const int given_first = int(latin_has_type(first, giv, dict, options)) +
                            int(latin_has_type(second, fam, dict, options));
    const int family_first = int(latin_has_type(first, fam, dict, options)) +
                             int(latin_has_type(second, giv, dict, options));
    LatinSplit split;
    if (family_first > given_first) {
        split.name = {second, first};
        split.hint = family_first == 2 ? NameStatus::ok : NameStatus::not_found_in_dictionary;
    } else {
        split.name = {first, second};
        split.hint = given_first == 2 ? NameStatus::ok : NameStatus::not_found_in_dictionary;
    }
    return split;
}

}  // namespace

std::string_view to_string(NameStatus status) noexcept {
    return kStatusLabels[static_cast<std::size_t>(status)];
}

std::optional<NameStatus> parse_name_status(std::string_view label) noexcept {
    for (std::size_t i = 0; i < kStatusLabels.size(); ++i)
        if (kStatusLabels[i] == label)
            return static_cast<NameStatus>(i);
    return std::nullopt;
}

std::vector<NameStatus> all_name_statuses() {
    std::vector<NameStatus> out;
    for (std::size_t i = 0; i < kNameStatusCount; ++i)
        out.push_back(static_cast<NameStatus>(i));
    return out;
}

std::string PersonName::display() const {
    if (given == family)
        return given;
    if (given.empty())
        return family;
    if (family.empty())
        return given;
    return given + " " + family;
}

std::string clean_kanji(std::string_view kanji) {
    std::string out;
    for (char32_t c : utf8::decode(kanji)) {
        if (utf8::is_space(c) || c == U',' || c == 0xFF0C || c == 0x3001 || c == 0x30FB)
            continue;
        utf8::append(out, c);
    }
    return out;
}

bool detect_abbreviated(std::string_view raw) {
    std::string spaced;
    for (char c : raw) {
        if (c == ',') {
            spaced.push_back(' ');
            continue;
        }
        spaced.push_back(c);
        if (c == '.')
            spaced.push_back(' ');
    }
    const auto words = split_words(spaced);
    return std::any_of(words.begin(), words.end(), [](const std::string& w) { return is_initial(w); });
}

LatinSplit split_latin_full_name(std::string_view raw, const NameDictionary& dict, const MatchOptions& options) {
    static const std::regex kGivenThenUpperFamily("[A-Z][a-z]{1,}[A-Z]{3,}");
    static const std::regex kUpperOnly("[A-Z]{3,}");
    static const std::regex kCamelPair("([A-Z][a-z]+)([A-Z][a-z]+)");

    const std::string text = transcription::normalize_latin(raw).text;

    if (const std::size_t comma = text.find(','); comma != std::string::npos) {
        PersonName name{utf8::trim(text.substr(comma + 1)), utf8::trim(text.substr(0, comma))};
        if (name.given.empty() && name.family.empty())
            return {{text, text}, NameStatus::name_anomaly};
        return {name, dictionary_hint(name, dict, options)};
    }

    const auto words = split_words(text);
    if (words.size() == 2)
        return categorize_pair(words[0], words[1], dict, options);
    if (words.size() > 2) {
        PersonName name{join(words, 0, words.size() - 1), words.back()};
        const bool family = latin_has_type(name.family, family_types(options), dict, options);
        const bool given = latin_has_type(words.front(), given_types(options), dict, options);
        return {name, family && given ? NameStatus::ok : NameStatus::not_found_in_dictionary};
    }

    const std::string& token = words.front();
    if (std::regex_match(token, kGivenThenUpperFamily)) {
        // "NobukazuYOSHIOKA": the uppercase run is the family name.
        const auto upper_run = std::find_if(token.begin() + 1, token.end(),
                                            [](char c) { return c >= 'A' && c <= 'Z'; });
        const auto split_at = static_cast<std::size_t>(upper_run - token.begin());
        return {{token.substr(0, split_at), capitalize(token.substr(split_at))}, NameStatus::bad_data_quality};
    }
    if (std::regex_match(token, kUpperOnly))
        return {{"", capitalize(token)}, NameStatus::possible_name_anomaly};
    if (std::smatch m; std::regex_match(token, m, kCamelPair)) {
        LatinSplit split = categorize_pair(m[1].str(), m[2].str(), dict, options);
        split.hint = NameStatus::bad_data_quality;
        return split;
    }
    if (latin_has_type(token, family_types(options), dict, options))
        return {{"", token}, NameStatus::possible_name_anomaly};
    if (latin_has_type(token, given_types(options), dict, options))
        return {{token, ""}, NameStatus::possible_name_anomaly};
    return {{token, token}, NameStatus::name_anomaly};
}

std::vector<std::string> latin_lookup_variants(std::string_view name, std::size_t vowel_site_cap) {
    std::vector<std::string> out{std::string(name)};
    std::unordered_set<std::string> seen{std::string(name)};
    const auto add = [&](std::string v) {
        if (seen.insert(v).second)
            out.push_back(std::move(v));
    };

    // Length marks are recorded on the final spelling, so h-stripping runs
    // after the separator and m/n rewrites that change positions.
    const std::string hepburn = transcription::to_hepburn(name);
    add(hepburn);
    for (const std::string& sep : transcription::separator_variants(hepburn)) {
        for (const std::string& cons : transcription::consonant_variants(sep)) {
            add(cons);
            const transcription::NormalizedLatin stripped = transcription::strip_length_h(cons);
            for (std::string& v : transcription::expand_double_vowels(stripped, vowel_site_cap))
                add(std::move(v));
        }
    }
    return out;
}

AuthorResolution match_latin_kanji(const PersonName& latin, std::string_view kanji_raw,
                                   const NameDictionary& dict, const MatchOptions& options) {
    AuthorResolution result;
    result.latin = latin;
    const std::string kanji = clean_kanji(kanji_raw);
    if (kanji.empty()) {
        result.status = is_initials(latin.given) || is_initials(latin.family)
                            ? NameStatus::abbreviated
                            : dictionary_hint(latin, dict, options);
        return result;
    }

    const PartMatcher family(latin.family, options);
    const PartMatcher given(latin.given, options);
    const NameTypes fam = family_types(options);
    const NameTypes giv = given_types(options);

    std::vector<KanjiSplit> accepted;
    for (KanjiSplit& split : split_points(kanji))
        if (surface_matches(split.family, fam, family, dict) && surface_matches(split.given, giv, given, dict))
            accepted.push_back(std::move(split));

    if (family.initial() || given.initial()) {
        if (accepted.size() == 1) {
            result.kanji = PersonName{accepted.front().given, accepted.front().family};
            result.status = NameStatus::possible_name_anomaly;
        } else {
            result.kanji = unsplit(kanji);
            result.status = NameStatus::abbreviated;
        }
        return result;
    }
    if (accepted.empty()) {
        result.kanji = unsplit(kanji);
        result.status = NameStatus::no_kanji_matching_found;
        return result;
    }
    result.kanji = PersonName{accepted.front().given, accepted.front().family};
    result.status = NameStatus::ok;
    return result;
}

std::vector<PersonName> kanji_name_candidates(std::string_view kanji_raw, const NameDictionary& dict,
                                              const MatchOptions& options) {
    const std::string kanji = clean_kanji(kanji_raw);
    std::vector<PersonName> out;
    std::set<std::pair<std::string, std::string>> seen;
    for (const KanjiSplit& split : split_points(kanji)) {
        const auto family_readings = readings(split.family, family_types(options), dict);
        const auto given_readings = readings(split.given, given_types(options), dict);
        for (const std::string& family : family_readings)
            for (const std::string& given : given_readings)
                if (seen.emplace(given, family).second)
                    out.push_back({given, family});
    }
    return out;
}

AuthorResolution resolve_author(const std::optional<std::string>& latin_raw,
                                const std::optional<std::string>& kanji_raw, const NameDictionary& dict,
                                const MatchOptions& options) {
    const std::string kanji = kanji_raw ? clean_kanji(*kanji_raw) : std::string();

    std::optional<std::string> latin_text;
    if (latin_raw) {
        try {
            latin_text = transcription::normalize_latin(*latin_raw).text;
        } catch (const EmptyNameError&) {
        }
    }

    if (!latin_text) {
        AuthorResolution result;
        result.status = NameStatus::undefined_latin_missing;
        if (!kanji.empty()) {
            result.candidates = kanji_name_candidates(kanji, dict, options);
            if (auto split = first_candidate_split(kanji, dict, options))
                result.kanji = PersonName{split->given, split->family};
            else
                result.kanji = unsplit(kanji);
        }
        return result;
    }

    const LatinSplit split = split_latin_full_name(*latin_text, dict, options);
    if (split.hint == NameStatus::name_anomaly) {
        AuthorResolution result;
        result.latin = split.name;
        if (!kanji.empty())
            result.kanji = unsplit(kanji);
        result.status = NameStatus::name_anomaly;
        return result;
    }

    AuthorResolution result;
    if (!kanji.empty()) {
        result = match_latin_kanji(split.name, kanji, dict, options);
    } else {
        result.latin = split.name;
        result.status = detect_abbreviated(*latin_text) ? NameStatus::abbreviated : split.hint;
    }

    // Source-quality verdicts from the split override the dictionary outcome.
    const bool plain_outcome = result.status == NameStatus::ok ||
                               result.status == NameStatus::not_found_in_dictionary ||
                               result.status == NameStatus::no_kanji_matching_found;
    if (plain_outcome &&
        (split.hint == NameStatus::bad_data_quality || split.hint == NameStatus::possible_name_anomaly))
        result.status = split.hint;
    return result;
}

}  // namespace jpbib::names
