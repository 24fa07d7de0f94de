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

#include "jpbib/transcription.hpp"

#include <algorithm>
#include <array>
#include <unordered_map>

#include "jpbib/errors.hpp"
#include "jpbib/utf8.hpp"

namespace jpbib::transcription {

namespace {

char lower(char c) noexcept {
    return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

char upper(char c) noexcept {
    return (c >= 'a' && c <= 'z') ? static_cast<char>(c - 'a' + 'A') : c;
}

bool is_vowel(char c) noexcept {
    switch (lower(c)) {
    case 'a':
    case 'i':
    case 'u':
    case 'e':
    case 'o': return true;
    default: return false;
    }
}

bool is_letter(char c) noexcept {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

std::string capitalized(std::string_view s) {
    std::string out(s);
    if (!out.empty())
        out[0] = upper(out[0]);
    return out;
}

// Pairs that already spell a long vowel.
bool is_long_digraph(char first, char second) noexcept {
    first = lower(first);
    second = lower(second);
    if (first == second)
        return is_vowel(first);
    return (first == 'e' && second == 'i') || (first == 'o' && second == 'u');
}

std::vector<std::string> vowel_options(char vowel, bool lengthened) {
    const std::string v(1, vowel);
    const std::string doubled = v + lower(vowel);
    std::vector<std::string> options;
    if (!lengthened)
        options.push_back(v);
    options.push_back(doubled);
    if (lower(vowel) == 'e')
        options.push_back(v + 'i');
    else if (lower(vowel) == 'o')
        options.push_back(v + 'u');
    return options;
}

struct Segment {
    std::vector<std::string> options;  // size 1 for literal text
};

std::vector<Segment> vowel_segments(const NormalizedLatin& base, std::size_t& expandable) {
    const std::string& text = base.text;
    std::vector<Segment> segments;
    expandable = 0;
    for (std::size_t i = 0; i < text.size();) {
        const char c = text[i];
        if (!is_vowel(c)) {
            segments.push_back({{std::string(1, c)}});
            ++i;
            continue;
        }
        if (i + 1 < text.size() && is_long_digraph(c, text[i + 1])) {
            segments.push_back({{text.substr(i, 2)}});
            i += 2;
            continue;
        }
        const bool lengthened =
            std::find(base.lengthened.begin(), base.lengthened.end(), i) != base.lengthened.end();
        segments.push_back({vowel_options(c, lengthened)});
        ++expandable;
        ++i;
    }
    return segments;
}

// Folding table for accented Latin-1 letters without a length meaning.
char fold_latin1(char32_t c) {
    static const std::unordered_map<char32_t, char> table = {
        {0xC0, 'A'}, {0xC1, 'A'}, {0xC3, 'A'}, {0xC4, 'A'}, {0xC5, 'A'}, {0xC7, 'C'},
        {0xC8, 'E'}, {0xC9, 'E'}, {0xCB, 'E'}, {0xCC, 'I'}, {0xCD, 'I'}, {0xCF, 'I'},
        {0xD1, 'N'}, {0xD2, 'O'}, {0xD3, 'O'}, {0xD5, 'O'}, {0xD6, 'O'}, {0xD8, 'O'},
        {0xD9, 'U'}, {0xDA, 'U'}, {0xDC, 'U'}, {0xDD, 'Y'}, {0xE0, 'a'}, {0xE1, 'a'},
        {0xE3, 'a'}, {0xE4, 'a'}, {0xE5, 'a'}, {0xE7, 'c'}, {0xE8, 'e'}, {0xE9, 'e'},
        {0xEB, 'e'}, {0xEC, 'i'}, {0xED, 'i'}, {0xEF, 'i'}, {0xF1, 'n'}, {0xF2, 'o'},
        {0xF3, 'o'}, {0xF5, 'o'}, {0xF6, 'o'}, {0xF8, 'o'}, {0xF9, 'u'}, {0xFA, 'u'},
        {0xFC, 'u'}, {0xFD, 'y'}, {0xFF, 'y'},
    };
    const auto it = table.find(c);
    return it == table.end() ? '\0' : it->second;
}

// Vowels written with a macron or circumflex.
char long_vowel_base(char32_t c) {
    switch (c) {
    case 0x0100: case 0x00C2: return 'A';
    case 0x0101: case 0x00E2: return 'a';
    case 0x0112: case 0x00CA: return 'E';
    case 0x0113: case 0x00EA: return 'e';
    case 0x012A: case 0x00CE: return 'I';
    case 0x012B: case 0x00EE: return 'i';
    case 0x014C: case 0x00D4: return 'O';
    case 0x014D: case 0x00F4: return 'o';
    case 0x016A: case 0x00DB: return 'U';
    case 0x016B: case 0x00FB: return 'u';
    default: return '\0';
    }
}

}  // namespace

const std::vector<HepburnRule>& hepburn_rules() {
    static const std::vector<HepburnRule> rules = {
        {"tu", "tsu"}, {"ti", "chi"}, {"sya", "sha"}, {"syo", "sho"}, {"syu", "shu"},
        {"zya", "ja"}, {"zyo", "jo"}, {"zyu", "ju"},  {"tya", "cha"}, {"tyo", "cho"},
        {"tyu", "chu"}, {"si", "shi"}, {"hu", "fu"},  {"zi", "ji"},   {"jya", "ja"},
        {"jyo", "jo"}, {"jyu", "ju"},  {"l", "r"},
    };
    return rules;
}

std::string to_hepburn(std::string_view name) {
    // Rules sorted longest first; ties keep table order.
    static const std::vector<HepburnRule> by_length = [] {
        std::vector<HepburnRule> rules = hepburn_rules();
        std::stable_sort(rules.begin(), rules.end(),
                         [](const HepburnRule& a, const HepburnRule& b) {
                             return a.from.size() > b.from.size();
                         });
        return rules;
    }();

    std::string out;
    out.reserve(name.size() + 4);
    std::size_t i = 0;
    while (i < name.size()) {
        const char c = lower(name[i]);
        if ((c == 's' || c == 'c') && i + 1 < name.size() && lower(name[i + 1]) == 'h') {
            out.append(name.substr(i, 2));
            i += 2;
            continue;
        }
        bool replaced = false;
        for (const HepburnRule& rule : by_length) {
            const std::string_view window = name.substr(i, rule.from.size());
            if (window == rule.from) {
                out.append(rule.to);
            } else if (window == capitalized(rule.from)) {
                out.append(capitalized(rule.to));
            } else {
                continue;
            }
            i += rule.from.size();
            replaced = true;
            break;
        }
        if (!replaced)
            out.push_back(name[i++]);
    }
    return out;
}

NormalizedLatin normalize_latin(std::string_view raw) {
    struct Marked {
        char c;
        bool lengthened;
    };
    std::vector<Marked> chars;
    for (char32_t cp : utf8::decode(raw)) {
        if (cp >= 0xFF01 && cp <= 0xFF5E)
            cp -= 0xFEE0;
        if (utf8::is_space(cp) || (cp < 0x20) || cp == 0x7F) {
            chars.push_back({' ', false});
            continue;
        }
        if (cp < 0x80) {
            chars.push_back({static_cast<char>(cp), false});
            continue;
        }
        if (const char base = long_vowel_base(cp)) {
            chars.push_back({base, true});
            continue;
        }
        switch (cp) {
        case 0x2018:
        case 0x2019:
        case 0x02BC:
        case 0x00B4:
            chars.push_back({'\'', false});
            continue;
        case 0x2010:
        case 0x2011:
        case 0x2012:
        case 0x2013:
            chars.push_back({'-', false});
            continue;
        default:
            break;
        }
        if (const char folded = fold_latin1(cp))
            chars.push_back({folded, false});
        // Anything else has no Latin reading and is dropped.
    }

    NormalizedLatin out;
    bool pending_space = false;
    for (const Marked& m : chars) {
        if (m.c == ' ') {
            pending_space = !out.text.empty();
            continue;
        }
        if (pending_space) {
            out.text.push_back(' ');
            pending_space = false;
        }
        if (m.lengthened)
            out.lengthened.push_back(out.text.size());
        out.text.push_back(m.c);
    }
    if (out.text.empty())
        throw EmptyNameError("name is empty after normalization: '" + std::string(raw) + "'");
    return out;
}

NormalizedLatin strip_length_h(std::string_view name) {
    NormalizedLatin out;
    out.text.reserve(name.size());
    for (std::size_t i = 0; i < name.size(); ++i) {
        const char c = name[i];
        if (lower(c) == 'h' && i > 0) {
            const char prev = lower(name[i - 1]);
            const bool after_long_vowel = prev == 'o' || prev == 'u';
            const bool word_end = i + 1 == name.size() || !is_letter(name[i + 1]);
            const bool before_consonant = !word_end && !is_vowel(name[i + 1]);
            if (after_long_vowel && (word_end || before_consonant)) {
                out.lengthened.push_back(out.text.size() - 1);
                continue;
            }
        }
        out.text.push_back(c);
    }
    return out;
}

std::vector<std::string> expand_double_vowels(const NormalizedLatin& base, std::size_t site_cap) {
    std::size_t expandable = 0;
    const std::vector<Segment> segments = vowel_segments(base, expandable);
    if (expandable > site_cap)
        throw VariantExplosionError(expandable, site_cap);

    std::vector<std::string> variants{""};
    for (const Segment& segment : segments) {
        if (segment.options.size() == 1) {
            for (std::string& v : variants)
                v += segment.options.front();
            continue;
        }
        std::vector<std::string> next;
        next.reserve(variants.size() * segment.options.size());
        for (const std::string& v : variants)
            for (const std::string& option : segment.options)
                next.push_back(v + option);
        variants = std::move(next);
    }
    return variants;
}

std::string fully_doubled(const NormalizedLatin& base) {
    std::size_t expandable = 0;
    std::string out;
    for (const Segment& segment : vowel_segments(base, expandable)) {
        if (segment.options.size() == 1) {
            out += segment.options.front();
            continue;
        }
        // The doubled spelling is the first option that is two characters long.
        const auto doubled = std::find_if(segment.options.begin(), segment.options.end(),
                                          [](const std::string& o) { return o.size() == 2; });
        out += *doubled;
    }
    return out;
}

std::vector<std::string> consonant_variants(std::string_view name) {
    constexpr std::size_t kMaxSites = 12;
    std::vector<std::size_t> sites;
    for (std::size_t i = 0; i + 1 < name.size() && sites.size() < kMaxSites; ++i) {
        const char c = lower(name[i]);
        const char next = lower(name[i + 1]);
        if ((c == 'm' || c == 'n') && (next == 'b' || next == 'p'))
            sites.push_back(i);
    }
    std::vector<std::string> out;
    const std::size_t combinations = std::size_t{1} << sites.size();
    out.reserve(combinations);
    for (std::size_t mask = 0; mask < combinations; ++mask) {
        std::string variant(name);
        for (std::size_t k = 0; k < sites.size(); ++k) {
            if ((mask & (std::size_t{1} << k)) == 0)
                continue;
            char& c = variant[sites[k]];
            switch (c) {
            case 'm': c = 'n'; break;
            case 'n': c = 'm'; break;
            case 'M': c = 'N'; break;
            case 'N': c = 'M'; break;
            default: break;
            }
        }
        out.push_back(std::move(variant));
    }
    return out;
}

std::vector<std::string> separator_variants(std::string_view name) {
    std::string apostrophes(name);
    std::replace(apostrophes.begin(), apostrophes.end(), '-', '\'');
    std::string hyphens(name);
    std::replace(hyphens.begin(), hyphens.end(), '\'', '-');
    std::string removed(name);
    std::erase_if(removed, [](char c) { return c == '\'' || c == '-'; });

    std::vector<std::string> out{std::string(name)};
    for (std::string& candidate : std::array{apostrophes, removed, hyphens})
        if (std::find(out.begin(), out.end(), candidate) == out.end())
            out.push_back(std::move(candidate));
    return out;
}

}  // namespace jpbib::transcription
