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

// Reader for ENAMDICT-format proper-name dictionaries.
//
// One entry per line:
//
//     KANJI [KANA] /LATIN (TYPE)/LATIN (TYPE)/
//
// The reading is missing for kana-only surfaces, a type block may sit before
// or after the Latin text, a block may hold several comma separated codes and
// round brackets may also carry free commentary ("(film)"). Only person-name
// types survive: s, g, f, m and, on request, u.
//
// Input must already be UTF-8; the distributed file is EUC-JP and has to be
// converted first (iconv -f EUC-JP -t UTF-8).

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace jpbib::enamdict {

enum class NameType : std::uint8_t {
    surname,       // s
    given,         // g
    female_given,  // f
    male_given,    // m
    unclassified,  // u
};

char code_of(NameType type) noexcept;

/// Small set of NameType values.
class NameTypes {
public:
    constexpr NameTypes() = default;
    constexpr NameTypes(std::initializer_list<NameType> types) {
        for (NameType t : types)
            insert(t);
    }

    constexpr void insert(NameType t) noexcept { bits_ |= bit(t); }
    constexpr void erase(NameType t) noexcept { bits_ &= static_cast<std::uint8_t>(~bit(t)); }
    constexpr bool contains(NameType t) const noexcept { return (bits_ & bit(t)) != 0; }
    constexpr bool empty() const noexcept { return bits_ == 0; }
    std::size_t size() const noexcept;

    constexpr NameTypes operator|(NameTypes o) const noexcept { return from_bits(bits_ | o.bits_); }
    constexpr NameTypes operator&(NameTypes o) const noexcept { return from_bits(bits_ & o.bits_); }
    constexpr NameTypes& operator|=(NameTypes o) noexcept {
        bits_ |= o.bits_;
        return *this;
    }
    constexpr bool intersects(NameTypes o) const noexcept { return (bits_ & o.bits_) != 0; }

    constexpr std::uint8_t bits() const noexcept { return bits_; }
    static constexpr NameTypes from_bits(unsigned bits) noexcept {
        NameTypes t;
        t.bits_ = static_cast<std::uint8_t>(bits & 0x1F);
        return t;
    }

    /// Codes in s,g,f,m,u order joined by commas, e.g. "f,m".
    std::string to_string() const;

    friend constexpr bool operator==(NameTypes, NameTypes) = default;

private:
    static constexpr std::uint8_t bit(NameType t) noexcept {
        return static_cast<std::uint8_t>(1u << static_cast<unsigned>(t));
    }
    std::uint8_t bits_ = 0;
};

inline constexpr NameTypes kFamilyTypes{NameType::surname};
inline constexpr NameTypes kGivenTypes{NameType::given, NameType::female_given, NameType::male_given};
inline constexpr NameTypes kPersonTypes = kFamilyTypes | kGivenTypes;

struct NameRecord {
    std::string surface;
    std::optional<std::string> reading;
    std::string latin;
    NameTypes types;

    friend bool operator==(const NameRecord&, const NameRecord&) = default;
};

struct ParseWarning {
    enum class Kind { missing_terminal_slash, stray_bracket, malformed_type_block };

    std::size_t line_number = 0;
    Kind kind = Kind::malformed_type_block;
    std::string raw;
};

std::string_view to_string(ParseWarning::Kind kind) noexcept;

struct ParseResult {
    std::vector<NameRecord> records;
    std::vector<ParseWarning> warnings;
};

/// Person-name types of one round-bracket block. Anything that is not a
/// comma separated sequence of valid ENAMDICT codes is commentary and yields
/// the empty set.
NameTypes filter_types(std::string_view raw);

/// All records of one dictionary line, one per sense that keeps at least one
/// wanted type. Problems are appended to `warnings` when given.
std::vector<NameRecord> parse_entry_line(std::string_view line, bool include_unclassified,
                                         std::vector<ParseWarning>* warnings = nullptr,
                                         std::size_t line_number = 0);

/// Parses a whole dictionary. Records identical in surface, latin and types
/// are kept once, first occurrence wins. Throws IoError if the stream fails.
ParseResult parse_file(std::istream& input, bool include_unclassified);

/// The record itself and, when its Latin form has apostrophes, a copy
/// without them ("Shin'ichi" -> "Shinichi").
std::vector<NameRecord> apostrophe_variants(const NameRecord& record);

/// Single-sense dictionary line for `record`; parse_entry_line reads it back
/// unchanged.
std::string to_entry_line(const NameRecord& record);

}  // namespace jpbib::enamdict
