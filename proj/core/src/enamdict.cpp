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

#include "jpbib/enamdict.hpp"

#include <bit>
#include <istream>
#include <set>
#include <tuple>

#include "jpbib/errors.hpp"
#include "jpbib/utf8.hpp"

namespace jpbib::enamdict {

namespace {

// Result of scanning one bracket block against the code alphabet.
struct TypeBlock {
    bool valid = false;  // the block is a type declaration, not commentary
    NameTypes persons;   // s/g/f/m/u subset; p, h, pr, co, st are dropped
};

TypeBlock scan_type_block(std::string_view raw) {
    TypeBlock block;
    std::size_t pos = 0;
    bool any_code = false;
    while (pos < raw.size()) {
        const char c = raw[pos];
        if (c == ',') {
            ++pos;
            continue;
        }
        const std::string_view two = raw.substr(pos, 2);
        if (two == "pr" || two == "co" || two == "st") {
            pos += 2;
            any_code = true;
            continue;
        }
        switch (c) {
        case 's': block.persons.insert(NameType::surname); break;
        case 'g': block.persons.insert(NameType::given); break;
        case 'f': block.persons.insert(NameType::female_given); break;
        case 'm': block.persons.insert(NameType::male_given); break;
        case 'u': block.persons.insert(NameType::unclassified); break;
        case 'p':
        case 'h': break;
        default: return {};
        }
        any_code = true;
        ++pos;
    }
    block.valid = any_code;
    if (!any_code)
        block.persons = {};
    return block;
}

struct LineContext {
    std::string_view line;
    std::size_t line_number;
    bool include_unclassified;
    std::vector<ParseWarning>* warnings;
    std::string surface;
    std::optional<std::string> reading;
    bool warned_stray = false;
    bool warned_malformed = false;

    void warn(ParseWarning::Kind kind) {
        if (warnings == nullptr)
            return;
        bool& flag = kind == ParseWarning::Kind::stray_bracket ? warned_stray : warned_malformed;
        if (kind != ParseWarning::Kind::missing_terminal_slash) {
            if (flag)
                return;
            flag = true;
        }
        warnings->push_back({line_number, kind, std::string(line)});
    }
};

// One sense: "(f) Eve", "Ibu (f)", "(u) Star Wars (film)".
void parse_sense(std::string_view sense, TypeBlock& inherited, LineContext& ctx,
                 std::vector<NameRecord>& out) {
    std::string latin;
    TypeBlock own;
    for (std::size_t pos = 0; pos < sense.size();) {
        const char c = sense[pos];
        if (c == '(') {
            const std::size_t close = sense.find(')', pos + 1);
            if (close == std::string_view::npos) {
                ctx.warn(ParseWarning::Kind::malformed_type_block);
                return;
            }
            const std::string_view inner = sense.substr(pos + 1, close - pos - 1);
            pos = close + 1;
            const TypeBlock block = scan_type_block(utf8::trim(inner));
            if (block.valid) {
                own.valid = true;
                own.persons |= block.persons;
            }
            latin.push_back(' ');
            continue;
        }
        if (c == ')') {
            ctx.warn(ParseWarning::Kind::stray_bracket);
            ++pos;
            continue;
        }
        latin.push_back(c);
        ++pos;
    }

    // A sense without its own type block shares the previous sense's types,
    // as in "/(p) Kyrgyz Republic/Kirghiz Republic/".
    if (own.valid)
        inherited = own;
    else
        own = inherited;

    latin = utf8::collapse_whitespace(latin);
    if (latin.empty())
        return;
    if (!own.valid) {
        ctx.warn(ParseWarning::Kind::malformed_type_block);
        return;
    }
    NameTypes wanted = own.persons & kPersonTypes;
    if (ctx.include_unclassified && own.persons.contains(NameType::unclassified))
        wanted.insert(NameType::unclassified);
    if (wanted.empty())
        return;
    out.push_back({ctx.surface, ctx.reading, std::move(latin), wanted});
}

// Peels the first slash-delimited sense off `body` and recurses on the rest.
void parse_senses(std::string_view body, TypeBlock& inherited, LineContext& ctx,
                  std::vector<NameRecord>& out) {
    if (body.empty())
        return;
    const std::size_t slash = body.find('/');
    parse_sense(body.substr(0, slash), inherited, ctx, out);
    if (slash != std::string_view::npos)
        parse_senses(body.substr(slash + 1), inherited, ctx, out);
}

void parse_head(std::string_view head, LineContext& ctx) {
    const std::size_t open = head.find('[');
    if (open == std::string_view::npos) {
        if (head.find(']') != std::string_view::npos)
            ctx.warn(ParseWarning::Kind::stray_bracket);
        std::string surface(head);
        std::erase(surface, ']');
        ctx.surface = utf8::trim(surface);
        return;
    }
    ctx.surface = utf8::trim(head.substr(0, open));
    std::string_view rest = head.substr(open + 1);
    std::size_t close = rest.find(']');
    if (close == std::string_view::npos) {
        // The bracket was mistyped, most often as a backslash.
        ctx.warn(ParseWarning::Kind::stray_bracket);
        close = rest.find('\\');
    }
    std::string reading = utf8::trim(rest.substr(0, close));
    if (!reading.empty())
        ctx.reading = std::move(reading);
}

}  // namespace

char code_of(NameType type) noexcept {
    switch (type) {
    case NameType::surname: return 's';
    case NameType::given: return 'g';
    case NameType::female_given: return 'f';
    case NameType::male_given: return 'm';
    case NameType::unclassified: return 'u';
    }
    return '?';
}

std::size_t NameTypes::size() const noexcept {
    return static_cast<std::size_t>(std::popcount(bits_));
}

std::string NameTypes::to_string() const {
    std::string out;
    for (NameType t : {NameType::surname, NameType::given, NameType::female_given,
                       NameType::male_given, NameType::unclassified}) {
        if (!contains(t))
            continue;
        if (!out.empty())
            out.push_back(',');
        out.push_back(code_of(t));
    }
    return out;
}

std::string_view to_string(ParseWarning::Kind kind) noexcept {
    switch (kind) {
    case ParseWarning::Kind::missing_terminal_slash: return "missing-terminal-slash";
    case ParseWarning::Kind::stray_bracket: return "stray-bracket";
    case ParseWarning::Kind::malformed_type_block: return "malformed-type-block";
    }
    return "unknown";
}

NameTypes filter_types(std::string_view raw) {
    return scan_type_block(raw).persons;
}

std::vector<NameRecord> parse_entry_line(std::string_view line, bool include_unclassified,
                                         std::vector<ParseWarning>* warnings,
                                         std::size_t line_number) {
    std::vector<NameRecord> out;
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n'))
        line.remove_suffix(1);
    if (utf8::trim(line).empty())
        return out;

    LineContext ctx{line, line_number, include_unclassified, warnings, {}, std::nullopt};
    const std::size_t slash = line.find('/');
    if (slash == std::string_view::npos) {
        ctx.warn(ParseWarning::Kind::missing_terminal_slash);
        return out;
    }
    parse_head(line.substr(0, slash), ctx);
    if (ctx.surface.empty())
        return out;

    std::string_view body = line.substr(slash + 1);
    const std::string trimmed = utf8::trim(body);
    if (trimmed.empty() || trimmed.back() != '/')
        ctx.warn(ParseWarning::Kind::missing_terminal_slash);

    TypeBlock inherited;
    parse_senses(trimmed, inherited, ctx, out);
    return out;
}

ParseResult parse_file(std::istream& input, bool include_unclassified) {
    ParseResult result;
    std::set<std::tuple<std::string, std::string, std::uint8_t>> seen;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(input, line)) {
        ++line_number;
        if (line_number == 1 && line.starts_with("\xEF\xBB\xBF"))
            line.erase(0, 3);
        for (NameRecord& record :
             parse_entry_line(line, include_unclassified, &result.warnings, line_number)) {
            if (seen.emplace(record.surface, record.latin, record.types.bits()).second)
                result.records.push_back(std::move(record));
        }
    }
    if (input.bad())
        throw IoError("failed to read dictionary stream after line " + std::to_string(line_number));
    return result;
}

std::vector<NameRecord> apostrophe_variants(const NameRecord& record) {
    std::vector<NameRecord> out{record};
    if (record.latin.find('\'') != std::string::npos) {
        NameRecord stripped = record;
        std::erase(stripped.latin, '\'');
        out.push_back(std::move(stripped));
    }
    return out;
}

std::string to_entry_line(const NameRecord& record) {
    std::string line = record.surface;
    if (record.reading)
        line += " [" + *record.reading + "]";
    line += " /" + record.latin + " (" + record.types.to_string() + ")/";
    return line;
}

}  // namespace jpbib::enamdict
