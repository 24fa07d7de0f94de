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

#include "jpbib/utf8.hpp"

#include <cstdint>

namespace jpbib::utf8 {

namespace {

constexpr char32_t kReplacement = 0xFFFD;

// Returns the number of bytes consumed (>= 1).
std::size_t decode_one(std::string_view text, std::size_t pos, char32_t& out) {
    const auto b0 = static_cast<unsigned char>(text[pos]);
    if (b0 < 0x80) {
        out = b0;
        return 1;
    }
    std::size_t len = 0;
    char32_t cp = 0;
    if ((b0 & 0xE0) == 0xC0) {
        len = 2;
        cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
        len = 3;
        cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
        len = 4;
        cp = b0 & 0x07;
    } else {
        out = kReplacement;
        return 1;
    }
    if (pos + len > text.size()) {
        out = kReplacement;
        return 1;
    }
    for (std::size_t i = 1; i < len; ++i) {
        const auto b = static_cast<unsigned char>(text[pos + i]);
        if ((b & 0xC0) != 0x80) {
            out = kReplacement;
            return 1;
        }
        cp = (cp << 6) | (b & 0x3F);
    }
    out = cp;
    return len;
}

}  // namespace

std::u32string decode(std::string_view text) {
    std::u32string out;
    out.reserve(text.size());
    for (std::size_t pos = 0; pos < text.size();) {
        char32_t cp;
        pos += decode_one(text, pos, cp);
        out.push_back(cp);
    }
    return out;
}

void append(std::string& out, char32_t cp) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

std::string encode(std::u32string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char32_t cp : text)
        append(out, cp);
    return out;
}

std::vector<std::string> split_code_points(std::string_view text) {
    std::vector<std::string> out;
    for (std::size_t pos = 0; pos < text.size();) {
        char32_t cp;
        const std::size_t len = decode_one(text, pos, cp);
        out.emplace_back(text.substr(pos, len));
        pos += len;
    }
    return out;
}

bool is_ascii(std::string_view text) noexcept {
    for (char c : text)
        if (static_cast<unsigned char>(c) >= 0x80)
            return false;
    return true;
}

bool is_japanese(char32_t c) noexcept {
    return (c >= 0x3040 && c <= 0x30FF)     // hiragana, katakana
           || (c >= 0x3005 && c <= 0x3007)  // 々 〆 〇
           || (c >= 0x31F0 && c <= 0x31FF)  // katakana phonetic extensions
           || (c >= 0x3400 && c <= 0x4DBF)  // CJK extension A
           || (c >= 0x4E00 && c <= 0x9FFF)  // CJK unified ideographs
           || (c >= 0xF900 && c <= 0xFAFF)  // compatibility ideographs
           || (c >= 0xFF66 && c <= 0xFF9F)  // halfwidth katakana
           || (c >= 0x20000 && c <= 0x2FA1F);
}

bool contains_japanese(std::string_view text) {
    for (char32_t c : decode(text))
        if (is_japanese(c))
            return true;
    return false;
}

bool is_space(char32_t c) noexcept {
    switch (c) {
    case U' ':
    case U'\t':
    case U'\n':
    case U'\r':
    case U'\v':
    case U'\f':
    case 0x00A0:
    case 0x2002:
    case 0x2003:
    case 0x2009:
    case 0x3000:
        return true;
    default:
        return false;
    }
}

std::string ascii_lower(std::string_view text) {
    std::string out(text);
    for (char& c : out)
        if (c >= 'A' && c <= 'Z')
            c = static_cast<char>(c - 'A' + 'a');
    return out;
}

std::string trim(std::string_view text) {
    const std::u32string cps = decode(text);
    std::size_t begin = 0, end = cps.size();
    while (begin < end && is_space(cps[begin]))
        ++begin;
    while (end > begin && is_space(cps[end - 1]))
        --end;
    return encode(std::u32string_view(cps).substr(begin, end - begin));
}

std::string collapse_whitespace(std::string_view text) {
    std::string out;
    bool pending_space = false;
    for (char32_t c : decode(text)) {
        if (is_space(c)) {
            pending_space = !out.empty();
            continue;
        }
        if (pending_space) {
            out.push_back(' ');
            pending_space = false;
        }
        append(out, c);
    }
    return out;
}

std::string remove_whitespace(std::string_view text) {
    std::string out;
    for (char32_t c : decode(text))
        if (!is_space(c))
            append(out, c);
    return out;
}

}  // namespace jpbib::utf8
