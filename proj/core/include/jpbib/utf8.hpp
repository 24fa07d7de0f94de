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

// Minimal UTF-8 helpers shared by the parsers. Invalid sequences decode to
// U+FFFD one byte at a time; nothing here throws.

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace jpbib::utf8 {

std::u32string decode(std::string_view text);
std::string encode(std::u32string_view text);
void append(std::string& out, char32_t code_point);

/// Code points, each as its own UTF-8 string.
std::vector<std::string> split_code_points(std::string_view text);

bool is_ascii(std::string_view text) noexcept;

/// Hiragana, katakana, CJK ideographs or iteration marks.
bool is_japanese(char32_t c) noexcept;
bool contains_japanese(std::string_view text);

/// Unicode White_Space subset that occurs in bibliographic data.
bool is_space(char32_t c) noexcept;

/// ASCII-only case mapping; other bytes pass through.
std::string ascii_lower(std::string_view text);

std::string trim(std::string_view text);

/// Trim and collapse internal whitespace runs to a single ASCII space.
std::string collapse_whitespace(std::string_view text);

/// Remove every whitespace code point, including U+3000.
std::string remove_whitespace(std::string_view text);

}  // namespace jpbib::utf8
