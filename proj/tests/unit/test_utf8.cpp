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


#include <doctest.h>

#include "jpbib/utf8.hpp"

using namespace jpbib::utf8;

TEST_CASE("decode and encode round trip mixed scripts") {
    const std::string text = "Mori 森信介 ニュービッグ é";
    CHECK(encode(decode(text)) == text);
    CHECK(decode("森").size() == 1);
    CHECK(decode("森")[0] == U'森');
}

TEST_CASE("split_code_points keeps multibyte characters whole") {
    const auto parts = split_code_points("a森b");
    REQUIRE(parts.size() == 3);
    CHECK(parts[1] == "森");
}

TEST_CASE("script detection") {
    CHECK(contains_japanese("点予測"));
    CHECK(contains_japanese("ニュービッグ"));
    CHECK(contains_japanese("ひらがな"));
    CHECK_FALSE(contains_japanese("Graham Neubig"));
    CHECK(is_ascii("abc"));
    CHECK_FALSE(is_ascii("abç"));
}

TEST_CASE("whitespace helpers include the ideographic space") {
    CHECK(trim("　 Mori \t") == "Mori");
    CHECK(collapse_whitespace("  Shinsuke 　  Mori ") == "Shinsuke Mori");
    CHECK(remove_whitespace("森 信介　") == "森信介");
    CHECK(ascii_lower("NeuBIG") == "neubig");
}
