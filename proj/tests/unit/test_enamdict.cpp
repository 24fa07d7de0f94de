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

#include <algorithm>
#include <random>
#include <sstream>

#include "jpbib/enamdict.hpp"
#include "test_support.hpp"

using namespace jpbib::enamdict;

namespace {

NameRecord rec(std::string surface, std::optional<std::string> reading, std::string latin, NameTypes types) {
    return {std::move(surface), std::move(reading), std::move(latin), types};
}

std::vector<std::string> latins(const std::vector<NameRecord>& records) {
    std::vector<std::string> out;
    for (const auto& r : records)
        out.push_back(r.latin);
    return out;
}

}  // namespace

TEST_CASE("plain surname entry") {
    const auto records = parse_entry_line("森田 [もりだ] /Morida (s)/", false);
    REQUIRE(records.size() == 1);
    CHECK(records[0] == rec("森田", "もりだ", "Morida", {NameType::surname}));
}

TEST_CASE("commentary-only unclassified entry is dropped unless requested") {
    CHECK(parse_entry_line("スターウォーズ /(u) Star Wars (film)/", false).empty());
    const auto with_u = parse_entry_line("スターウォーズ /(u) Star Wars (film)/", true);
    REQUIRE(with_u.size() == 1);
    CHECK(with_u[0].types == NameTypes{NameType::unclassified});
    CHECK_FALSE(with_u[0].reading.has_value());
}

TEST_CASE("several senses on one line") {
    const std::string line = "イブ /(f) Eve/(u) Ib/Ibu (f)/(m) Yves/";
    const auto off = parse_entry_line(line, false);
    CHECK(latins(off) == std::vector<std::string>{"Eve", "Ibu", "Yves"});
    CHECK(off[0].types == NameTypes{NameType::female_given});
    CHECK(off[2].types == NameTypes{NameType::male_given});
    const auto on = parse_entry_line(line, true);
    CHECK(latins(on) == std::vector<std::string>{"Eve", "Ib", "Ibu", "Yves"});
}

TEST_CASE("full person names and non-person types are not stored") {
    CHECK(parse_entry_line("中村武志 [なかむらたけし] /Nakamura Takeshi (h)/", true).empty());
    CHECK(parse_entry_line("東京 [とうきょう] /Tokyo (p)/", true).empty());
    CHECK(parse_entry_line("ソニー /Sony (co)/", true).empty());
    CHECK(parse_entry_line("品川 [しながわ] /Shinagawa (st)/", true).empty());
    CHECK(parse_entry_line("ウォークマン /Walkman (pr)/", true).empty());
}

TEST_CASE("type block before or after the Latin text") {
    CHECK(parse_entry_line("真理 [まり] /(f) Mari/", false) == std::vector{rec("真理", "まり", "Mari", {NameType::female_given})});
    CHECK(parse_entry_line("真理 [まり] /Mari (f)/", false) == std::vector{rec("真理", "まり", "Mari", {NameType::female_given})});
}

TEST_CASE("comma separated types keep the person subset") {
    CHECK(filter_types("s") == NameTypes{NameType::surname});
    CHECK(filter_types("f,m") == NameTypes{NameType::female_given, NameType::male_given});
    CHECK(filter_types("film").empty());
    CHECK(filter_types("s,p") == NameTypes{NameType::surname});
    CHECK(filter_types("u,f") == NameTypes{NameType::unclassified, NameType::female_given});
    CHECK(filter_types("pr").empty());
    CHECK(filter_types("").empty());
    const auto both = parse_entry_line("光 [ひかる] /Hikaru (u,f)/", true);
    REQUIRE(both.size() == 1);
    CHECK(both[0].types == NameTypes{NameType::unclassified, NameType::female_given});
    const auto person_only = parse_entry_line("光 [ひかる] /Hikaru (u,f)/", false);
    REQUIRE(person_only.size() == 1);
    CHECK(person_only[0].types == NameTypes{NameType::female_given});
}

TEST_CASE("filter_types rejects any character outside the type alphabet") {
    std::mt19937 rng(7);
    const std::string alphabet = "sugfmphrcot,xyz(1 ";
    std::uniform_int_distribution<std::size_t> len(1, 6);
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    for (int i = 0; i < 2000; ++i) {
        std::string s;
        const std::size_t n = len(rng);
        for (std::size_t k = 0; k < n; ++k)
            s.push_back(alphabet[pick(rng)]);
        if (s.find_first_not_of("sugfmphrcot,") != std::string::npos)
            CHECK_MESSAGE(filter_types(s).empty(), s);
    }
}

TEST_CASE("inconsistent lines are salvaged with warnings") {
    std::vector<ParseWarning> warnings;
    const auto missing_slash = parse_entry_line("甲子太郎 [かしたろう] /Kashitarou (m)", false, &warnings, 4);
    CHECK(missing_slash == std::vector{rec("甲子太郎", "かしたろう", "Kashitarou", {NameType::male_given})});
    REQUIRE(warnings.size() == 1);
    CHECK(warnings[0].kind == ParseWarning::Kind::missing_terminal_slash);
    CHECK(warnings[0].line_number == 4);
    CHECK(warnings[0].raw == "甲子太郎 [かしたろう] /Kashitarou (m)");

    warnings.clear();
    CHECK(parse_entry_line("近松秋江 [ちかまつしゅうこう] /Chikamatsu Shuukou) (h)/", false, &warnings).empty());
    REQUIRE(warnings.size() == 1);
    CHECK(warnings[0].kind == ParseWarning::Kind::stray_bracket);

    warnings.clear();
    CHECK(parse_entry_line("キルギス共和国 [キルギスきょうわこく\\ /(p) Kyrgyz Republic/Kirghiz Republic/", false, &warnings)
              .empty());
    REQUIRE(warnings.size() == 1);
    CHECK(warnings[0].kind == ParseWarning::Kind::stray_bracket);

    warnings.clear();
    const auto repaired = parse_entry_line("ミナ [みな\\ /Mina (f)/", false, &warnings);
    REQUIRE(repaired.size() == 1);
    CHECK(repaired[0].reading == "みな");
}

TEST_CASE("unclosed type block is reported") {
    std::vector<ParseWarning> warnings;
    CHECK(parse_entry_line("ミナ /Mina (f/", false, &warnings).empty());
    REQUIRE_FALSE(warnings.empty());
    CHECK(warnings[0].kind == ParseWarning::Kind::malformed_type_block);
}

TEST_CASE("parse_file on empty input") {
    std::istringstream in("");
    const ParseResult result = parse_file(in, false);
    CHECK(result.records.empty());
    CHECK(result.warnings.empty());
}

TEST_CASE("parse_file drops exact duplicates and a byte order mark") {
    std::istringstream in("\xEF\xBB\xBF森 [もり] /Mori (s)/\n森 [もり] /Mori (s)/\n森 [もり] /Mori (g)/\n");
    const ParseResult result = parse_file(in, false);
    REQUIRE(result.records.size() == 2);
    CHECK(result.records[0].surface == "森");
    CHECK(result.records[1].types == NameTypes{NameType::given});
}

TEST_CASE("fixture records respect the type invariants") {
    for (const bool unclassified : {false, true}) {
        for (const NameRecord& r : jpbib::testing::fixture_names(unclassified)) {
            CHECK_FALSE(r.latin.empty());
            CHECK_FALSE(r.types.empty());
            const NameTypes allowed = unclassified ? kPersonTypes | NameTypes{NameType::unclassified} : kPersonTypes;
            CHECK((r.types & allowed) == r.types);
        }
    }
}

TEST_CASE("sense count bounds the record count") {
    std::ifstream in(jpbib::testing::data_path("enamdict/names.txt"));
    std::string line;
    while (std::getline(in, line)) {
        const std::size_t slashes = static_cast<std::size_t>(std::count(line.begin(), line.end(), '/'));
        const std::size_t senses = slashes == 0 ? 0 : (line.back() == '/' ? slashes - 1 : slashes);
        CHECK(parse_entry_line(line, true).size() <= senses);
    }
}

TEST_CASE("serializing and reparsing is a fixed point") {
    for (const NameRecord& r : jpbib::testing::fixture_names(true)) {
        const auto again = parse_entry_line(to_entry_line(r), true);
        REQUIRE(again.size() == 1);
        CHECK(again[0] == r);
    }
}

TEST_CASE("apostrophe variants") {
    const auto shinichi = apostrophe_variants(rec("進一", "しんいち", "Shin'ichi", {NameType::male_given}));
    REQUIRE(shinichi.size() == 2);
    CHECK(shinichi[0].latin == "Shin'ichi");
    CHECK(shinichi[1].latin == "Shinichi");
    CHECK(shinichi[1].surface == "進一");
    CHECK(latins(apostrophe_variants(rec("森田", "もりだ", "Morida", {NameType::surname}))) ==
          std::vector<std::string>{"Morida"});
    CHECK(latins(apostrophe_variants(rec("純也", "じゅんや", "Jun'ya", {NameType::male_given}))) ==
          std::vector<std::string>{"Jun'ya", "Junya"});
}
