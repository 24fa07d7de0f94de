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

#include "jpbib/errors.hpp"
#include "jpbib/junii2.hpp"
#include "test_support.hpp"

using namespace jpbib::oai;
using jpbib::testing::data_path;
using jpbib::testing::read_file;

TEST_CASE("fixture record maps every field") {
    const HarvestedPublication pub =
        parse_junii2(read_file(data_path("junii2/mori_neubig_tsuboi.xml")), "oai:ipsj.ixsq.nii.ac.jp:00078161");
    CHECK(pub.identifier == "oai:ipsj.ixsq.nii.ac.jp:00078161");
    REQUIRE(pub.titles.size() == 2);
    CHECK(pub.titles[0] == Title{"点予測による自動単語分割", Language::ja});
    CHECK(pub.titles[1] == Title{"A Pointwise Approach to Automatic Word Segmentation", Language::en});
    CHECK(pub.title_in(Language::en) == &pub.titles[1]);
    CHECK(pub.title_in(Language::other) == nullptr);
    const std::vector<Creator> creators = {
        {"Shinsuke Mori", "森, 信介"}, {"Graham Neubig", "ニュービッグ, グラム"}, {"Yuuta Tsuboi", "坪井, 祐太"}};
    CHECK(pub.creators == creators);
    CHECK(pub.publication_type == "Journal Article");
    CHECK(pub.journal == "情報処理学会論文誌");
    CHECK(pub.volume == "52");
    CHECK(pub.number == "10");
    CHECK(pub.pages == "2944-2952");
    CHECK(pub.date == "2011-10-15");
    CHECK(pub.language == Language::ja);
    CHECK(pub.source_url == "http://id.nii.ac.jp/1001/00078161/");
    CHECK(pub.contributors.empty());
    CHECK(pub.descriptions.empty());
}

TEST_CASE("creators without a partner") {
    const HarvestedPublication pub = parse_junii2(
        "<junii2><title>T</title><creator>菅谷 正弘</creator><creator>後藤 仁</creator>"
        "<creator>Hitoshi Gotoh</creator><creator>Kai Ohta</creator><creator>戸田 健二</creator></junii2>");
    const std::vector<Creator> expected = {
        {std::nullopt, "菅谷 正弘"}, {"Hitoshi Gotoh", "後藤 仁"}, {"Kai Ohta", std::nullopt}, {std::nullopt, "戸田 健二"}};
    CHECK(pub.creators == expected);
}

TEST_CASE("language fallbacks and optional fields") {
    const HarvestedPublication en = parse_junii2(
        "<junii2><title>Only English</title><spage>5</spage><date>2010</date><fulltextURL>u</fulltextURL>"
        "<description> a  b </description><contributor>C</contributor></junii2>");
    CHECK(en.language == Language::en);
    CHECK(en.titles[0].language == Language::en);
    CHECK(en.pages == "5");
    CHECK(en.date == "2010");
    CHECK(en.source_url == "u");
    CHECK(en.descriptions == std::vector<std::string>{"a b"});
    CHECK(en.contributors == std::vector<std::string>{"C"});
    CHECK_FALSE(en.volume.has_value());
    CHECK(en.publication_type.empty());

    const HarvestedPublication ja = parse_junii2("<junii2><title>日本語</title></junii2>");
    CHECK(ja.language == Language::ja);
}

TEST_CASE("language tags") {
    CHECK(parse_language("jpn") == Language::ja);
    CHECK(parse_language(" JA ") == Language::ja);
    CHECK(parse_language("eng") == Language::en);
    CHECK(parse_language("fre") == Language::other);
    CHECK(to_string(Language::ja) == "ja");
    for (Language l : {Language::ja, Language::en, Language::other})
        CHECK(parse_language(to_string(l)) == l);
}

TEST_CASE("malformed records") {
    CHECK_THROWS_AS(parse_junii2("<junii2><creator>A</creator></junii2>"), MalformedRecordError);
    CHECK_THROWS_AS(parse_junii2("<junii2><title>  </title></junii2>"), MalformedRecordError);
    CHECK_THROWS_AS(parse_junii2("<junii2><title>x</junii2>"), jpbib::XmlParseError);
}
