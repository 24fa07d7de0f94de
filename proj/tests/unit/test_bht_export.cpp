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

#include <filesystem>
#include <random>

#include "jpbib/bht_export.hpp"
#include "jpbib/errors.hpp"
#include "jpbib/utf8.hpp"
#include "test_support.hpp"

using namespace jpbib::bht;
using namespace jpbib::testing;
using jpbib::names::AuthorResolution;
using jpbib::names::NameStatus;
using jpbib::names::PersonName;

namespace {

jpbib::oai::HarvestedPublication mori_publication() {
    return jpbib::oai::parse_junii2(read_file(data_path("junii2/mori_neubig_tsuboi.xml")),
                                    "oai:ipsj.ixsq.nii.ac.jp:00078161");
}

std::string render_mori() {
    const auto pub = mori_publication();
    const auto dict = fixture_dictionary();
    const auto corpus = fixture_corpus();
    std::vector<AuthorResolution> authors;
    std::vector<std::string> latin;
    for (const auto& c : pub.creators) {
        authors.push_back(jpbib::names::resolve_author(c.latin, c.kanji, dict));
        latin.push_back(display_name(authors.back()));
    }
    const auto key = corpus.find_publication(pub.title_in(jpbib::oai::Language::en)->text, latin);
    return render_spf(make_entry(pub, authors, corpus.common_coauthors(latin), key));
}

bool pure_ascii(const std::string& s) {
    for (unsigned char c : s)
        if (c > 127)
            return false;
    return true;
}

}  // namespace

TEST_CASE("escape examples") {
    CHECK(escape_non_ascii("森") == "&#x68EE;");
    CHECK(escape_non_ascii("森,信介") == "&#x68EE;,&#x4FE1;&#x4ECB;");
    CHECK(escape_non_ascii("Zürich") == "Z&#xFC;rich");
    CHECK(escape_non_ascii("a<b>&\"") == "a&lt;b&gt;&amp;\"");
    CHECK(escape_non_ascii("a\"b", true) == "a&quot;b");
    CHECK(escape_non_ascii("plain ASCII") == "plain ASCII");
    CHECK(escape_non_ascii("😀") == "&#x1F600;");
}

TEST_CASE("unescape") {
    CHECK(unescape("&#x68EE;&#26862;") == "森森");
    CHECK(unescape("&amp;&lt;&gt;&quot;&apos;") == "&<>\"'");
    CHECK(unescape("no refs") == "no refs");
}

TEST_CASE("escaping round trips and is pure ASCII") {
    std::mt19937 rng(41);
    const std::u32string alphabet = U"abc &<>\"森信介ニュービッグü😀";
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    for (int i = 0; i < 1000; ++i) {
        std::string text;
        for (int k = 0; k < 10; ++k)
            jpbib::utf8::append(text, alphabet[pick(rng)]);
        for (bool attribute : {false, true}) {
            const std::string escaped = escape_non_ascii(text, attribute);
            CHECK(pure_ascii(escaped));
            CHECK(unescape(escaped) == text);
        }
    }
}

TEST_CASE("date labels and titles") {
    CHECK(date_label("2011-10-15") == "October 2011");
    CHECK(date_label("2011-01") == "January 2011");
    CHECK(date_label("2011") == "2011");
    CHECK(date_label("2011-13-01") == "2011");
    CHECK(date_label("soon") == "");
    CHECK(terminate_title("Title") == "Title.");
    CHECK(terminate_title("Title.") == "Title.");
    CHECK(terminate_title("Why?") == "Why?");
}

TEST_CASE("display names") {
    AuthorResolution latin;
    latin.latin = PersonName{"Shinsuke", "Mori"};
    latin.kanji = PersonName{"信介", "森"};
    CHECK(display_name(latin) == "Shinsuke Mori");
    AuthorResolution kanji;
    kanji.kanji = PersonName{"正弘", "菅谷"};
    CHECK(display_name(kanji) == "菅谷正弘");
}

TEST_CASE("entry selection") {
    const auto pub = mori_publication();
    const BhtEntry entry = make_entry(pub, {});
    CHECK(entry.title == "A Pointwise Approach to Automatic Word Segmentation");
    REQUIRE(entry.original_title.has_value());
    CHECK(entry.original_title->text == "点予測による自動単語分割");
    CHECK(entry.original_title->lang == "ja");
    CHECK(entry.original_title->type == "Journal Article");
    CHECK(entry.volume == "52");
    CHECK(entry.number == "10");
    CHECK(entry.date_label == "October 2011");
    CHECK(entry.pages == "2944-2952");
    CHECK(entry.ee == "http://id.nii.ac.jp/1001/00078161/");

    jpbib::oai::HarvestedPublication bare;
    bare.titles.push_back({"Only", jpbib::oai::Language::en});
    bare.language = jpbib::oai::Language::en;
    const BhtEntry minimal = make_entry(bare, {});
    CHECK(minimal.pages == "0-");
    CHECK_FALSE(minimal.original_title.has_value());
    CHECK_FALSE(minimal.ee.has_value());
    const std::string text = render_spf(minimal);
    CHECK(text.find("<h2>") == std::string::npos);
    CHECK(text.find("Only.\n0-\n") != std::string::npos);
}

TEST_CASE("golden Single Publication Format output") {
    const std::string rendered = render_mori();
    CHECK(rendered == read_file(data_path("golden/mori_neubig_tsuboi.bht")));
    CHECK(pure_ascii(rendered));
    CHECK(rendered.find('\r') == std::string::npos);
}

TEST_CASE("kanji-only authors list their candidates") {
    const auto dict = fixture_dictionary();
    jpbib::oai::HarvestedPublication pub;
    pub.titles.push_back({"T", jpbib::oai::Language::en});
    const BhtEntry entry = make_entry(pub, {jpbib::names::resolve_author(std::nullopt, "菅谷正弘", dict)});
    const std::string text = render_spf(entry);
    CHECK(text.find("<namecandidates kanji=\"&#x83C5;&#x8C37;&#x6B63;&#x5F18;\">Shougu Sugatani, Seihiro Sugatani, "
                    "Tadahiro Sugatani, Masahiro Sugatani, Shougu Suganoya,") != std::string::npos);
    CHECK(text.find("Masahiro Sugenoya</namecandidates>") != std::string::npos);
    CHECK(text.find(">undefined</status>") != std::string::npos);
}

TEST_CASE("dblp key element") {
    jpbib::oai::HarvestedPublication pub;
    pub.titles.push_back({"T", jpbib::oai::Language::en});
    const std::string text = render_spf(make_entry(pub, {}, {}, std::string("journals/ipsj/YoshiokaTWF07")));
    CHECK(text.find("<dblpkey>journals/ipsj/YoshiokaTWF07</dblpkey>") != std::string::npos);
}

TEST_CASE("file paths") {
    auto pub = mori_publication();
    const auto path = spf_path("/out", pub);
    CHECK(path.parent_path().filename() == "52-10");
    CHECK(path.filename() == "00078161.bht");
    const std::string journal_dir = path.parent_path().parent_path().filename().string();
    CHECK(pure_ascii(journal_dir));
    CHECK(journal_dir.find('/') == std::string::npos);

    jpbib::oai::HarvestedPublication bare;
    bare.identifier = "oai:x:9";
    bare.journal = "IPSJ Journal";
    CHECK(spf_path("/out", bare) == std::filesystem::path("/out/IPSJ_Journal/0-0/9.bht"));
    bare.journal.reset();
    CHECK(spf_path("/out", bare) == std::filesystem::path("/out/unknown-journal/0-0/9.bht"));
}

TEST_CASE("concatenation") {
    TempDir dir;
    write_file(dir.path() / "j" / "1-1" / "2.bht", "B\n");
    write_file(dir.path() / "j" / "1-1" / "10.bht", "C\n");
    write_file(dir.path() / "j" / "1-1" / "1.bht", "A\n");
    write_file(dir.path() / "j" / "1-1" / "notes.txt", "x");
    write_file(dir.path() / "k" / "2-1" / "5.bht", "K\n");
    std::vector<std::string> errors;
    CHECK(concatenate(dir.path(), &errors) == 2);
    CHECK(errors.empty());
    CHECK(read_file(dir.path() / "j" / "1-1" / "all.bht") == "A\nC\nB\n");
    const auto first = snapshot(dir.path());
    CHECK(concatenate(dir.path()) == 2);
    CHECK(snapshot(dir.path()) == first);
    CHECK_THROWS_AS(concatenate(dir.path() / "missing"), jpbib::IoError);
}
