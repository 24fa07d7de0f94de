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
#include <fstream>
#include <set>
#include <sstream>

#include "jpbib/dblp_corpus.hpp"
#include "jpbib/errors.hpp"
#include "test_support.hpp"

using namespace jpbib::dblp;
using jpbib::testing::data_path;
using jpbib::testing::fixture_corpus;

TEST_CASE("fixture totals") {
    std::ifstream in(data_path("dblp/dblp.xml"), std::ios::binary);
    CorpusParseStats stats;
    const CorpusStore store = load_corpus(in, &stats);
    CHECK(stats.publications == 10);
    CHECK(stats.edges == 12);
    CHECK(stats.skipped_records == 2);
    CHECK(store.publications().size() == 10);
    CHECK(store.edges().size() == 12);
}

TEST_CASE("Codd record fields") {
    const CorpusStore store = fixture_corpus();
    const CorpusPublication* codd = store.by_key("persons/Codd71a");
    REQUIRE(codd != nullptr);
    CHECK(codd->id == 1);
    CHECK(codd->type == "article");
    CHECK(codd->authors == std::vector<std::string>{"E. F. Codd"});
    CHECK(codd->title == "Further Normalization of the Data Base Relational Model.");
    CHECK(codd->year == 1971);
    CHECK(codd->journal == "IBM Research Report, San Jose, California");
    CHECK(codd->volume == "RJ909");
    CHECK_FALSE(codd->pages.has_value());
    CHECK(store.by_id(1) == codd);
}

TEST_CASE("entities and Latin-1 decode to UTF-8") {
    const CorpusStore store = fixture_corpus();
    const CorpusPublication* tresch = store.by_key("persons/Tresch96");
    REQUIRE(tresch != nullptr);
    CHECK(tresch->journal == "technical Report 248, ETH Zürich, Dept. of Computer Science");
}

TEST_CASE("home pages and data records are not publications") {
    const CorpusStore store = fixture_corpus();
    CHECK(store.by_key("homepages/m/AtsuyukiMorishima") == nullptr);
    CHECK(store.by_key("data/example") == nullptr);
    CHECK(is_publication_element("inproceedings"));
    CHECK(is_publication_element("phdthesis"));
    CHECK_FALSE(is_publication_element("www"));
}

TEST_CASE("edges per publication number n(n-1)/2") {
    const CorpusStore store = fixture_corpus();
    for (const CorpusPublication& p : store.publications()) {
        const std::size_t n = p.authors.size();
        const auto count = std::count_if(store.edges().begin(), store.edges().end(),
                                         [&](const CoauthorEdge& e) { return e.publication_id == p.id; });
        CHECK_MESSAGE(static_cast<std::size_t>(count) == n * (n - (n > 0 ? 1 : 0)) / 2, p.key);
        CHECK(coauthor_edges(p).size() == static_cast<std::size_t>(count));
    }
    const CorpusPublication* yoshioka = store.by_key("journals/ipsj/YoshiokaTWF07");
    REQUIRE(yoshioka != nullptr);
    std::set<std::pair<std::string, std::string>> pairs;
    for (const CoauthorEdge& e : coauthor_edges(*yoshioka))
        pairs.emplace(std::min(e.author_a, e.author_b), std::max(e.author_a, e.author_b));
    CHECK(pairs.size() == 6);
    CHECK(pairs.count({"Kenji Toda", "Nobukazu Yoshioka"}) == 1);
}

TEST_CASE("identical author names are not paired") {
    CorpusPublication p;
    p.authors = {"A B", "A B", "C D"};
    CHECK(coauthor_edges(p).size() == 2);
}

TEST_CASE("title keys") {
    CHECK(title_key("  Agent Based   Security Pattern Modeling. ") == title_key("agent based security pattern modeling"));
    CHECK(title_key("A.") == title_key("a"));
    CHECK(title_key("A") != title_key("B"));
}

TEST_CASE("find_publication") {
    const CorpusStore store = fixture_corpus();
    CHECK(store.find_publication("Agent based security pattern modeling", {"Nobukazu Yoshioka"}) ==
          "journals/ipsj/YoshiokaTWF07");
    CHECK(store.find_publication("Agent Based Security Pattern Modeling.", {"Nobukazu Yoshiokaa"}) ==
          "journals/ipsj/YoshiokaTWF07");
    CHECK_FALSE(store.find_publication("Agent Based Security Pattern Modeling.", {"Graham Neubig"}).has_value());
    CHECK_FALSE(store.find_publication("Agent Based Security Modeling.", {"Nobukazu Yoshioka"}).has_value());
}

TEST_CASE("every publication with authors finds itself") {
    const CorpusStore store = fixture_corpus();
    for (const CorpusPublication& p : store.publications()) {
        if (p.authors.empty())
            continue;
        const auto found = store.find_publication(p.title, p.authors);
        REQUIRE(found.has_value());
        CHECK(title_key(store.by_key(*found)->title) == title_key(p.title));
    }
}

TEST_CASE("common coauthors") {
    const CorpusStore store = fixture_corpus();
    CHECK(store.common_coauthors({"Shinsuke Mori", "Graham Neubig", "Yuuta Tsuboi"}) ==
          std::vector<std::string>{"Masato Mimura"});
    CHECK(store.common_coauthors({"Shinsuke Mori"}).empty());
    CHECK(store.common_coauthors({"Yuuta Tsuboi", "Hitoshi Gotoh"}).empty());
    CHECK(store.common_coauthors({"Shinsuke Mori", "Graham Neubig"}) == std::vector<std::string>{"Masato Mimura"});
    CHECK(store.common_coauthors({"Nobukazu Yoshioka", "Kenji Toda"}) ==
          std::vector<std::string>{"Hironori Washizaki", "Yoshiaki Fukazawa"});
}

TEST_CASE("malformed corpus fails with a position") {
    std::istringstream in("<dblp>\n<article key=\"x\"><title>t</article>\n</dblp>");
    CHECK_THROWS_AS(load_corpus(in), jpbib::XmlParseError);
}

TEST_CASE("streaming sink sees records in document order") {
    struct Collect : CorpusSink {
        std::vector<std::uint32_t> ids;
        std::size_t edges = 0;
        void on_publication(const CorpusPublication& p) override { ids.push_back(p.id); }
        void on_edge(const CoauthorEdge&) override { ++edges; }
    } sink;
    std::ifstream in(data_path("dblp/dblp.xml"), std::ios::binary);
    parse_corpus(in, sink);
    CHECK(sink.ids == std::vector<std::uint32_t>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10});
    CHECK(sink.edges == 12);
}
