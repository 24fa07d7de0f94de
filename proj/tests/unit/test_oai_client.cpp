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

#include <set>

#include "jpbib/errors.hpp"
#include "jpbib/mock_provider.hpp"
#include "jpbib/oai_client.hpp"
#include "test_support.hpp"

using namespace jpbib::oai;

namespace {

const std::string kEndpoint = "https://example.org/ej/?action=repository_oaipmh";
const std::string kPrefix = "oai:example.org:";

// Ids 1..255 without 101..105; every 50th record deleted.
std::vector<MockRecord> generated_records() {
    std::vector<MockRecord> out;
    for (int id = 1; id <= 255; ++id) {
        if (id >= 101 && id <= 105)
            continue;
        MockRecord r;
        r.identifier = kPrefix + std::to_string(id);
        r.datestamp = "2012-01-01T00:00:00Z";
        r.deleted = id % 50 == 0;
        r.payload = "<junii2 xmlns=\"http://irdb.nii.ac.jp/oai\"><title>Paper " + std::to_string(id) +
                    "</title><creator>Author " + std::to_string(id) + "</creator></junii2>";
        out.push_back(std::move(r));
    }
    return out;
}

ClientOptions fast_options() {
    ClientOptions o;
    o.backoff = std::chrono::milliseconds(0);
    return o;
}

std::set<std::string> harvested_titles(OaiClient& client, const HarvestMode& mode, std::size_t* deleted = nullptr) {
    std::set<std::string> titles;
    harvest(client, "junii2", mode, [&](HarvestItem&& item) {
        if (item.record.deleted && deleted != nullptr)
            ++*deleted;
        if (item.publication)
            CHECK(titles.insert(item.publication->titles.front().text).second);
    });
    return titles;
}

}  // namespace

TEST_CASE("percent encoding") {
    CHECK(percent_encode("a b:c/d") == "a%20b%3Ac%2Fd");
    CHECK(percent_encode("Az09-._~") == "Az09-._~");
    CHECK(percent_decode("a%20b%3Ac%2Fd") == "a b:c/d");
    CHECK(percent_decode("a+b") == "a b");
    CHECK(percent_decode("%") == "%");
    for (const std::string s : {"oai:ipsj.ixsq.nii.ac.jp:00078161", "junii2:100", "森 & co"})
        CHECK(percent_decode(percent_encode(s)) == s);
    const auto params = query_parameters(kEndpoint + "&verb=GetRecord&identifier=oai%3Ax%3A1");
    CHECK(params.at("action") == "repository_oaipmh");
    CHECK(params.at("verb") == "GetRecord");
    CHECK(params.at("identifier") == "oai:x:1");
}

TEST_CASE("request URLs") {
    const MockDataProvider provider({});
    MockFetcher fetcher(provider);
    const OaiClient client(kEndpoint, fetcher);
    CHECK(client.request_url("ListRecords", {{"metadataPrefix", "junii2"}}) ==
          kEndpoint + "&verb=ListRecords&metadataPrefix=junii2");
    const OaiClient plain("http://h/oai", fetcher);
    CHECK(plain.request_url("Identify", {}) == "http://h/oai?verb=Identify");
}

TEST_CASE("list mode pages through every record") {
    const MockDataProvider provider(generated_records(), 100);
    MockFetcher fetcher(provider);
    OaiClient client(kEndpoint, fetcher, fast_options());

    const ListPage first = client.list_records("junii2");
    CHECK(first.records.size() == 100);
    REQUIRE(first.resumption_token.has_value());
    const ListPage second = client.list_records("junii2", first.resumption_token);
    CHECK(second.records.size() == 100);
    const ListPage third = client.list_records("junii2", second.resumption_token);
    CHECK(third.records.size() == 50);
    CHECK_FALSE(third.resumption_token.has_value());
    CHECK(fetcher.urls()[1].find("resumptionToken=") != std::string::npos);
    CHECK(fetcher.urls()[1].find("metadataPrefix") == std::string::npos);

    MockFetcher counting(provider);
    OaiClient harvesting(kEndpoint, counting, fast_options());
    std::size_t deleted = 0;
    const auto titles = harvested_titles(harvesting, HarvestMode::list(), &deleted);
    CHECK(titles.size() == 245);
    CHECK(deleted == 5);
    CHECK(counting.calls() == 3);
}

TEST_CASE("id range mode finds the same publications") {
    const MockDataProvider provider(generated_records(), 100);
    MockFetcher list_fetcher(provider);
    OaiClient list_client(kEndpoint, list_fetcher, fast_options());
    MockFetcher range_fetcher(provider);
    OaiClient range_client(kEndpoint, range_fetcher, fast_options());
    const auto by_list = harvested_titles(list_client, HarvestMode::list());
    const auto by_range = harvested_titles(range_client, HarvestMode::id_range(1, 260, kPrefix));
    CHECK(by_list == by_range);
    CHECK(range_fetcher.calls() == 260);
    CHECK_THROWS_AS(HarvestMode::id_range(5, 4, kPrefix), jpbib::Error);
}

TEST_CASE("single records") {
    const MockDataProvider provider(generated_records(), 100);
    MockFetcher fetcher(provider);
    OaiClient client(kEndpoint, fetcher, fast_options());
    const auto record = client.get_record("junii2", kPrefix + "7");
    REQUIRE(record.has_value());
    CHECK(record->identifier == kPrefix + "7");
    CHECK_FALSE(record->deleted);
    REQUIRE(record->payload.has_value());
    CHECK(parse_junii2(*record->payload).titles.front().text == "Paper 7");
    CHECK_FALSE(client.get_record("junii2", kPrefix + "103").has_value());
    const auto deleted = client.get_record("junii2", kPrefix + "50");
    REQUIRE(deleted.has_value());
    CHECK(deleted->deleted);
    CHECK_FALSE(deleted->payload.has_value());
}

TEST_CASE("protocol errors") {
    const MockDataProvider provider(generated_records(), 100);
    MockFetcher fetcher(provider);
    OaiClient client(kEndpoint, fetcher, fast_options());
    try {
        client.list_records("junii2", std::string("junii2:bogus"));
        FAIL("expected badResumptionToken");
    } catch (const ProtocolError& e) {
        CHECK(e.code() == "badResumptionToken");
    }
    try {
        client.list_records("marc21");
        FAIL("expected cannotDisseminateFormat");
    } catch (const ProtocolError& e) {
        CHECK(e.code() == "cannotDisseminateFormat");
    }
    CHECK(client.list_metadata_formats() == std::vector<std::string>{"oai_dc", "junii2"});

    const MockDataProvider empty({});
    MockFetcher empty_fetcher(empty);
    OaiClient empty_client(kEndpoint, empty_fetcher, fast_options());
    const ListPage page = empty_client.list_records("junii2");
    CHECK(page.records.empty());
    CHECK_FALSE(page.resumption_token.has_value());
}

TEST_CASE("transport failures are retried") {
    const MockDataProvider provider(generated_records(), 100);
    MockFetcher fetcher(provider);
    OaiClient client(kEndpoint, fetcher, fast_options());
    fetcher.fail_next(2);
    CHECK(client.get_record("junii2", kPrefix + "1").has_value());
    CHECK(fetcher.calls() == 3);
    CHECK(client.requests_sent() == 1);

    fetcher.fail_next(3);
    try {
        client.get_record("junii2", kPrefix + "1");
        FAIL("expected a transport error");
    } catch (const TransportError& e) {
        CHECK(e.attempts() == 3);
    }
}

TEST_CASE("raw responses are kept when asked") {
    jpbib::testing::TempDir dir;
    const MockDataProvider provider(generated_records(), 100);
    MockFetcher fetcher(provider);
    ClientOptions options = fast_options();
    options.raw_response_dir = dir.path();
    OaiClient client(kEndpoint, fetcher, options);
    client.list_records("junii2");
    client.list_metadata_formats();
    const auto files = jpbib::testing::snapshot(dir.path());
    CHECK(files.size() == 2);
    CHECK(files.count("response-000001.xml") == 1);
    CHECK(files.at("response-000002.xml").find("ListMetadataFormats") != std::string::npos);
}

TEST_CASE("fixture provider") {
    const MockDataProvider provider =
        MockDataProvider::from_directory(jpbib::testing::data_path("e2e/provider"));
    CHECK(provider.page_size() == 3);
    CHECK(provider.records().size() == 7);
    MockFetcher fetcher(provider);
    OaiClient client("mock://provider", fetcher, fast_options());
    std::size_t items = 0, publications = 0, errors = 0, deleted = 0;
    harvest(client, "junii2", HarvestMode::list(), [&](HarvestItem&& item) {
        ++items;
        publications += item.publication.has_value();
        errors += item.error.has_value();
        deleted += item.record.deleted;
    });
    CHECK(items == 7);
    CHECK(publications == 4);
    CHECK(errors == 1);
    CHECK(deleted == 2);
    CHECK(fetcher.calls() == 3);
}
