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

#include <sstream>

#include "jpbib/bht_export.hpp"
#include "jpbib/errors.hpp"
#include "jpbib/pipeline.hpp"
#include "test_support.hpp"

using namespace jpbib::pipeline;
using namespace jpbib::testing;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run_with(const std::vector<std::string>& args) {
    std::vector<const char*> argv{"jpbib"};
    for (const std::string& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::map<std::string, std::string> bht_tree(const std::filesystem::path& work) { return snapshot(work / "bht"); }

}  // namespace

TEST_CASE("flags") {
    const Flags all = parse_flags({"--all"});
    CHECK(all.parse_dblp);
    CHECK(all.enamdict);
    CHECK(all.harvest);
    CHECK(all.concatenate);
    CHECK(all.config_path == "config.ini");

    const Flags some = parse_flags({"-e", "-h", "--config", "x.ini"});
    CHECK(some.enamdict);
    CHECK(some.harvest);
    CHECK_FALSE(some.parse_dblp);
    CHECK_FALSE(some.concatenate);
    CHECK(some.config_path == "x.ini");

    CHECK(parse_flags({"--config=y.ini", "-b"}).config_path == "y.ini");
    CHECK(parse_flags({"-d"}).parse_dblp);
    CHECK(parse_flags({"--help"}).help);
    CHECK(parse_flags({"-help"}).help);
    CHECK_FALSE(parse_flags({}).any_stage());
    CHECK_THROWS_AS(parse_flags({"--bogus"}), UsageError);
    CHECK_THROWS_AS(parse_flags({"--config"}), UsageError);
    CHECK(usage_text().rfind("usage: jpbib", 0) == 0);
}

TEST_CASE("exit codes") {
    CHECK(run_with({"--help"}).code == kExitOk);
    CHECK(run_with({}).code == kExitUsage);
    CHECK(run_with({"--nope"}).code == kExitUsage);
    TempDir dir;
    CHECK(run_with({"-e", "-c", (dir.path() / "missing.ini").string()}).code == kExitConfig);
    std::ofstream(dir.path() / "bad.ini") << "[harvester]\nminid=9\nmaxid=1\n";
    const RunResult bad = run_with({"-e", "-c", (dir.path() / "bad.ini").string()});
    CHECK(bad.code == kExitConfig);
    CHECK(bad.err.find("harvester.minid") != std::string::npos);
}

TEST_CASE("stages refuse to run without their inputs") {
    TempDir dir;
    std::ofstream(dir.path() / "config.ini") << "[log]\npath=./log\n[bhtexport]\npath=./bht\n";
    const std::string config = (dir.path() / "config.ini").string();

    const RunResult harvest = run_with({"--harvest", "-c", config});
    CHECK(harvest.code == kExitPrerequisite);
    CHECK(harvest.err.find("run --enamdict first") != std::string::npos);

    const RunResult concatenate = run_with({"-b", "-c", config});
    CHECK(concatenate.code == kExitPrerequisite);
    CHECK(concatenate.err.find("run --harvest first") != std::string::npos);

    const Config c = parse_config(config);
    Store store(":memory:");
    store.write_names(c.japnamesdb.table, fixture_names());
    Flags flags;
    flags.harvest = true;
    try {
        check_prerequisites(flags, c, store);
        FAIL("expected a prerequisite error");
    } catch (const jpbib::PrerequisiteError& e) {
        CHECK(std::string(e.what()).find("run --parse-dblp first") != std::string::npos);
    }
    flags.parse_dblp = true;
    CHECK_NOTHROW(check_prerequisites(flags, c, store));
}

TEST_CASE("missing input files are I/O failures") {
    TempDir dir;
    std::ofstream(dir.path() / "config.ini") << "[enamdict]\nfile=./absent\n[log]\npath=./log\n";
    CHECK(run_with({"-e", "-c", (dir.path() / "config.ini").string()}).code == kExitIo);
}

TEST_CASE("end to end over the fixtures") {
    TempDir dir;
    const std::string config = fixture_config(dir.path());
    const RunResult result = run_with({"--all", "-c", config});
    REQUIRE_MESSAGE(result.code == kExitOk, result.err);
    CHECK(result.out.find("records with metadata") != std::string::npos);

    const auto tree = bht_tree(dir.path());
    const Config c = parse_config(config);
    const auto mori = jpbib::oai::parse_junii2(read_file(data_path("e2e/provider/records/1.xml")),
                                               "oai:ipsj.ixsq.nii.ac.jp:1");
    const std::string mori_file =
        std::filesystem::relative(jpbib::bht::spf_path(c.resolve(c.bhtexport.path), mori), dir.path() / "bht")
            .generic_string();
    REQUIRE(tree.count(mori_file) == 1);
    CHECK(tree.at(mori_file) == read_file(data_path("golden/mori_neubig_tsuboi.bht")));

    std::size_t spf = 0, concatenated = 0;
    for (const auto& [path, text] : tree) {
        if (path.ends_with("/all.bht"))
            ++concatenated;
        else
            ++spf;
        for (unsigned char ch : text)
            CHECK(ch < 128);
    }
    CHECK(spf == 4);
    CHECK(concatenated == 3);

    const std::string all = tree.at(std::filesystem::path(mori_file).parent_path().generic_string() + "/all.bht");
    CHECK(all.find("Shinsuke Mori") < all.find("namecandidates"));

    const std::string stats = read_file(dir.path() / "log" / "statistics.json");
    CHECK(stats.find("\"records_with_metadata\": 4") != std::string::npos);
    CHECK(stats.find("\"deleted_records\": 2") != std::string::npos);
    CHECK(stats.find("\"parse_errors\": 1") != std::string::npos);
    CHECK(stats.find("\"duplicates_found\": 1") != std::string::npos);

    Store store(c.resolve(c.db.db).string());
    CHECK(store.row_count(c.oaidb.publicationtable) == 4);
    CHECK(store.row_count(c.japnamesdb.table) == fixture_names().size());
    CHECK(store.row_count(c.dblpdb.dblptable) == 10);
    CHECK(store.row_count(c.dblpdb.authorscounttable) == 12);
    CHECK(snapshot(dir.path() / "files-harvester").size() == 3);
}

TEST_CASE("runs are deterministic and both harvest modes agree") {
    TempDir first, second, by_id;
    REQUIRE(run_with({"--all", "-c", fixture_config(first.path())}).code == kExitOk);
    REQUIRE(run_with({"--all", "-c", fixture_config(second.path())}).code == kExitOk);
    REQUIRE(run_with({"--all", "-c", fixture_config(by_id.path(), false)}).code == kExitOk);
    CHECK(bht_tree(first.path()) == bht_tree(second.path()));
    CHECK(bht_tree(first.path()) == bht_tree(by_id.path()));
    const std::string stats = read_file(first.path() / "log" / "statistics.json");
    CHECK(stats == read_file(second.path() / "log" / "statistics.json"));
    CHECK(stats == read_file(by_id.path() / "log" / "statistics.json"));

    const Config c = parse_config(first.path() / "config.ini");
    Store a(c.resolve(c.db.db).string());
    Store b(parse_config(second.path() / "config.ini").resolve(c.db.db).string());
    for (const std::string& table : {c.oaidb.publicationtable, c.oaidb.authorstable, c.oaidb.titlestable,
                                     c.dblpdb.dblptable, c.japnamesdb.table})
        CHECK(a.dump(table) == b.dump(table));
}

TEST_CASE("stages can run one at a time") {
    TempDir dir;
    const std::string config = fixture_config(dir.path());
    CHECK(run_with({"-e", "-c", config}).code == kExitOk);
    CHECK(run_with({"-d", "-c", config}).code == kExitOk);
    CHECK(run_with({"-h", "-c", config}).code == kExitOk);
    CHECK(run_with({"-b", "-c", config}).code == kExitOk);
    TempDir at_once;
    REQUIRE(run_with({"--all", "-c", fixture_config(at_once.path())}).code == kExitOk);
    CHECK(bht_tree(dir.path()) == bht_tree(at_once.path()));
}
