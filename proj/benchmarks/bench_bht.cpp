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


#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>

#include "jpbib/bht_export.hpp"
#include "jpbib/enamdict.hpp"

namespace {

std::string fixture() {
    std::ifstream in(std::string(JPBIB_TEST_DATA) + "/junii2/mori_neubig_tsuboi.xml");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void BM_RenderSpf(benchmark::State& state) {
    std::ifstream names_in(std::string(JPBIB_TEST_DATA) + "/enamdict/names.txt");
    const jpbib::names::NameDictionary dict(jpbib::enamdict::parse_file(names_in, false).records);
    const auto pub = jpbib::oai::parse_junii2(fixture(), "oai:x:1");
    std::vector<jpbib::names::AuthorResolution> authors;
    for (const auto& c : pub.creators)
        authors.push_back(jpbib::names::resolve_author(c.latin, c.kanji, dict));
    const auto entry = jpbib::bht::make_entry(pub, authors, {"Masato Mimura"});
    for (auto _ : state)
        benchmark::DoNotOptimize(jpbib::bht::render_spf(entry));
}
BENCHMARK(BM_RenderSpf);

void BM_ParseJunii2(benchmark::State& state) {
    const std::string payload = fixture();
    for (auto _ : state)
        benchmark::DoNotOptimize(jpbib::oai::parse_junii2(payload, "oai:x:1"));
}
BENCHMARK(BM_ParseJunii2);

}  // namespace
