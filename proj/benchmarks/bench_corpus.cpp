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

#include <sstream>

#include "jpbib/dblp_corpus.hpp"

namespace {

std::string synthetic_corpus(std::size_t records) {
    std::string doc = "<?xml version=\"1.0\" encoding=\"ISO-8859-1\"?>\n<dblp>\n";
    for (std::size_t i = 0; i < records; ++i) {
        const std::string n = std::to_string(i);
        doc += "<article mdate=\"2012-01-01\" key=\"journals/x/P" + n + "\"><author>Author A" + n +
               "</author><author>Author B" + std::to_string(i % 97) + "</author><author>Author C" +
               std::to_string(i % 13) + "</author><title>Title number " + n +
               ".</title><year>2012</year><journal>J</journal></article>\n";
    }
    return doc + "</dblp>\n";
}

void BM_ParseCorpus(benchmark::State& state) {
    const std::string doc = synthetic_corpus(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        std::istringstream in(doc);
        benchmark::DoNotOptimize(jpbib::dblp::load_corpus(in));
    }
    state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * doc.size()));
}
BENCHMARK(BM_ParseCorpus)->Arg(1000)->Arg(10000);

}  // namespace
