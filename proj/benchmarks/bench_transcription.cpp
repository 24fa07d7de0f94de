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

#include "jpbib/name_matching.hpp"
#include "jpbib/transcription.hpp"

namespace {

void BM_ToHepburn(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(jpbib::transcription::to_hepburn("Syuntarou Tiba Tuyosi Zyunitirou"));
}
BENCHMARK(BM_ToHepburn);

void BM_LookupVariants(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(jpbib::names::latin_lookup_variants("Gotoh"));
}
BENCHMARK(BM_LookupVariants);

}  // namespace
