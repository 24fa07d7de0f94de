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

#include <random>

#include "jpbib/similarity.hpp"

namespace {

std::vector<std::string> words(std::size_t count, std::size_t length) {
    std::mt19937 rng(1);
    std::uniform_int_distribution<int> letter('a', 'z');
    std::vector<std::string> out(count);
    for (std::string& w : out)
        for (std::size_t i = 0; i < length; ++i)
            w.push_back(static_cast<char>(letter(rng)));
    return out;
}

void BM_Levenshtein(benchmark::State& state) {
    const auto pool = words(256, static_cast<std::size_t>(state.range(0)));
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(jpbib::similarity::levenshtein(pool[i % 256], pool[(i + 1) % 256]));
        ++i;
    }
}
BENCHMARK(BM_Levenshtein)->Arg(8)->Arg(16)->Arg(64);

void BM_NamesMatch(benchmark::State& state) {
    const jpbib::similarity::MatchConfig cfg;
    for (auto _ : state)
        benchmark::DoNotOptimize(jpbib::similarity::names_match("Atsuyuki Morishima", "Atsuyuki Morishma", cfg));
}
BENCHMARK(BM_NamesMatch);

}  // namespace
