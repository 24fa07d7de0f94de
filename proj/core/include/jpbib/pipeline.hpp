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


// The four stages and the command line front end that sequences them.

#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "jpbib/config.hpp"
#include "jpbib/dblp_corpus.hpp"
#include "jpbib/oai_client.hpp"
#include "jpbib/statistics.hpp"
#include "jpbib/store.hpp"

namespace jpbib::pipeline {

enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,
    kExitConfig = 2,
    kExitPrerequisite = 3,
    kExitIo = 4,
    kExitParse = 5,
    kExitTransport = 6,
};

class UsageError : public Error {
public:
    using Error::Error;
};

struct Flags {
    bool parse_dblp = false;
    bool enamdict = false;
    bool harvest = false;
    bool concatenate = false;
    bool help = false;
    std::string config_path = "config.ini";

    bool any_stage() const noexcept { return parse_dblp || enamdict || harvest || concatenate; }
};

/// Accepts --parse-dblp/-d, --enamdict/-e, --harvest/-h,
/// --concatenate-bht/-b, --all/-a, --help/-help and --config/-c PATH.
/// Throws UsageError.
Flags parse_flags(const std::vector<std::string>& args);

std::string usage_text();

OaiTables oai_tables(const Config& config);

/// Dictionary stage; returns the number of stored names.
std::size_t run_enamdict_stage(const Config& config, Store& store);

/// Corpus stage.
dblp::CorpusParseStats run_dblp_stage(const Config& config, Store& store);

/// Harvest stage: fetch, resolve authors, persist, write SPF files. When
/// `fetcher` is null the endpoint from the config decides (http(s) URL or
/// "mock:<directory>").
RunStatistics run_harvest_stage(const Config& config, Store& store, oai::Fetcher* fetcher = nullptr);

/// Concatenation stage; returns the number of all.bht files written.
std::size_t run_concatenate_stage(const Config& config);

/// Rejects stage selections whose inputs neither exist nor are produced by
/// an earlier selected stage. Throws PrerequisiteError.
void check_prerequisites(const Flags& flags, const Config& config, const Store& store);

/// Runs the selected stages. Statistics go to `out`, problems to `err`.
int run(const Flags& flags, std::ostream& out, std::ostream& err);

/// argv front end used by the jpbib executable.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace jpbib::pipeline
