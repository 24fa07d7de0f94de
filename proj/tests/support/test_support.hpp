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


// Fixture access shared by the unit and acceptance tests.

#pragma once

#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <unistd.h>

#include "jpbib/dblp_corpus.hpp"
#include "jpbib/enamdict.hpp"
#include "jpbib/name_dictionary.hpp"

#ifndef JPBIB_TEST_DATA
#error "JPBIB_TEST_DATA must point at tests/data"
#endif

namespace jpbib::testing {

inline std::filesystem::path data_path(const std::string& relative) {
    return std::filesystem::path(JPBIB_TEST_DATA) / relative;
}

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline std::vector<enamdict::NameRecord> fixture_names(bool include_unclassified = false) {
    std::ifstream in(data_path("enamdict/names.txt"));
    return enamdict::parse_file(in, include_unclassified).records;
}

inline names::NameDictionary fixture_dictionary(bool include_unclassified = false) {
    return names::NameDictionary(fixture_names(include_unclassified));
}

inline dblp::CorpusStore fixture_corpus() {
    std::ifstream in(data_path("dblp/dblp.xml"), std::ios::binary);
    return dblp::load_corpus(in);
}

/// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
public:
    TempDir() {
        static std::atomic<int> counter{0};
        const auto stamp = std::chrono::steady_clock::now().time_since_epoch().count();
        path_ = std::filesystem::temp_directory_path() /
                ("jpbib-test-" + std::to_string(::getpid()) + "-" + std::to_string(stamp) + "-" +
                 std::to_string(counter++));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const noexcept { return path_; }

private:
    std::filesystem::path path_;
};

/// Relative path -> content for every regular file below `root`.
inline std::map<std::string, std::string> snapshot(const std::filesystem::path& root) {
    std::map<std::string, std::string> out;
    if (!std::filesystem::exists(root))
        return out;
    for (const auto& entry : std::filesystem::recursive_directory_iterator(root))
        if (entry.is_regular_file())
            out[std::filesystem::relative(entry.path(), root).generic_string()] = read_file(entry.path());
    return out;
}

/// config.ini for a run over the bundled fixtures with all outputs in `work`.
inline std::string fixture_config(const std::filesystem::path& work, bool list_mode = true) {
    const std::string data = JPBIB_TEST_DATA;
    std::string text = read_file(data_path("e2e/config.ini.in"));
    for (std::size_t pos; (pos = text.find("@JPBIB_TEST_DATA@")) != std::string::npos;)
        text.replace(pos, 17, data);
    if (!list_mode)
        text.replace(text.find("uselistrecords=true"), 19, "uselistrecords=false");
    std::ofstream(work / "config.ini") << text;
    return (work / "config.ini").string();
}

}  // namespace jpbib::testing
