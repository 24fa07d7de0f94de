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


// In-process OAI-PMH Data Provider for tests and offline runs. It answers
// the verbs the harvester uses from a fixed record list.

#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "jpbib/oai_client.hpp"

namespace jpbib::oai {

struct MockRecord {
    std::string identifier;
    std::string datestamp;
    bool deleted = false;
    std::string payload;  // metadata element, ignored when deleted
};

class MockDataProvider {
public:
    explicit MockDataProvider(std::vector<MockRecord> records, std::size_t page_size = 100,
                              std::vector<std::string> formats = {"oai_dc", "junii2"});

    /// Reads manifest.json in `directory`: {"page_size", "formats",
    /// "records": [{"identifier", "datestamp", "deleted", "file"}]} with
    /// payload files relative to the directory.
    static MockDataProvider from_directory(const std::filesystem::path& directory);

    /// Full OAI-PMH response for a request with the given query parameters.
    std::string respond(const std::map<std::string, std::string>& params) const;

    const std::vector<MockRecord>& records() const noexcept { return records_; }
    std::size_t page_size() const noexcept { return page_size_; }

private:
    std::string list_records(const std::map<std::string, std::string>& params) const;
    std::string get_record(const std::map<std::string, std::string>& params) const;
    std::string list_metadata_formats() const;
    bool supports(const std::string& prefix) const;

    std::vector<MockRecord> records_;
    std::size_t page_size_;
    std::vector<std::string> formats_;
};

/// Fetcher answering from a MockDataProvider. Can be told to fail the next
/// few requests to exercise retries.
class MockFetcher final : public Fetcher {
public:
    explicit MockFetcher(const MockDataProvider& provider) : provider_(provider) {}

    std::string fetch(const std::string& url) override;

    void fail_next(int count) noexcept { failures_left_ = count; }
    std::size_t calls() const noexcept { return calls_; }
    const std::vector<std::string>& urls() const noexcept { return urls_; }

private:
    const MockDataProvider& provider_;
    int failures_left_ = 0;
    std::size_t calls_ = 0;
    std::vector<std::string> urls_;
};

}  // namespace jpbib::oai
