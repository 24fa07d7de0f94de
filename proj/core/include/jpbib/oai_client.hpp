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

// OAI-PMH 2.0 harvesting: GetRecord, ListRecords with resumption tokens and
// ListMetadataFormats against a Data Provider reached through a Fetcher.

#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jpbib/errors.hpp"
#include "jpbib/junii2.hpp"

namespace jpbib::oai {

struct OaiRecord {
    std::string identifier;
    std::string datestamp;
    bool deleted = false;
    std::optional<std::string> payload;  // raw metadata element, absent when deleted

    friend bool operator==(const OaiRecord&, const OaiRecord&) = default;
};

/// Transport failure; retryable.
class TransportError : public Error {
public:
    explicit TransportError(const std::string& what, int attempts = 1)
        : Error(what + (attempts > 1 ? " (after " + std::to_string(attempts) + " attempts)" : "")),
          attempts_(attempts) {}

    int attempts() const noexcept { return attempts_; }

private:
    int attempts_;
};

/// An OAI-PMH <error> reply.
class ProtocolError : public Error {
public:
    ProtocolError(std::string code, const std::string& message)
        : Error("OAI-PMH error " + code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

class Fetcher {
public:
    virtual ~Fetcher() = default;
    /// Body of a GET on `url`. Throws TransportError.
    virtual std::string fetch(const std::string& url) = 0;
};

struct ClientOptions {
    int max_attempts = 3;
    std::chrono::milliseconds backoff{500};  // doubled after each failed attempt
    std::chrono::milliseconds politeness_delay{0};
    std::optional<std::filesystem::path> raw_response_dir;
};

struct ListPage {
    std::vector<OaiRecord> records;
    std::optional<std::string> resumption_token;  // absent when the list is complete
};

struct DateWindow {
    std::optional<std::string> from;
    std::optional<std::string> until;
};

std::string percent_encode(std::string_view text);
std::string percent_decode(std::string_view text);

/// Query parameters of a URL, percent-decoded.
std::map<std::string, std::string> query_parameters(std::string_view url);

class OaiClient {
public:
    /// `endpoint` is the base URL, possibly with fixed query parameters
    /// ("https://host/ej/?action=repository_oaipmh").
    OaiClient(std::string endpoint, Fetcher& fetcher, ClientOptions options = {});

    ListPage list_records(std::string_view prefix, const std::optional<std::string>& token = std::nullopt,
                          const DateWindow& window = {});

    /// Absent when the provider answers idDoesNotExist.
    std::optional<OaiRecord> get_record(std::string_view prefix, std::string_view identifier);

    std::vector<std::string> list_metadata_formats();

    std::string request_url(std::string_view verb,
                            const std::vector<std::pair<std::string, std::string>>& params) const;

    std::size_t requests_sent() const noexcept { return requests_; }

private:
    std::string fetch_with_retry(const std::string& url);

    std::string endpoint_;
    Fetcher& fetcher_;
    ClientOptions options_;
    std::size_t requests_ = 0;
};

struct HarvestMode {
    enum class Kind { list, id_range };

    Kind kind = Kind::list;
    std::uint64_t min_id = 1;
    std::uint64_t max_id = 1;
    std::string identifier_prefix;  // e.g. "oai:ipsj.ixsq.nii.ac.jp:"

    static HarvestMode list() { return {}; }
    static HarvestMode id_range(std::uint64_t min_id, std::uint64_t max_id, std::string identifier_prefix);
};

struct HarvestItem {
    OaiRecord record;
    std::optional<HarvestedPublication> publication;
    std::optional<std::string> error;  // payload that could not be parsed
};

using HarvestCallback = std::function<void(HarvestItem&&)>;

/// Yields every record of the repository once, in provider order. In list
/// mode the next page is fetched while the current one is being handed to
/// `on_item`. Per-record parse problems land in HarvestItem::error.
void harvest(OaiClient& client, std::string_view prefix, const HarvestMode& mode, const HarvestCallback& on_item);

}  // namespace jpbib::oai
