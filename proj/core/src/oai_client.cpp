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


#include "jpbib/oai_client.hpp"

#include <cstdio>
#include <fstream>
#include <future>
#include <thread>

#include <spdlog/spdlog.h>

#include "jpbib/xml.hpp"

namespace jpbib::oai {

namespace {

constexpr char kHex[] = "0123456789ABCDEF";

int hex_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

struct Response {
    xml::Element root;
    std::string body;
};

Response parse_response(std::string body) {
    Response response{xml::parse_document(body), std::move(body)};
    if (response.root.name != "OAI-PMH")
        throw ProtocolError("badResponse", "root element is <" + response.root.name + ">");
    if (const xml::Element* error = response.root.child("error")) {
        const std::string* code = error->attribute("code");
        throw ProtocolError(code != nullptr ? *code : "unknown", error->text);
    }
    return response;
}

OaiRecord read_record(const xml::Element& record, const std::string& body) {
    OaiRecord out;
    const xml::Element* header = record.child("header");
    if (header == nullptr)
        throw ProtocolError("badResponse", "record without header");
    if (const xml::Element* id = header->child("identifier"))
        out.identifier = id->text;
    if (const xml::Element* stamp = header->child("datestamp"))
        out.datestamp = stamp->text;
    const std::string* status = header->attribute("status");
    out.deleted = status != nullptr && *status == "deleted";
    if (out.deleted)
        return out;
    if (const xml::Element* metadata = record.child("metadata"); metadata != nullptr && !metadata->children.empty()) {
        const xml::Element& payload = metadata->children.front();
        out.payload = body.substr(payload.begin, payload.end - payload.begin);
    }
    return out;
}

}  // namespace

std::string percent_encode(std::string_view text) {
    std::string out;
    for (const char c : text) {
        const auto u = static_cast<unsigned char>(c);
        if ((u >= 'A' && u <= 'Z') || (u >= 'a' && u <= 'z') || (u >= '0' && u <= '9') || u == '-' || u == '_' ||
            u == '.' || u == '~') {
            out.push_back(c);
        } else {
            out.push_back('%');
            out.push_back(kHex[u >> 4]);
            out.push_back(kHex[u & 0xF]);
        }
    }
    return out;
}

std::string percent_decode(std::string_view text) {
    std::string out;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '%' && i + 2 < text.size()) {
            const int hi = hex_value(text[i + 1]);
            const int lo = hex_value(text[i + 2]);
            if (hi >= 0 && lo >= 0) {
                out.push_back(static_cast<char>(hi * 16 + lo));
                i += 2;
                continue;
            }
        }
        out.push_back(text[i] == '+' ? ' ' : text[i]);
    }
    return out;
}

std::map<std::string, std::string> query_parameters(std::string_view url) {
    std::map<std::string, std::string> out;
    const std::size_t q = url.find('?');
    if (q == std::string_view::npos)
        return out;
    std::string_view rest = url.substr(q + 1);
    while (!rest.empty()) {
        const std::size_t amp = rest.find('&');
        const std::string_view pair = rest.substr(0, amp);
        if (!pair.empty()) {
            const std::size_t eq = pair.find('=');
            if (eq == std::string_view::npos)
                out[percent_decode(pair)] = "";
            else
                out[percent_decode(pair.substr(0, eq))] = percent_decode(pair.substr(eq + 1));
        }
        if (amp == std::string_view::npos)
            break;
        rest.remove_prefix(amp + 1);
    }
    return out;
}

OaiClient::OaiClient(std::string endpoint, Fetcher& fetcher, ClientOptions options)
    : endpoint_(std::move(endpoint)), fetcher_(fetcher), options_(std::move(options)) {
    if (options_.max_attempts < 1)
        options_.max_attempts = 1;
    if (options_.raw_response_dir)
        std::filesystem::create_directories(*options_.raw_response_dir);
}

std::string OaiClient::request_url(std::string_view verb,
                                   const std::vector<std::pair<std::string, std::string>>& params) const {
    std::string url = endpoint_;
    url += endpoint_.find('?') == std::string::npos ? '?' : '&';
    url += "verb=";
    url += percent_encode(verb);
    for (const auto& [key, value] : params) {
        url += '&';
        url += key;
        url += '=';
        url += percent_encode(value);
    }
    return url;
}

std::string OaiClient::fetch_with_retry(const std::string& url) {
    if (requests_ > 0 && options_.politeness_delay.count() > 0)
        std::this_thread::sleep_for(options_.politeness_delay);
    ++requests_;

    auto delay = options_.backoff;
    for (int attempt = 1;; ++attempt) {
        try {
            std::string body = fetcher_.fetch(url);
            if (options_.raw_response_dir) {
                char name[32];
                std::snprintf(name, sizeof name, "response-%06zu.xml", requests_);
                std::ofstream(*options_.raw_response_dir / name, std::ios::binary) << body;
            }
            return body;
        } catch (const TransportError& e) {
            if (attempt >= options_.max_attempts)
                throw TransportError(e.what(), attempt);
            spdlog::warn("request failed ({}), retry {} of {} in {} ms", e.what(), attempt,
                         options_.max_attempts - 1, delay.count());
            if (delay.count() > 0)
                std::this_thread::sleep_for(delay);
            delay *= 2;
        }
    }
}

ListPage OaiClient::list_records(std::string_view prefix, const std::optional<std::string>& token,
                                 const DateWindow& window) {
    std::vector<std::pair<std::string, std::string>> params;
    if (token) {
        params.emplace_back("resumptionToken", *token);
    } else {
        params.emplace_back("metadataPrefix", std::string(prefix));
        if (window.from)
            params.emplace_back("from", *window.from);
        if (window.until)
            params.emplace_back("until", *window.until);
    }

    Response response;
    try {
        response = parse_response(fetch_with_retry(request_url("ListRecords", params)));
    } catch (const ProtocolError& e) {
        if (e.code() == "noRecordsMatch")
            return {};
        throw;
    }

    ListPage page;
    const xml::Element* list = response.root.child("ListRecords");
    if (list == nullptr)
        throw ProtocolError("badResponse", "ListRecords element missing");
    for (const xml::Element& child : list->children) {
        if (child.name == "record")
            page.records.push_back(read_record(child, response.body));
        else if (child.name == "resumptionToken" && !child.text.empty())
            page.resumption_token = child.text;
    }
    return page;
}

std::optional<OaiRecord> OaiClient::get_record(std::string_view prefix, std::string_view identifier) {
    Response response;
    try {
        response = parse_response(fetch_with_retry(request_url(
            "GetRecord", {{"metadataPrefix", std::string(prefix)}, {"identifier", std::string(identifier)}})));
    } catch (const ProtocolError& e) {
        if (e.code() == "idDoesNotExist")
            return std::nullopt;
        throw;
    }
    const xml::Element* get = response.root.child("GetRecord");
    const xml::Element* record = get != nullptr ? get->child("record") : nullptr;
    if (record == nullptr)
        throw ProtocolError("badResponse", "GetRecord without record");
    return read_record(*record, response.body);
}

std::vector<std::string> OaiClient::list_metadata_formats() {
    const Response response = parse_response(fetch_with_retry(request_url("ListMetadataFormats", {})));
    std::vector<std::string> out;
    const xml::Element* list = response.root.child("ListMetadataFormats");
    if (list == nullptr)
        throw ProtocolError("badResponse", "ListMetadataFormats element missing");
    for (const xml::Element* format : list->children_named("metadataFormat"))
        if (const xml::Element* prefix = format->child("metadataPrefix"))
            out.push_back(prefix->text);
    return out;
}

HarvestMode HarvestMode::id_range(std::uint64_t min_id, std::uint64_t max_id, std::string identifier_prefix) {
    if (min_id > max_id)
        throw Error("harvest id range " + std::to_string(min_id) + ".." + std::to_string(max_id) + " is empty");
    HarvestMode mode;
    mode.kind = Kind::id_range;
    mode.min_id = min_id;
    mode.max_id = max_id;
    mode.identifier_prefix = std::move(identifier_prefix);
    return mode;
}

namespace {

HarvestItem to_item(OaiRecord record) {
    HarvestItem item;
    if (!record.deleted && record.payload) {
        try {
            item.publication = parse_junii2(*record.payload, record.identifier);
        } catch (const Error& e) {
            item.error = e.what();
        }
    } else if (!record.deleted) {
        item.error = "record " + record.identifier + " has no metadata";
    }
    item.record = std::move(record);
    return item;
}

}  // namespace

void harvest(OaiClient& client, std::string_view prefix, const HarvestMode& mode, const HarvestCallback& on_item) {
    if (mode.kind == HarvestMode::Kind::id_range) {
        for (std::uint64_t id = mode.min_id;; ++id) {
            if (auto record = client.get_record(prefix, mode.identifier_prefix + std::to_string(id)))
                on_item(to_item(std::move(*record)));
            if (id == mode.max_id)
                break;
        }
        return;
    }

    const std::string format(prefix);
    ListPage page = client.list_records(format);
    while (true) {
        std::future<ListPage> next;
        if (page.resumption_token)
            next = std::async(std::launch::async, [&client, &format, token = *page.resumption_token] {
                return client.list_records(format, token);
            });
        for (OaiRecord& record : page.records)
            on_item(to_item(std::move(record)));
        if (!next.valid())
            break;
        page = next.get();
    }
}

}  // namespace jpbib::oai
