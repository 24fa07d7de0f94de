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


#include "jpbib/mock_provider.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "jpbib/xml.hpp"

namespace jpbib::oai {

namespace {

constexpr std::string_view kResponseDate = "2012-11-13T00:00:00Z";

std::string envelope(const std::map<std::string, std::string>& params, const std::string& body) {
    std::string out =
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        "<OAI-PMH xmlns=\"http://www.openarchives.org/OAI/2.0/\">\n<responseDate>";
    out += kResponseDate;
    out += "</responseDate>\n<request";
    for (const auto& [key, value] : params) {
        out += ' ';
        out += key;
        out += "=\"";
        out += xml::escape(value, true);
        out += '"';
    }
    out += ">mock</request>\n";
    out += body;
    out += "</OAI-PMH>\n";
    return out;
}

std::string error_body(std::string_view code, std::string_view message) {
    return "<error code=\"" + std::string(code) + "\">" + xml::escape(message) + "</error>\n";
}

std::string render_record(const MockRecord& record) {
    std::string out = "<record><header";
    if (record.deleted)
        out += " status=\"deleted\"";
    out += "><identifier>" + xml::escape(record.identifier) + "</identifier><datestamp>" +
           xml::escape(record.datestamp) + "</datestamp></header>";
    if (!record.deleted)
        out += "<metadata>" + record.payload + "</metadata>";
    out += "</record>\n";
    return out;
}

std::string param(const std::map<std::string, std::string>& params, const std::string& key) {
    const auto it = params.find(key);
    return it == params.end() ? std::string() : it->second;
}

}  // namespace

MockDataProvider::MockDataProvider(std::vector<MockRecord> records, std::size_t page_size,
                                   std::vector<std::string> formats)
    : records_(std::move(records)), page_size_(page_size == 0 ? 1 : page_size), formats_(std::move(formats)) {}

MockDataProvider MockDataProvider::from_directory(const std::filesystem::path& directory) {
    const std::filesystem::path manifest_path = directory / "manifest.json";
    std::ifstream manifest_in(manifest_path);
    if (!manifest_in)
        throw IoError("cannot open " + manifest_path.string());
    nlohmann::json manifest;
    try {
        manifest_in >> manifest;
    } catch (const nlohmann::json::exception& e) {
        throw IoError(manifest_path.string() + ": " + e.what());
    }

    std::vector<MockRecord> records;
    for (const auto& entry : manifest.value("records", nlohmann::json::array())) {
        MockRecord record;
        record.identifier = entry.at("identifier").get<std::string>();
        record.datestamp = entry.value("datestamp", std::string("2012-01-01T00:00:00Z"));
        record.deleted = entry.value("deleted", false);
        if (!record.deleted) {
            const std::filesystem::path file = directory / entry.at("file").get<std::string>();
            std::ifstream in(file, std::ios::binary);
            if (!in)
                throw IoError("cannot open " + file.string());
            std::ostringstream buffer;
            buffer << in.rdbuf();
            record.payload = buffer.str();
            // Drop an XML declaration; the payload is embedded in a response.
            if (record.payload.rfind("<?xml", 0) == 0)
                record.payload.erase(0, record.payload.find("?>") + 2);
        }
        records.push_back(std::move(record));
    }
    return MockDataProvider(std::move(records), manifest.value("page_size", std::size_t{100}),
                            manifest.value("formats", std::vector<std::string>{"oai_dc", "junii2"}));
}

bool MockDataProvider::supports(const std::string& prefix) const {
    return std::find(formats_.begin(), formats_.end(), prefix) != formats_.end();
}

std::string MockDataProvider::respond(const std::map<std::string, std::string>& params) const {
    const std::string verb = param(params, "verb");
    if (verb == "ListRecords")
        return list_records(params);
    if (verb == "GetRecord")
        return get_record(params);
    if (verb == "ListMetadataFormats")
        return list_metadata_formats();
    return envelope(params, error_body("badVerb", "unsupported verb '" + verb + "'"));
}

std::string MockDataProvider::list_records(const std::map<std::string, std::string>& params) const {
    std::size_t offset = 0;
    std::string prefix;
    if (params.count("resumptionToken") != 0) {
        // Token layout: "<prefix>:<offset>".
        const std::string token = param(params, "resumptionToken");
        const std::size_t colon = token.rfind(':');
        const char* begin = token.data() + (colon == std::string::npos ? 0 : colon + 1);
        const char* end = token.data() + token.size();
        const auto [ptr, ec] = std::from_chars(begin, end, offset);
        if (colon == std::string::npos || ec != std::errc() || ptr != end || offset == 0 ||
            offset >= records_.size())
            return envelope(params, error_body("badResumptionToken", "unknown token '" + token + "'"));
        prefix = token.substr(0, colon);
    } else {
        prefix = param(params, "metadataPrefix");
    }
    if (!supports(prefix))
        return envelope(params, error_body("cannotDisseminateFormat", "format '" + prefix + "' not served"));
    if (records_.empty())
        return envelope(params, error_body("noRecordsMatch", "repository is empty"));

    const std::size_t stop = std::min(records_.size(), offset + page_size_);
    std::string body = "<ListRecords>\n";
    for (std::size_t i = offset; i < stop; ++i)
        body += render_record(records_[i]);
    if (stop < records_.size())
        body += "<resumptionToken completeListSize=\"" + std::to_string(records_.size()) + "\" cursor=\"" +
                std::to_string(offset) + "\">" + prefix + ":" + std::to_string(stop) + "</resumptionToken>\n";
    else if (offset > 0)
        body += "<resumptionToken completeListSize=\"" + std::to_string(records_.size()) + "\" cursor=\"" +
                std::to_string(offset) + "\"/>\n";
    body += "</ListRecords>\n";
    return envelope(params, body);
}

std::string MockDataProvider::get_record(const std::map<std::string, std::string>& params) const {
    const std::string prefix = param(params, "metadataPrefix");
    if (!supports(prefix))
        return envelope(params, error_body("cannotDisseminateFormat", "format '" + prefix + "' not served"));
    const std::string identifier = param(params, "identifier");
    const auto it = std::find_if(records_.begin(), records_.end(),
                                 [&](const MockRecord& r) { return r.identifier == identifier; });
    if (it == records_.end())
        return envelope(params, error_body("idDoesNotExist", "no record " + identifier));
    return envelope(params, "<GetRecord>\n" + render_record(*it) + "</GetRecord>\n");
}

std::string MockDataProvider::list_metadata_formats() const {
    std::string body = "<ListMetadataFormats>\n";
    for (const std::string& format : formats_)
        body += "<metadataFormat><metadataPrefix>" + xml::escape(format) + "</metadataPrefix></metadataFormat>\n";
    body += "</ListMetadataFormats>\n";
    return envelope({{"verb", "ListMetadataFormats"}}, body);
}

std::string MockFetcher::fetch(const std::string& url) {
    ++calls_;
    urls_.push_back(url);
    if (failures_left_ > 0) {
        --failures_left_;
        throw TransportError("injected failure for " + url);
    }
    return provider_.respond(query_parameters(url));
}

}  // namespace jpbib::oai
