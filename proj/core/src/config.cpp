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


#include "jpbib/config.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <spdlog/spdlog.h>

#include "jpbib/utf8.hpp"

namespace jpbib::pipeline {

namespace {

using Setter = std::function<void(const std::string&)>;

bool to_bool(const std::string& key, const std::string& value) {
    const std::string v = utf8::ascii_lower(value);
    if (v == "true" || v == "1" || v == "yes" || v == "on")
        return true;
    if (v == "false" || v == "0" || v == "no" || v == "off")
        return false;
    throw ConfigError(key, "expected true or false, got '" + value + "'");
}

template <typename Int>
Int to_int(const std::string& key, const std::string& value) {
    Int out{};
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (value.empty() || ec != std::errc() || ptr != value.data() + value.size())
        throw ConfigError(key, "expected a non-negative integer, got '" + value + "'");
    return out;
}

double to_ratio(const std::string& key, const std::string& value) {
    std::istringstream in(value);
    double out = 0;
    if (!(in >> out) || !(in >> std::ws).eof())
        throw ConfigError(key, "expected a number, got '" + value + "'");
    return out;
}

std::string nonempty(const std::string& key, const std::string& value) {
    if (value.empty())
        throw ConfigError(key, "must not be empty");
    return value;
}

std::map<std::string, Setter> setters(Config& c) {
    auto text = [](std::string& field) { return [&field](const std::string& v) { field = v; }; };
    auto path = [](std::string& field, std::string key) {
        return [&field, key](const std::string& v) { field = nonempty(key, v); };
    };
    auto flag = [](bool& field, std::string key) {
        return [&field, key](const std::string& v) { field = to_bool(key, v); };
    };
    return {
        {"db.url", text(c.db.url)},
        {"db.db", path(c.db.db, "db.db")},
        {"db.user", text(c.db.user)},
        {"db.password", text(c.db.password)},
        {"db.batchsize", [&c](const std::string& v) { c.db.batchsize = to_int<std::size_t>("db.batchsize", v); }},
        {"japnamesdb.table", path(c.japnamesdb.table, "japnamesdb.table")},
        {"japnamesdb.useunclassifiednames", flag(c.japnamesdb.useunclassifiednames, "japnamesdb.useunclassifiednames")},
        {"dblpdb.dblptable", path(c.dblpdb.dblptable, "dblpdb.dblptable")},
        {"dblpdb.authorscounttable", path(c.dblpdb.authorscounttable, "dblpdb.authorscounttable")},
        {"oaidb.publicationtable", path(c.oaidb.publicationtable, "oaidb.publicationtable")},
        {"oaidb.authorstable", path(c.oaidb.authorstable, "oaidb.authorstable")},
        {"oaidb.titlestable", path(c.oaidb.titlestable, "oaidb.titlestable")},
        {"oaidb.contributorstable", path(c.oaidb.contributorstable, "oaidb.contributorstable")},
        {"oaidb.descriptionstable", path(c.oaidb.descriptionstable, "oaidb.descriptionstable")},
        {"enamdict.file", path(c.enamdict.file, "enamdict.file")},
        {"harvester.filespath", path(c.harvester.filespath, "harvester.filespath")},
        {"harvester.minid", [&c](const std::string& v) { c.harvester.minid = to_int<std::uint64_t>("harvester.minid", v); }},
        {"harvester.maxid", [&c](const std::string& v) { c.harvester.maxid = to_int<std::uint64_t>("harvester.maxid", v); }},
        {"harvester.uselistrecords", flag(c.harvester.uselistrecords, "harvester.uselistrecords")},
        {"harvester.endpoint", path(c.harvester.endpoint, "harvester.endpoint")},
        {"harvester.metadataprefix", path(c.harvester.metadataprefix, "harvester.metadataprefix")},
        {"harvester.identifierprefix", text(c.harvester.identifierprefix)},
        {"harvester.delayms", [&c](const std::string& v) { c.harvester.delayms = to_int<std::uint32_t>("harvester.delayms", v); }},
        {"harvester.maxattempts",
         [&c](const std::string& v) { c.harvester.maxattempts = to_int<std::uint32_t>("harvester.maxattempts", v); }},
        {"harvester.backoffms",
         [&c](const std::string& v) { c.harvester.backoffms = to_int<std::uint32_t>("harvester.backoffms", v); }},
        {"dblp.xmlfile", path(c.dblp.xmlfile, "dblp.xmlfile")},
        {"bhtexport.path", path(c.bhtexport.path, "bhtexport.path")},
        {"bhtexport.showcommoncoauthors", flag(c.bhtexport.showcommoncoauthors, "bhtexport.showcommoncoauthors")},
        {"bhtexport.levthreshold",
         [&c](const std::string& v) { c.bhtexport.levthreshold = to_int<std::size_t>("bhtexport.levthreshold", v); }},
        {"bhtexport.matchthreshold",
         [&c](const std::string& v) { c.bhtexport.matchthreshold = to_ratio("bhtexport.matchthreshold", v); }},
        {"log.path", path(c.log.path, "log.path")},
    };
}

bool is_identifier(const std::string& name) {
    if (name.empty() || (name[0] >= '0' && name[0] <= '9'))
        return false;
    for (const char ch : name)
        if (!((ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') || (ch >= '0' && ch <= '9') || ch == '_'))
            return false;
    return true;
}

}  // namespace

std::filesystem::path Config::resolve(const std::string& path) const {
    const std::filesystem::path p(path);
    return p.is_absolute() ? p : (base_dir / p).lexically_normal();
}

void Config::validate() const {
    if (harvester.minid > harvester.maxid)
        throw ConfigError("harvester.minid", "minid " + std::to_string(harvester.minid) + " exceeds maxid " +
                                                 std::to_string(harvester.maxid));
    if (bhtexport.matchthreshold < 0.0 || bhtexport.matchthreshold > 1.0)
        throw ConfigError("bhtexport.matchthreshold", "must lie in [0, 1]");
    if (harvester.maxattempts == 0)
        throw ConfigError("harvester.maxattempts", "must be at least 1");
    if (db.batchsize == 0)
        throw ConfigError("db.batchsize", "must be at least 1");
    const std::pair<const char*, const std::string*> tables[] = {
        {"japnamesdb.table", &japnamesdb.table},
        {"dblpdb.dblptable", &dblpdb.dblptable},
        {"dblpdb.authorscounttable", &dblpdb.authorscounttable},
        {"oaidb.publicationtable", &oaidb.publicationtable},
        {"oaidb.authorstable", &oaidb.authorstable},
        {"oaidb.titlestable", &oaidb.titlestable},
        {"oaidb.contributorstable", &oaidb.contributorstable},
        {"oaidb.descriptionstable", &oaidb.descriptionstable},
    };
    for (const auto& [key, value] : tables)
        if (!is_identifier(*value))
            throw ConfigError(key, "table name '" + *value + "' is not a plain identifier");
}

Config parse_config_string(std::string_view text, const std::filesystem::path& base_dir) {
    boost::property_tree::ptree tree;
    std::istringstream in{std::string(text)};
    try {
        boost::property_tree::ini_parser::read_ini(in, tree);
    } catch (const boost::property_tree::ini_parser_error& e) {
        throw ConfigError("line " + std::to_string(e.line()), e.message());
    }

    Config config;
    config.base_dir = base_dir.empty() ? std::filesystem::path(".") : base_dir;
    const auto table = setters(config);
    for (const auto& [section, keys] : tree) {
        if (keys.empty() && !keys.data().empty()) {
            config.warnings.push_back("key '" + section + "' outside any section ignored");
            continue;
        }
        for (const auto& [key, value] : keys) {
            const std::string name = section + "." + key;
            const auto it = table.find(name);
            if (it == table.end()) {
                config.warnings.push_back("unknown key " + name + " ignored");
                continue;
            }
            it->second(utf8::trim(value.data()));
        }
    }
    for (const std::string& warning : config.warnings)
        spdlog::warn("config: {}", warning);
    config.validate();
    return config;
}

Config parse_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ConfigError(path.string(), "cannot open config file");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config_string(buffer.str(), path.has_parent_path() ? path.parent_path() : ".");
}

}  // namespace jpbib::pipeline
