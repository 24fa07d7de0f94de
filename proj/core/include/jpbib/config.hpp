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


// config.ini reader. Section and key names follow the tool's documented
// layout; keys not listed here are reported as warnings.

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "jpbib/errors.hpp"

namespace jpbib::pipeline {

inline constexpr std::string_view kDefaultEndpoint = "https://ipsj.ixsq.nii.ac.jp/ej/?action=repository_oaipmh";
inline constexpr std::string_view kDefaultIdentifierPrefix = "oai:ipsj.ixsq.nii.ac.jp:";

struct Config {
    struct Db {
        std::string url;
        std::string db = "jpbib.sqlite";  // store file for the embedded backend
        std::string user;
        std::string password;
        std::size_t batchsize = 1000;
    } db;
    struct JapNamesDb {
        std::string table = "japnames";
        bool useunclassifiednames = false;
    } japnamesdb;
    struct DblpDb {
        std::string dblptable = "dblp";
        std::string authorscounttable = "dblpauthors";
    } dblpdb;
    struct OaiDb {
        std::string publicationtable = "oai_publications";
        std::string authorstable = "oai_authors";
        std::string titlestable = "oai_titles";
        std::string contributorstable = "oai_contributors";
        std::string descriptionstable = "oai_descriptions";
    } oaidb;
    struct Enamdict {
        std::string file = "./enamdict";
    } enamdict;
    struct Harvester {
        std::string filespath = "./files-harvester";
        std::uint64_t minid = 1;
        std::uint64_t maxid = 100000;
        bool uselistrecords = true;
        std::string endpoint = std::string(kDefaultEndpoint);  // or mock:<directory>
        std::string metadataprefix = "junii2";
        std::string identifierprefix = std::string(kDefaultIdentifierPrefix);
        std::uint32_t delayms = 0;
        std::uint32_t maxattempts = 3;
        std::uint32_t backoffms = 500;
    } harvester;
    struct Dblp {
        std::string xmlfile = "/dblp/dblp.xml";
    } dblp;
    struct BhtExport {
        std::string path = "./bht";
        bool showcommoncoauthors = true;
        std::size_t levthreshold = 2;
        double matchthreshold = 0.75;
    } bhtexport;
    struct Log {
        std::string path = "./log";
    } log;

    /// Directory of the config file; relative paths resolve against it.
    std::filesystem::path base_dir = ".";
    std::vector<std::string> warnings;

    std::filesystem::path resolve(const std::string& path) const;
    void validate() const;
};

/// Throws ConfigError naming section.key for unreadable files and bad values.
Config parse_config(const std::filesystem::path& path);
Config parse_config_string(std::string_view text, const std::filesystem::path& base_dir = ".");

}  // namespace jpbib::pipeline
