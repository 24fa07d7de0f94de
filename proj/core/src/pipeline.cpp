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


#include "jpbib/pipeline.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <memory>
#include <ostream>

#include <spdlog/sinks/basic_file_sink.h>
#include <spdlog/sinks/ostream_sink.h>
#include <spdlog/spdlog.h>

#include "jpbib/bht_export.hpp"
#include "jpbib/enamdict.hpp"
#include "jpbib/http_fetcher.hpp"
#include "jpbib/mock_provider.hpp"
#include "jpbib/name_dictionary.hpp"
#include "jpbib/name_matching.hpp"

namespace jpbib::pipeline {

namespace fs = std::filesystem;

namespace {

constexpr std::string_view kMockScheme = "mock:";

std::string timestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    localtime_r(&t, &tm);
    char buffer[32];
    std::strftime(buffer, sizeof buffer, "%Y%m%d-%H%M%S", &tm);
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(now.time_since_epoch()).count() % 1000;
    char out[48];
    std::snprintf(out, sizeof out, "%s-%03d", buffer, static_cast<int>(ms));
    return out;
}

// Installs a per-run logger (file under [log] path plus warnings to `err`)
// and restores the previous default logger when destroyed.
class RunLog {
public:
    RunLog(const Config& config, std::ostream& err) : previous_(spdlog::default_logger()) {
        std::vector<spdlog::sink_ptr> sinks;
        auto console = std::make_shared<spdlog::sinks::ostream_sink_mt>(err);
        console->set_level(spdlog::level::warn);
        console->set_pattern("jpbib: %l: %v");
        sinks.push_back(console);

        const fs::path dir = config.resolve(config.log.path);
        std::error_code ec;
        fs::create_directories(dir, ec);
        path_ = dir / ("jpbib-" + timestamp() + ".log");
        try {
            auto file = std::make_shared<spdlog::sinks::basic_file_sink_mt>(path_.string());
            file->set_level(spdlog::level::info);
            sinks.push_back(file);
        } catch (const spdlog::spdlog_ex& e) {
            err << "jpbib: warning: no log file: " << e.what() << "\n";
            path_.clear();
        }
        auto logger = std::make_shared<spdlog::logger>("jpbib", sinks.begin(), sinks.end());
        logger->set_level(spdlog::level::info);
        logger->flush_on(spdlog::level::warn);
        spdlog::set_default_logger(logger);
    }

    ~RunLog() {
        spdlog::default_logger()->flush();
        spdlog::set_default_logger(previous_);
    }

    RunLog(const RunLog&) = delete;
    RunLog& operator=(const RunLog&) = delete;

private:
    std::shared_ptr<spdlog::logger> previous_;
    fs::path path_;
};

names::MatchOptions match_options(const Config& config) {
    names::MatchOptions options;
    options.use_unclassified = config.japnamesdb.useunclassifiednames;
    return options;
}

similarity::MatchConfig similarity_config(const Config& config) {
    similarity::MatchConfig cfg;
    cfg.lev_threshold = config.bhtexport.levthreshold;
    cfg.match_threshold = config.bhtexport.matchthreshold;
    cfg.validate();
    return cfg;
}

std::ifstream open_input(const fs::path& path, std::string_view what) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open " + std::string(what) + " " + path.string());
    return in;
}

}  // namespace

Flags parse_flags(const std::vector<std::string>& args) {
    Flags flags;
    for (std::size_t i = 0; i < args.size(); ++i) {
        const std::string& arg = args[i];
        if (arg == "--parse-dblp" || arg == "-d") {
            flags.parse_dblp = true;
        } else if (arg == "--enamdict" || arg == "-e") {
            flags.enamdict = true;
        } else if (arg == "--harvest" || arg == "-h") {
            flags.harvest = true;
        } else if (arg == "--concatenate-bht" || arg == "-b") {
            flags.concatenate = true;
        } else if (arg == "--all" || arg == "-a") {
            flags.parse_dblp = flags.enamdict = flags.harvest = flags.concatenate = true;
        } else if (arg == "--help" || arg == "-help") {
            flags.help = true;
        } else if (arg == "--config" || arg == "-c") {
            if (i + 1 >= args.size())
                throw UsageError(arg + " needs a path");
            flags.config_path = args[++i];
        } else if (arg.rfind("--config=", 0) == 0) {
            flags.config_path = arg.substr(9);
        } else {
            throw UsageError("unknown argument '" + arg + "'");
        }
    }
    if (flags.config_path.empty())
        throw UsageError("empty config path");
    return flags;
}

std::string usage_text() {
    return "usage: jpbib [options] stage...\n"
           "\n"
           "stages (run in this order when combined):\n"
           "  --parse-dblp, -d        parse the DBLP XML file into the corpus tables\n"
           "  --enamdict, -e          convert the ENAMDICT file into the name table\n"
           "  --harvest, -h           harvest the OAI-PMH provider, match names, store the\n"
           "                          results and write BHT files (needs -d and -e first)\n"
           "  --concatenate-bht, -b   write all.bht in every BHT directory (needs -h first)\n"
           "  --all, -a               all of the above\n"
           "\n"
           "options:\n"
           "  --config, -c PATH       configuration file (default ./config.ini)\n"
           "  --help, -help           show this text\n"
           "\n"
           "exit status: 0 ok, 1 usage, 2 configuration, 3 missing prerequisite,\n"
           "             4 I/O, 5 malformed input, 6 harvest transport or protocol\n";
}

OaiTables oai_tables(const Config& config) {
    return {config.oaidb.publicationtable, config.oaidb.authorstable, config.oaidb.titlestable,
            config.oaidb.contributorstable, config.oaidb.descriptionstable};
}

std::size_t run_enamdict_stage(const Config& config, Store& store) {
    const fs::path path = config.resolve(config.enamdict.file);
    spdlog::info("enamdict: reading {}", path.string());
    std::ifstream in = open_input(path, "ENAMDICT file");
    const enamdict::ParseResult parsed = enamdict::parse_file(in, config.japnamesdb.useunclassifiednames);
    for (const enamdict::ParseWarning& w : parsed.warnings)
        spdlog::warn("enamdict line {}: {}: {}", w.line_number, enamdict::to_string(w.kind), w.raw);
    store.write_names(config.japnamesdb.table, parsed.records);
    spdlog::info("enamdict: {} names stored in {}, {} warnings", parsed.records.size(), config.japnamesdb.table,
                 parsed.warnings.size());
    return parsed.records.size();
}

dblp::CorpusParseStats run_dblp_stage(const Config& config, Store& store) {
    const fs::path path = config.resolve(config.dblp.xmlfile);
    spdlog::info("dblp: reading {}", path.string());
    std::ifstream in = open_input(path, "DBLP file");
    Store::CorpusWriter writer = store.corpus_writer(config.dblpdb.dblptable, config.dblpdb.authorscounttable);
    const dblp::CorpusParseStats stats = dblp::parse_corpus(in, writer);
    writer.finish();
    spdlog::info("dblp: {} publications, {} coauthor edges, {} skipped records", stats.publications, stats.edges,
                 stats.skipped_records);
    return stats;
}

RunStatistics run_harvest_stage(const Config& config, Store& store, oai::Fetcher* fetcher) {
    const names::NameDictionary dict(store.read_names(config.japnamesdb.table));
    const dblp::CorpusStore corpus = store.read_corpus(config.dblpdb.dblptable, config.dblpdb.authorscounttable);
    const names::MatchOptions options = match_options(config);
    const similarity::MatchConfig similarity_cfg = similarity_config(config);
    spdlog::info("harvest: {} names and {} corpus publications loaded", dict.size(), corpus.publications().size());

    std::string endpoint = config.harvester.endpoint;
    std::unique_ptr<oai::MockDataProvider> provider;
    std::unique_ptr<oai::Fetcher> owned;
    if (fetcher == nullptr) {
        if (endpoint.rfind(kMockScheme, 0) == 0) {
            const fs::path dir = config.resolve(endpoint.substr(kMockScheme.size()));
            provider = std::make_unique<oai::MockDataProvider>(oai::MockDataProvider::from_directory(dir));
            owned = std::make_unique<oai::MockFetcher>(*provider);
            endpoint = "http://mock.invalid/oai";
        } else {
            owned = std::make_unique<oai::HttpFetcher>();
        }
        fetcher = owned.get();
    }

    oai::ClientOptions client_options;
    client_options.max_attempts = static_cast<int>(config.harvester.maxattempts);
    client_options.backoff = std::chrono::milliseconds(config.harvester.backoffms);
    client_options.politeness_delay = std::chrono::milliseconds(config.harvester.delayms);
    client_options.raw_response_dir = config.resolve(config.harvester.filespath);
    oai::OaiClient client(endpoint, *fetcher, client_options);

    const oai::HarvestMode mode =
        config.harvester.uselistrecords
            ? oai::HarvestMode::list()
            : oai::HarvestMode::id_range(config.harvester.minid, config.harvester.maxid,
                                         config.harvester.identifierprefix);
    const OaiTables tables = oai_tables(config);
    const fs::path bht_root = config.resolve(config.bhtexport.path);
    store.reset_harvest(tables);

    RunStatistics stats;
    oai::harvest(client, config.harvester.metadataprefix, mode, [&](oai::HarvestItem&& item) {
        HarvestEvent event;
        event.deleted = item.record.deleted;
        if (item.error) {
            event.parse_error = true;
            spdlog::warn("harvest: {}: {}", item.record.identifier, *item.error);
        }
        if (item.publication) {
            const oai::HarvestedPublication& pub = *item.publication;
            event.publication_type = pub.publication_type;
            event.language = pub.language;

            std::vector<StoredAuthor> authors;
            std::vector<names::AuthorResolution> resolutions;
            std::vector<std::string> latin_names;
            for (const oai::Creator& creator : pub.creators) {
                names::AuthorResolution r = names::resolve_author(creator.latin, creator.kanji, dict, options);
                event.author_statuses.push_back(r.status);
                if (r.latin)
                    latin_names.push_back(r.latin->display());
                authors.push_back({creator.latin, creator.kanji, r});
                resolutions.push_back(std::move(r));
            }

            const oai::Title* english = pub.title_in(oai::Language::en);
            const std::string& title = english != nullptr ? english->text : pub.titles.front().text;
            std::optional<std::string> dblp_key = corpus.find_publication(title, latin_names, similarity_cfg);
            event.duplicate = dblp_key.has_value();
            std::vector<std::string> common;
            if (config.bhtexport.showcommoncoauthors)
                common = corpus.common_coauthors(latin_names, similarity_cfg);

            store.write_publication(tables, pub, item.record.datestamp, authors, dblp_key);
            const bht::BhtEntry entry = bht::make_entry(pub, std::move(resolutions), std::move(common), dblp_key);
            bht::write_file(bht::spf_path(bht_root, pub), bht::render_spf(entry));
        }
        stats.add(event);
    });
    store.flush();
    spdlog::info("harvest: {} records with metadata, {} deleted, {} unparsable, {} requests",
                 stats.records_with_metadata, stats.deleted_records, stats.parse_errors, client.requests_sent());
    return stats;
}

std::size_t run_concatenate_stage(const Config& config) {
    const fs::path root = config.resolve(config.bhtexport.path);
    std::vector<std::string> errors;
    const std::size_t written = bht::concatenate(root, &errors);
    spdlog::info("concatenate: {} all.bht files written under {}", written, root.string());
    if (!errors.empty())
        throw IoError(std::to_string(errors.size()) + " directories could not be concatenated, first: " +
                      errors.front());
    return written;
}

void check_prerequisites(const Flags& flags, const Config& config, const Store& store) {
    if (flags.harvest) {
        if (!flags.enamdict && !store.has_table(config.japnamesdb.table))
            throw PrerequisiteError("--harvest needs the name table '" + config.japnamesdb.table +
                                    "'; run --enamdict first");
        if (!flags.parse_dblp &&
            (!store.has_table(config.dblpdb.dblptable) || !store.has_table(config.dblpdb.authorscounttable)))
            throw PrerequisiteError("--harvest needs the corpus tables '" + config.dblpdb.dblptable + "' and '" +
                                    config.dblpdb.authorscounttable + "'; run --parse-dblp first");
    }
    if (flags.concatenate && !flags.harvest && !fs::is_directory(config.resolve(config.bhtexport.path)))
        throw PrerequisiteError("--concatenate-bht needs the BHT directory " +
                                config.resolve(config.bhtexport.path).string() + "; run --harvest first");
}

int run(const Flags& flags, std::ostream& out, std::ostream& err) {
    if (flags.help) {
        out << usage_text();
        return kExitOk;
    }
    if (!flags.any_stage()) {
        err << "jpbib: no stage selected\n" << usage_text();
        return kExitUsage;
    }

    try {
        const Config config = parse_config(flags.config_path);
        RunLog log(config, err);
        try {
            Store store(config.resolve(config.db.db).string(), config.db.batchsize);
            check_prerequisites(flags, config, store);

            if (flags.parse_dblp)
                run_dblp_stage(config, store);
            if (flags.enamdict)
                run_enamdict_stage(config, store);
            if (flags.harvest) {
                const RunStatistics stats = run_harvest_stage(config, store);
                out << stats.to_text();
                const fs::path stats_path = config.resolve(config.log.path) / "statistics.json";
                bht::write_file(stats_path, stats.to_json());
            }
            if (flags.concatenate)
                run_concatenate_stage(config);
            return kExitOk;
        } catch (const std::exception& e) {
            // Reported once through the run log, which also echoes to `err`.
            spdlog::error("{}", e.what());
            throw;
        }
    } catch (const ConfigError& e) {
        err << "jpbib: " << e.what() << "\n";
        return kExitConfig;
    } catch (const PrerequisiteError&) {
        return kExitPrerequisite;
    } catch (const XmlParseError&) {
        return kExitParse;
    } catch (const oai::TransportError&) {
        return kExitTransport;
    } catch (const oai::ProtocolError&) {
        return kExitTransport;
    } catch (const std::exception&) {
        return kExitIo;
    }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args(argv + 1, argv + argc);
    Flags flags;
    try {
        flags = parse_flags(args);
    } catch (const UsageError& e) {
        err << "jpbib: " << e.what() << "\n" << usage_text();
        return kExitUsage;
    }
    return run(flags, out, err);
}

}  // namespace jpbib::pipeline
