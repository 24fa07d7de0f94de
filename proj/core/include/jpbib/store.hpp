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


// Embedded tabular store (SQLite) for the dictionary, the corpus and the
// harvest results. Table names come from the configuration.

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "jpbib/dblp_corpus.hpp"
#include "jpbib/enamdict.hpp"
#include "jpbib/junii2.hpp"
#include "jpbib/name_matching.hpp"

struct sqlite3;

namespace jpbib::pipeline {

namespace detail {
class Statement;
}

struct OaiTables {
    std::string publications = "oai_publications";
    std::string authors = "oai_authors";
    std::string titles = "oai_titles";
    std::string contributors = "oai_contributors";
    std::string descriptions = "oai_descriptions";
};

/// One harvested author row.
struct StoredAuthor {
    std::optional<std::string> latin_raw;
    std::optional<std::string> kanji_raw;
    names::AuthorResolution resolution;
};

class Store {
public:
    /// Opens or creates the store file; ":memory:" gives a private in-memory
    /// store. Throws IoError.
    explicit Store(const std::string& path, std::size_t batch_size = 1000);
    ~Store();
    Store(const Store&) = delete;
    Store& operator=(const Store&) = delete;

    bool has_table(const std::string& table) const;
    std::size_t row_count(const std::string& table) const;

    /// Replaces `table` with the given records.
    void write_names(const std::string& table, const std::vector<enamdict::NameRecord>& records);
    std::vector<enamdict::NameRecord> read_names(const std::string& table) const;

    /// Sink that writes corpus records into fresh publication and edge
    /// tables, committing every batch_size rows. Call finish() at the end.
    class CorpusWriter final : public dblp::CorpusSink {
    public:
        void on_publication(const dblp::CorpusPublication& publication) override;
        void on_edge(const dblp::CoauthorEdge& edge) override;
        void on_warning(const std::string& message) override;
        void finish();

        CorpusWriter(CorpusWriter&&) noexcept;
        ~CorpusWriter() override;

    private:
        friend class Store;
        CorpusWriter(Store& store, const std::string& publications, const std::string& edges);
        Store& store_;
        std::unique_ptr<detail::Statement> insert_publication_;
        std::unique_ptr<detail::Statement> insert_edge_;
        std::size_t warnings_ = 0;
    };
    CorpusWriter corpus_writer(const std::string& publication_table, const std::string& edge_table);
    dblp::CorpusStore read_corpus(const std::string& publication_table, const std::string& edge_table) const;

    /// Drops and recreates the harvest tables.
    void reset_harvest(const OaiTables& tables);
    /// Appends one harvested publication with its authors; returns its row id.
    std::int64_t write_publication(const OaiTables& tables, const oai::HarvestedPublication& publication,
                                   const std::string& datestamp, const std::vector<StoredAuthor>& authors,
                                   const std::optional<std::string>& dblp_key);
    std::optional<oai::HarvestedPublication> read_publication(const OaiTables& tables,
                                                              const std::string& identifier) const;
    std::vector<StoredAuthor> read_authors(const OaiTables& tables, const std::string& identifier) const;

    /// Commits the pending batch.
    void flush();

    /// Every row of `table` rendered as text, ordered by id. For comparisons.
    std::vector<std::string> dump(const std::string& table) const;

private:
    void exec(const std::string& sql) const;
    void begin_batch();
    void tick();

    sqlite3* db_ = nullptr;
    std::size_t batch_size_;
    std::size_t pending_ = 0;
    bool in_transaction_ = false;
};

}  // namespace jpbib::pipeline
