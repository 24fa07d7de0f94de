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


#include "jpbib/store.hpp"

#include <sqlite3.h>

#include <spdlog/spdlog.h>

namespace jpbib::pipeline {

namespace detail {

class Statement {
public:
    Statement(sqlite3* db, const std::string& sql) : db_(db) {
        if (sqlite3_prepare_v2(db, sql.c_str(), static_cast<int>(sql.size()), &stmt_, nullptr) != SQLITE_OK)
            throw IoError("SQL prepare failed (" + std::string(sqlite3_errmsg(db)) + "): " + sql);
    }
    ~Statement() { sqlite3_finalize(stmt_); }
    Statement(const Statement&) = delete;
    Statement& operator=(const Statement&) = delete;

    Statement& bind(int index, const std::string& value) {
        check(sqlite3_bind_text(stmt_, index, value.data(), static_cast<int>(value.size()), SQLITE_TRANSIENT));
        return *this;
    }
    Statement& bind(int index, const std::optional<std::string>& value) {
        if (value)
            return bind(index, *value);
        check(sqlite3_bind_null(stmt_, index));
        return *this;
    }
    Statement& bind(int index, std::int64_t value) {
        check(sqlite3_bind_int64(stmt_, index, value));
        return *this;
    }
    Statement& bind(int index, std::optional<int> value) {
        if (value)
            return bind(index, static_cast<std::int64_t>(*value));
        check(sqlite3_bind_null(stmt_, index));
        return *this;
    }

    /// True while rows remain.
    bool step() {
        const int rc = sqlite3_step(stmt_);
        if (rc == SQLITE_ROW)
            return true;
        if (rc != SQLITE_DONE)
            throw IoError(std::string("SQL step failed: ") + sqlite3_errmsg(db_));
        return false;
    }

    void run() {
        step();
        reset();
    }

    void reset() {
        sqlite3_reset(stmt_);
        sqlite3_clear_bindings(stmt_);
    }

    std::optional<std::string> text(int column) const {
        if (sqlite3_column_type(stmt_, column) == SQLITE_NULL)
            return std::nullopt;
        const auto* data = reinterpret_cast<const char*>(sqlite3_column_text(stmt_, column));
        return std::string(data, static_cast<std::size_t>(sqlite3_column_bytes(stmt_, column)));
    }
    std::string text_or_empty(int column) const { return text(column).value_or(""); }
    std::optional<std::int64_t> integer(int column) const {
        if (sqlite3_column_type(stmt_, column) == SQLITE_NULL)
            return std::nullopt;
        return sqlite3_column_int64(stmt_, column);
    }
    int columns() const { return sqlite3_column_count(stmt_); }

private:
    void check(int rc) const {
        if (rc != SQLITE_OK)
            throw IoError(std::string("SQL bind failed: ") + sqlite3_errmsg(db_));
    }

    sqlite3* db_;
    sqlite3_stmt* stmt_ = nullptr;
};

}  // namespace detail

using detail::Statement;

namespace {

std::string quoted(const std::string& table) {
    std::string out = "\"";
    for (const char c : table) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

std::string join_lines(const std::vector<std::string>& parts) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0)
            out += '\n';
        out += parts[i];
    }
    return out;
}

std::vector<std::string> split(const std::string& text, char separator) {
    std::vector<std::string> out;
    if (text.empty())
        return out;
    std::size_t start = 0;
    while (true) {
        const std::size_t end = text.find(separator, start);
        out.push_back(text.substr(start, end - start));
        if (end == std::string::npos)
            break;
        start = end + 1;
    }
    return out;
}

std::optional<std::string> part(const std::optional<names::PersonName>& name, bool given) {
    if (!name)
        return std::nullopt;
    return given ? name->given : name->family;
}

}  // namespace

Store::Store(const std::string& path, std::size_t batch_size) : batch_size_(batch_size == 0 ? 1 : batch_size) {
    if (path != ":memory:") {
        const std::filesystem::path p(path);
        std::error_code ec;
        if (p.has_parent_path())
            std::filesystem::create_directories(p.parent_path(), ec);
        if (ec)
            throw IoError("cannot create directory for store " + path + ": " + ec.message());
    }
    if (sqlite3_open(path.c_str(), &db_) != SQLITE_OK) {
        const std::string message = db_ != nullptr ? sqlite3_errmsg(db_) : "out of memory";
        sqlite3_close(db_);
        db_ = nullptr;
        throw IoError("cannot open store " + path + ": " + message);
    }
    exec("PRAGMA foreign_keys = ON");
    exec("PRAGMA journal_mode = MEMORY");
}

Store::~Store() {
    try {
        flush();
    } catch (const std::exception& e) {
        spdlog::error("store: final commit failed: {}", e.what());
    }
    sqlite3_close(db_);
}

void Store::exec(const std::string& sql) const {
    char* error = nullptr;
    if (sqlite3_exec(db_, sql.c_str(), nullptr, nullptr, &error) != SQLITE_OK) {
        const std::string message = error != nullptr ? error : "unknown error";
        sqlite3_free(error);
        throw IoError("SQL failed (" + message + "): " + sql);
    }
}

void Store::begin_batch() {
    if (!in_transaction_) {
        exec("BEGIN");
        in_transaction_ = true;
        pending_ = 0;
    }
}

void Store::tick() {
    if (++pending_ >= batch_size_) {
        exec("COMMIT");
        in_transaction_ = false;
        begin_batch();
    }
}

void Store::flush() {
    if (in_transaction_) {
        exec("COMMIT");
        in_transaction_ = false;
        pending_ = 0;
    }
}

bool Store::has_table(const std::string& table) const {
    Statement q(db_, "SELECT 1 FROM sqlite_master WHERE type = 'table' AND name = ?");
    q.bind(1, table);
    return q.step();
}

std::size_t Store::row_count(const std::string& table) const {
    if (!has_table(table))
        return 0;
    Statement q(db_, "SELECT COUNT(*) FROM " + quoted(table));
    q.step();
    return static_cast<std::size_t>(q.integer(0).value_or(0));
}

void Store::write_names(const std::string& table, const std::vector<enamdict::NameRecord>& records) {
    flush();
    exec("DROP TABLE IF EXISTS " + quoted(table));
    exec("CREATE TABLE " + quoted(table) +
         " (id INTEGER PRIMARY KEY, surface TEXT NOT NULL, reading TEXT, latin TEXT NOT NULL,"
         " types TEXT NOT NULL, type_bits INTEGER NOT NULL)");
    Statement insert(db_, "INSERT INTO " + quoted(table) +
                              " (surface, reading, latin, types, type_bits) VALUES (?, ?, ?, ?, ?)");
    begin_batch();
    for (const enamdict::NameRecord& record : records) {
        insert.bind(1, record.surface)
            .bind(2, record.reading)
            .bind(3, record.latin)
            .bind(4, record.types.to_string())
            .bind(5, static_cast<std::int64_t>(record.types.bits()));
        insert.run();
        tick();
    }
    flush();
}

std::vector<enamdict::NameRecord> Store::read_names(const std::string& table) const {
    if (!has_table(table))
        throw PrerequisiteError("name table '" + table + "' does not exist; run the --enamdict stage first");
    std::vector<enamdict::NameRecord> out;
    Statement q(db_, "SELECT surface, reading, latin, type_bits FROM " + quoted(table) + " ORDER BY id");
    while (q.step())
        out.push_back({q.text_or_empty(0), q.text(1), q.text_or_empty(2),
                       enamdict::NameTypes::from_bits(static_cast<unsigned>(q.integer(3).value_or(0)))});
    return out;
}

Store::CorpusWriter::CorpusWriter(Store& store, const std::string& publications, const std::string& edges)
    : store_(store) {
    store.flush();
    store.exec("DROP TABLE IF EXISTS " + quoted(edges));
    store.exec("DROP TABLE IF EXISTS " + quoted(publications));
    store.exec("CREATE TABLE " + quoted(publications) +
               " (id INTEGER PRIMARY KEY, dblpkey TEXT NOT NULL, type TEXT NOT NULL, authors TEXT NOT NULL,"
               " title TEXT NOT NULL, year INTEGER, journal TEXT, pages TEXT, volume TEXT)");
    store.exec("CREATE TABLE " + quoted(edges) +
               " (id INTEGER PRIMARY KEY, author_a TEXT NOT NULL, author_b TEXT NOT NULL,"
               " publication_id INTEGER NOT NULL REFERENCES " +
               quoted(publications) + " (id))");
    insert_publication_ = std::make_unique<Statement>(
        store.db_, "INSERT INTO " + quoted(publications) +
                       " (id, dblpkey, type, authors, title, year, journal, pages, volume)"
                       " VALUES (?, ?, ?, ?, ?, ?, ?, ?, ?)");
    insert_edge_ = std::make_unique<Statement>(
        store.db_, "INSERT INTO " + quoted(edges) + " (author_a, author_b, publication_id) VALUES (?, ?, ?)");
    store.begin_batch();
}

Store::CorpusWriter::CorpusWriter(CorpusWriter&&) noexcept = default;
Store::CorpusWriter::~CorpusWriter() = default;

void Store::CorpusWriter::on_publication(const dblp::CorpusPublication& p) {
    insert_publication_->bind(1, static_cast<std::int64_t>(p.id))
        .bind(2, p.key)
        .bind(3, p.type)
        .bind(4, join_lines(p.authors))
        .bind(5, p.title)
        .bind(6, p.year)
        .bind(7, p.journal)
        .bind(8, p.pages)
        .bind(9, p.volume);
    insert_publication_->run();
    store_.tick();
}

void Store::CorpusWriter::on_edge(const dblp::CoauthorEdge& edge) {
    insert_edge_->bind(1, edge.author_a).bind(2, edge.author_b).bind(3, static_cast<std::int64_t>(edge.publication_id));
    insert_edge_->run();
    store_.tick();
}

void Store::CorpusWriter::on_warning(const std::string& message) {
    ++warnings_;
    spdlog::warn("corpus: {}", message);
}

void Store::CorpusWriter::finish() { store_.flush(); }

Store::CorpusWriter Store::corpus_writer(const std::string& publication_table, const std::string& edge_table) {
    return CorpusWriter(*this, publication_table, edge_table);
}

dblp::CorpusStore Store::read_corpus(const std::string& publication_table, const std::string& edge_table) const {
    if (!has_table(publication_table) || !has_table(edge_table))
        throw PrerequisiteError("corpus tables '" + publication_table + "'/'" + edge_table +
                                "' do not exist; run the --parse-dblp stage first");
    dblp::CorpusStore corpus;
    Statement pubs(db_, "SELECT id, dblpkey, type, authors, title, year, journal, pages, volume FROM " +
                            quoted(publication_table) + " ORDER BY id");
    while (pubs.step()) {
        dblp::CorpusPublication p;
        p.id = static_cast<std::uint32_t>(pubs.integer(0).value_or(0));
        p.key = pubs.text_or_empty(1);
        p.type = pubs.text_or_empty(2);
        p.authors = split(pubs.text_or_empty(3), '\n');
        p.title = pubs.text_or_empty(4);
        if (const auto year = pubs.integer(5))
            p.year = static_cast<int>(*year);
        p.journal = pubs.text(6);
        p.pages = pubs.text(7);
        p.volume = pubs.text(8);
        corpus.on_publication(p);
    }
    Statement edges(db_, "SELECT author_a, author_b, publication_id FROM " + quoted(edge_table) + " ORDER BY id");
    while (edges.step())
        corpus.on_edge({edges.text_or_empty(0), edges.text_or_empty(1),
                        static_cast<std::uint32_t>(edges.integer(2).value_or(0))});
    return corpus;
}

void Store::reset_harvest(const OaiTables& t) {
    flush();
    for (const std::string* table : {&t.authors, &t.titles, &t.contributors, &t.descriptions, &t.publications})
        exec("DROP TABLE IF EXISTS " + quoted(*table));
    const std::string ref = " INTEGER NOT NULL REFERENCES " + quoted(t.publications) + " (id)";
    exec("CREATE TABLE " + quoted(t.publications) +
         " (id INTEGER PRIMARY KEY, identifier TEXT NOT NULL UNIQUE, datestamp TEXT, type TEXT NOT NULL,"
         " date TEXT, pages TEXT, volume TEXT, number TEXT, language TEXT NOT NULL, source_url TEXT,"
         " journal TEXT, dblpkey TEXT)");
    exec("CREATE TABLE " + quoted(t.authors) + " (id INTEGER PRIMARY KEY, publication_id" + ref +
         ", position INTEGER NOT NULL, latin TEXT, kanji TEXT, latin_given TEXT, latin_family TEXT,"
         " kanji_given TEXT, kanji_family TEXT, candidates TEXT, status TEXT NOT NULL)");
    exec("CREATE TABLE " + quoted(t.titles) + " (id INTEGER PRIMARY KEY, publication_id" + ref +
         ", position INTEGER NOT NULL, title TEXT NOT NULL, language TEXT NOT NULL)");
    for (const std::string* table : {&t.contributors, &t.descriptions})
        exec("CREATE TABLE " + quoted(*table) + " (id INTEGER PRIMARY KEY, publication_id" + ref +
             ", position INTEGER NOT NULL, value TEXT NOT NULL)");
}

std::int64_t Store::write_publication(const OaiTables& t, const oai::HarvestedPublication& p,
                                      const std::string& datestamp, const std::vector<StoredAuthor>& authors,
                                      const std::optional<std::string>& dblp_key) {
    begin_batch();
    Statement insert(db_, "INSERT INTO " + quoted(t.publications) +
                              " (identifier, datestamp, type, date, pages, volume, number, language, source_url,"
                              " journal, dblpkey) VALUES (?, ?, ?, ?, ?, ?, ?, ?, ?, ?, ?)");
    insert.bind(1, p.identifier)
        .bind(2, datestamp)
        .bind(3, p.publication_type)
        .bind(4, p.date)
        .bind(5, p.pages)
        .bind(6, p.volume)
        .bind(7, p.number)
        .bind(8, std::string(oai::to_string(p.language)))
        .bind(9, p.source_url)
        .bind(10, p.journal)
        .bind(11, dblp_key);
    insert.run();
    const std::int64_t id = sqlite3_last_insert_rowid(db_);

    Statement author_insert(db_, "INSERT INTO " + quoted(t.authors) +
                                     " (publication_id, position, latin, kanji, latin_given, latin_family,"
                                     " kanji_given, kanji_family, candidates, status)"
                                     " VALUES (?, ?, ?, ?, ?, ?, ?, ?, ?, ?)");
    for (std::size_t i = 0; i < authors.size(); ++i) {
        const StoredAuthor& a = authors[i];
        std::vector<std::string> candidates;
        for (const names::PersonName& c : a.resolution.candidates)
            candidates.push_back(c.given + "\t" + c.family);
        author_insert.bind(1, id)
            .bind(2, static_cast<std::int64_t>(i))
            .bind(3, a.latin_raw)
            .bind(4, a.kanji_raw)
            .bind(5, part(a.resolution.latin, true))
            .bind(6, part(a.resolution.latin, false))
            .bind(7, part(a.resolution.kanji, true))
            .bind(8, part(a.resolution.kanji, false))
            .bind(9, candidates.empty() ? std::optional<std::string>() : join_lines(candidates))
            .bind(10, std::string(names::to_string(a.resolution.status)));
        author_insert.run();
    }

    Statement title_insert(db_, "INSERT INTO " + quoted(t.titles) +
                                    " (publication_id, position, title, language) VALUES (?, ?, ?, ?)");
    for (std::size_t i = 0; i < p.titles.size(); ++i) {
        title_insert.bind(1, id)
            .bind(2, static_cast<std::int64_t>(i))
            .bind(3, p.titles[i].text)
            .bind(4, std::string(oai::to_string(p.titles[i].language)));
        title_insert.run();
    }

    const std::pair<const std::string*, const std::vector<std::string>*> lists[] = {
        {&t.contributors, &p.contributors}, {&t.descriptions, &p.descriptions}};
    for (const auto& [table, values] : lists) {
        Statement value_insert(db_, "INSERT INTO " + quoted(*table) +
                                        " (publication_id, position, value) VALUES (?, ?, ?)");
        for (std::size_t i = 0; i < values->size(); ++i) {
            value_insert.bind(1, id).bind(2, static_cast<std::int64_t>(i)).bind(3, (*values)[i]);
            value_insert.run();
        }
    }
    tick();
    return id;
}

std::optional<oai::HarvestedPublication> Store::read_publication(const OaiTables& t,
                                                                 const std::string& identifier) const {
    Statement q(db_, "SELECT id, type, date, pages, volume, number, language, source_url, journal FROM " +
                         quoted(t.publications) + " WHERE identifier = ?");
    q.bind(1, identifier);
    if (!q.step())
        return std::nullopt;
    const std::int64_t id = q.integer(0).value_or(0);
    oai::HarvestedPublication p;
    p.identifier = identifier;
    p.publication_type = q.text_or_empty(1);
    p.date = q.text(2);
    p.pages = q.text(3);
    p.volume = q.text(4);
    p.number = q.text(5);
    p.language = oai::parse_language(q.text_or_empty(6));
    p.source_url = q.text(7);
    p.journal = q.text(8);

    Statement titles(db_, "SELECT title, language FROM " + quoted(t.titles) +
                              " WHERE publication_id = ? ORDER BY position");
    titles.bind(1, id);
    while (titles.step())
        p.titles.push_back({titles.text_or_empty(0), oai::parse_language(titles.text_or_empty(1))});

    Statement authors(db_, "SELECT latin, kanji FROM " + quoted(t.authors) +
                               " WHERE publication_id = ? ORDER BY position");
    authors.bind(1, id);
    while (authors.step())
        p.creators.push_back({authors.text(0), authors.text(1)});

    for (auto [table, values] : {std::pair{&t.contributors, &p.contributors}, std::pair{&t.descriptions, &p.descriptions}}) {
        Statement v(db_, "SELECT value FROM " + quoted(*table) + " WHERE publication_id = ? ORDER BY position");
        v.bind(1, id);
        while (v.step())
            values->push_back(v.text_or_empty(0));
    }
    return p;
}

std::vector<StoredAuthor> Store::read_authors(const OaiTables& t, const std::string& identifier) const {
    Statement q(db_, "SELECT a.latin, a.kanji, a.latin_given, a.latin_family, a.kanji_given, a.kanji_family,"
                     " a.candidates, a.status FROM " +
                         quoted(t.authors) + " a JOIN " + quoted(t.publications) +
                         " p ON a.publication_id = p.id WHERE p.identifier = ? ORDER BY a.position");
    q.bind(1, identifier);
    std::vector<StoredAuthor> out;
    while (q.step()) {
        StoredAuthor a;
        a.latin_raw = q.text(0);
        a.kanji_raw = q.text(1);
        if (q.text(2) || q.text(3))
            a.resolution.latin = names::PersonName{q.text_or_empty(2), q.text_or_empty(3)};
        if (q.text(4) || q.text(5))
            a.resolution.kanji = names::PersonName{q.text_or_empty(4), q.text_or_empty(5)};
        for (const std::string& line : split(q.text_or_empty(6), '\n')) {
            const std::size_t tab = line.find('\t');
            a.resolution.candidates.push_back({line.substr(0, tab), tab == std::string::npos ? "" : line.substr(tab + 1)});
        }
        const auto status = names::parse_name_status(q.text_or_empty(7));
        if (!status)
            throw IoError("unknown name status '" + q.text_or_empty(7) + "' in " + t.authors);
        a.resolution.status = *status;
        out.push_back(std::move(a));
    }
    return out;
}

std::vector<std::string> Store::dump(const std::string& table) const {
    std::vector<std::string> rows;
    if (!has_table(table))
        return rows;
    Statement q(db_, "SELECT * FROM " + quoted(table) + " ORDER BY id");
    while (q.step()) {
        std::string row;
        for (int c = 0; c < q.columns(); ++c) {
            if (c > 0)
                row += '|';
            row += q.text(c).value_or("NULL");
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace jpbib::pipeline
