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

#include "jpbib/dblp_corpus.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <set>

#include "jpbib/utf8.hpp"
#include "jpbib/xml.hpp"

namespace jpbib::dblp {

namespace {

constexpr std::array<std::string_view, 7> kPublicationElements = {
    "article", "inproceedings", "proceedings", "book", "incollection", "phdthesis", "mastersthesis",
};

// Record-level elements that are known not to be publications.
constexpr std::array<std::string_view, 3> kNonPublicationElements = {"www", "person", "data"};

enum class Field { none, author, title, year, journal, pages, volume, other };

Field field_of(std::string_view name) {
    if (name == "author") return Field::author;
    if (name == "title") return Field::title;
    if (name == "year") return Field::year;
    if (name == "journal") return Field::journal;
    if (name == "pages") return Field::pages;
    if (name == "volume") return Field::volume;
    return Field::other;
}

class CorpusHandler final : public xml::SaxHandler {
public:
    explicit CorpusHandler(CorpusSink& sink) : sink_(sink) {}

    void start_element(std::string_view name, const xml::Attributes& attributes) override {
        ++depth_;
        if (depth_ == 2) {
            in_record_ = is_publication_element(name);
            if (!in_record_) {
                ++stats_.skipped_records;
                const bool known = std::find(kNonPublicationElements.begin(), kNonPublicationElements.end(),
                                             name) != kNonPublicationElements.end();
                if (!known)
                    warn("skipping unknown record element <" + std::string(name) + ">");
                return;
            }
            current_ = CorpusPublication{};
            current_.type = name;
            for (const auto& [k, v] : attributes)
                if (k == "key")
                    current_.key = v;
        } else if (depth_ == 3 && in_record_) {
            field_ = field_of(name);
            text_.clear();
        }
    }

    void end_element(std::string_view) override {
        if (depth_ == 3 && in_record_)
            finish_field();
        else if (depth_ == 2 && in_record_)
            finish_record();
        --depth_;
    }

    void characters(std::string_view text) override {
        if (in_record_ && depth_ >= 3 && field_ != Field::none && field_ != Field::other)
            text_.append(text);
    }

    const CorpusParseStats& stats() const noexcept { return stats_; }

private:
    void warn(std::string message) {
        ++stats_.warnings;
        sink_.on_warning(message);
    }

    void finish_field() {
        std::string value = utf8::collapse_whitespace(text_);
        switch (field_) {
        case Field::author:
            if (!value.empty())
                current_.authors.push_back(std::move(value));
            break;
        case Field::title: current_.title = std::move(value); break;
        case Field::journal: current_.journal = std::move(value); break;
        case Field::pages: current_.pages = std::move(value); break;
        case Field::volume: current_.volume = std::move(value); break;
        case Field::year: {
            int year = 0;
            const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), year);
            if (ec == std::errc() && ptr == value.data() + value.size())
                current_.year = year;
            else
                warn("record " + current_.key + ": unreadable year '" + value + "'");
            break;
        }
        case Field::none:
        case Field::other: break;
        }
        field_ = Field::none;
        text_.clear();
    }

    void finish_record() {
        in_record_ = false;
        if (current_.key.empty()) {
            warn("skipping " + current_.type + " record without key");
            ++stats_.skipped_records;
            return;
        }
        current_.id = static_cast<std::uint32_t>(++stats_.publications);
        sink_.on_publication(current_);
        for (const CoauthorEdge& edge : coauthor_edges(current_)) {
            sink_.on_edge(edge);
            ++stats_.edges;
        }
    }

    CorpusSink& sink_;
    CorpusParseStats stats_;
    CorpusPublication current_;
    int depth_ = 0;
    bool in_record_ = false;
    Field field_ = Field::none;
    std::string text_;
};

}  // namespace

bool is_publication_element(std::string_view name) noexcept {
    return std::find(kPublicationElements.begin(), kPublicationElements.end(), name) != kPublicationElements.end();
}

CorpusParseStats parse_corpus(std::istream& input, CorpusSink& sink) {
    CorpusHandler handler(sink);
    xml::parse_stream(input, handler);
    return handler.stats();
}

std::string title_key(std::string_view title) {
    std::string key = utf8::ascii_lower(utf8::collapse_whitespace(title));
    while (!key.empty() && (key.back() == '.' || key.back() == ' '))
        key.pop_back();
    return key;
}

std::vector<CoauthorEdge> coauthor_edges(const CorpusPublication& publication) {
    std::vector<CoauthorEdge> out;
    const auto& authors = publication.authors;
    for (std::size_t i = 0; i < authors.size(); ++i)
        for (std::size_t j = i + 1; j < authors.size(); ++j)
            if (authors[i] != authors[j])
                out.push_back({authors[i], authors[j], publication.id});
    return out;
}

void CorpusStore::on_publication(const CorpusPublication& publication) {
    const std::size_t index = publications_.size();
    publications_.push_back(publication);
    id_index_.emplace(publication.id, index);
    key_index_.emplace(publication.key, index);
    title_index_[title_key(publication.title)].push_back(index);
}

void CorpusStore::on_edge(const CoauthorEdge& edge) {
    edges_.push_back(edge);
    neighbours_[edge.author_a].push_back(edge.author_b);
    neighbours_[edge.author_b].push_back(edge.author_a);
}

const CorpusPublication* CorpusStore::by_id(std::uint32_t id) const {
    const auto it = id_index_.find(id);
    return it == id_index_.end() ? nullptr : &publications_[it->second];
}

const CorpusPublication* CorpusStore::by_key(std::string_view key) const {
    const auto it = key_index_.find(std::string(key));
    return it == key_index_.end() ? nullptr : &publications_[it->second];
}

std::optional<std::string> CorpusStore::find_publication(std::string_view title,
                                                         const std::vector<std::string>& authors,
                                                         const similarity::MatchConfig& cfg) const {
    const auto it = title_index_.find(title_key(title));
    if (it == title_index_.end())
        return std::nullopt;
    for (std::size_t index : it->second) {
        const CorpusPublication& candidate = publications_[index];
        for (const std::string& ours : authors)
            for (const std::string& theirs : candidate.authors)
                if (similarity::names_match(ours, theirs, cfg))
                    return candidate.key;
    }
    return std::nullopt;
}

std::vector<std::string> CorpusStore::common_coauthors(const std::vector<std::string>& authors,
                                                       const similarity::MatchConfig& cfg) const {
    if (authors.size() < 2)
        return {};

    // Which input authors reach each third party.
    std::map<std::string, std::set<std::size_t>> reached_by;
    for (std::size_t index = 0; index < authors.size(); ++index) {
        for (const auto& [corpus_author, coauthors] : neighbours_) {
            if (!similarity::names_match(authors[index], corpus_author, cfg))
                continue;
            for (const std::string& other : coauthors)
                reached_by[other].insert(index);
        }
    }

    std::vector<std::string> out;
    for (const auto& [name, sources] : reached_by) {
        if (sources.size() < 2)
            continue;
        const bool is_input = std::any_of(authors.begin(), authors.end(), [&](const std::string& a) {
            return similarity::names_match(a, name, cfg);
        });
        if (!is_input)
            out.push_back(name);
    }
    return out;
}

CorpusStore load_corpus(std::istream& input, CorpusParseStats* stats) {
    CorpusStore store;
    const CorpusParseStats s = parse_corpus(input, store);
    if (stats != nullptr)
        *stats = s;
    return store;
}

}  // namespace jpbib::dblp
