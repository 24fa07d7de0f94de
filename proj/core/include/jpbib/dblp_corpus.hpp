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

// Streaming reader for dblp.xml style corpora and the in-memory publication
// store used for duplicate detection and coauthor lookups.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "jpbib/similarity.hpp"

namespace jpbib::dblp {

struct CorpusPublication {
    std::uint32_t id = 0;  // 1-based, document order
    std::string key;
    std::string type;  // element name: article, inproceedings, ...
    std::vector<std::string> authors;
    std::string title;
    std::optional<int> year;
    std::optional<std::string> journal;
    std::optional<std::string> pages;
    std::optional<std::string> volume;

    friend bool operator==(const CorpusPublication&, const CorpusPublication&) = default;
};

struct CoauthorEdge {
    std::string author_a;
    std::string author_b;
    std::uint32_t publication_id = 0;

    friend bool operator==(const CoauthorEdge&, const CoauthorEdge&) = default;
};

/// Receives records as the parser finishes them.
class CorpusSink {
public:
    virtual ~CorpusSink() = default;
    virtual void on_publication(const CorpusPublication& publication) = 0;
    virtual void on_edge(const CoauthorEdge& edge) = 0;
    virtual void on_warning(const std::string& message) { (void)message; }
};

struct CorpusParseStats {
    std::size_t publications = 0;
    std::size_t edges = 0;
    std::size_t skipped_records = 0;
    std::size_t warnings = 0;
};

/// Element names treated as publications.
bool is_publication_element(std::string_view name) noexcept;

/// Streams the corpus into `sink`. Only the record being read is held in
/// memory. Throws XmlParseError with the position of malformed input.
CorpusParseStats parse_corpus(std::istream& input, CorpusSink& sink);

/// Title comparison key: trimmed, whitespace collapsed, case folded,
/// trailing periods removed.
std::string title_key(std::string_view title);

/// Every unordered author pair of a publication; identical names are not
/// paired.
std::vector<CoauthorEdge> coauthor_edges(const CorpusPublication& publication);

/// Publications and coauthor edges, indexed for the dedup and coauthor
/// queries. Read-only after loading.
class CorpusStore final : public CorpusSink {
public:
    void on_publication(const CorpusPublication& publication) override;
    void on_edge(const CoauthorEdge& edge) override;

    const std::vector<CorpusPublication>& publications() const noexcept { return publications_; }
    const std::vector<CoauthorEdge>& edges() const noexcept { return edges_; }
    const CorpusPublication* by_id(std::uint32_t id) const;
    const CorpusPublication* by_key(std::string_view key) const;

    /// Key of a stored publication with the same title and at least one
    /// author in common under names_match.
    std::optional<std::string> find_publication(std::string_view title, const std::vector<std::string>& authors,
                                                const similarity::MatchConfig& cfg = {}) const;

    /// Corpus authors outside `authors` who share an edge with at least two
    /// of them. Sorted.
    std::vector<std::string> common_coauthors(const std::vector<std::string>& authors,
                                              const similarity::MatchConfig& cfg = {}) const;

private:
    std::vector<CorpusPublication> publications_;
    std::vector<CoauthorEdge> edges_;
    std::unordered_map<std::uint32_t, std::size_t> id_index_;
    std::unordered_map<std::string, std::size_t> key_index_;
    std::unordered_map<std::string, std::vector<std::size_t>> title_index_;
    std::map<std::string, std::vector<std::string>> neighbours_;  // author -> coauthors, with repeats
};

/// Convenience: parse a whole corpus into a store.
CorpusStore load_corpus(std::istream& input, CorpusParseStats* stats = nullptr);

}  // namespace jpbib::dblp
