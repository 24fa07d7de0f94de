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

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "jpbib/enamdict.hpp"

namespace jpbib::names {

/// Immutable in-memory name dictionary with a case-insensitive Latin index
/// and an exact surface (kanji/kana) index. Records keep their input order,
/// which is the order readings are reported in.
class NameDictionary {
public:
    NameDictionary() = default;

    /// Latin spellings with apostrophes are indexed with and without them.
    explicit NameDictionary(std::vector<enamdict::NameRecord> records);

    std::span<const enamdict::NameRecord> records() const noexcept { return records_; }
    std::size_t size() const noexcept { return records_.size(); }
    bool empty() const noexcept { return records_.empty(); }

    std::vector<const enamdict::NameRecord*> by_latin(std::string_view latin) const;
    std::vector<const enamdict::NameRecord*> by_surface(std::string_view surface) const;

private:
    using Index = std::unordered_map<std::string, std::vector<std::uint32_t>>;

    std::vector<const enamdict::NameRecord*> resolve(const Index& index, const std::string& key) const;

    std::vector<enamdict::NameRecord> records_;
    std::vector<enamdict::NameRecord> spelling_variants_;
    Index latin_index_;    // lowercase latin -> ids (ids >= size() address spelling_variants_)
    Index surface_index_;  // surface -> ids into records_
};

}  // namespace jpbib::names
