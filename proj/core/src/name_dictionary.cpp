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

#include "jpbib/name_dictionary.hpp"

#include "jpbib/utf8.hpp"

namespace jpbib::names {

NameDictionary::NameDictionary(std::vector<enamdict::NameRecord> records)
    : records_(std::move(records)) {
    for (std::uint32_t id = 0; id < records_.size(); ++id) {
        const enamdict::NameRecord& record = records_[id];
        surface_index_[record.surface].push_back(id);
        latin_index_[utf8::ascii_lower(record.latin)].push_back(id);
        const auto variants = enamdict::apostrophe_variants(record);
        for (std::size_t v = 1; v < variants.size(); ++v) {
            const auto variant_id = static_cast<std::uint32_t>(records_.size() + spelling_variants_.size());
            latin_index_[utf8::ascii_lower(variants[v].latin)].push_back(variant_id);
            spelling_variants_.push_back(variants[v]);
        }
    }
}

std::vector<const enamdict::NameRecord*> NameDictionary::resolve(const Index& index,
                                                                 const std::string& key) const {
    std::vector<const enamdict::NameRecord*> out;
    const auto it = index.find(key);
    if (it == index.end())
        return out;
    out.reserve(it->second.size());
    for (std::uint32_t id : it->second)
        out.push_back(id < records_.size() ? &records_[id] : &spelling_variants_[id - records_.size()]);
    return out;
}

std::vector<const enamdict::NameRecord*> NameDictionary::by_latin(std::string_view latin) const {
    return resolve(latin_index_, utf8::ascii_lower(latin));
}

std::vector<const enamdict::NameRecord*> NameDictionary::by_surface(std::string_view surface) const {
    return resolve(surface_index_, std::string(surface));
}

}  // namespace jpbib::names
