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


// Extended BHT output: one Single Publication Format file per harvested
// publication, with the Japanese-name extension elements, and the per
// directory all.bht concatenation.

#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jpbib/junii2.hpp"
#include "jpbib/name_matching.hpp"

namespace jpbib::bht {

struct OriginalTitle {
    std::string text;
    std::string lang;
    std::string type;
};

struct BhtEntry {
    std::string volume;
    std::string number;
    std::string date_label;  // "October 2011"
    std::vector<names::AuthorResolution> authors;
    std::string title;
    std::string pages = "0-";
    std::optional<std::string> ee;
    std::optional<OriginalTitle> original_title;
    std::vector<std::string> common_coauthors;
    std::optional<std::string> dblp_key;
};

/// Code points above 127 become &#xHEX; (uppercase, unpadded); &, < and >
/// become named entities, and so does " when `attribute` is set.
std::string escape_non_ascii(std::string_view text, bool attribute = false);

/// Inverse of escape_non_ascii; also accepts decimal references.
std::string unescape(std::string_view text);

/// "MonthName YYYY" for a junii2 date (YYYY-MM[-DD]); the year alone when no
/// month is given; empty when the date is unreadable.
std::string date_label(std::string_view date);

/// Appends a period unless the title already ends in . ? or !
std::string terminate_title(std::string_view title);

/// Name shown for an author in the list and in status elements: the Latin
/// display form, otherwise the kanji as written.
std::string display_name(const names::AuthorResolution& author);

/// Entry for a harvested publication. The BHT title is the English title when
/// there is one; the Japanese title goes to originaltitle when the
/// publication language is Japanese.
BhtEntry make_entry(const oai::HarvestedPublication& publication, std::vector<names::AuthorResolution> authors,
                    std::vector<std::string> common_coauthors = {}, std::optional<std::string> dblp_key = {});

/// Single Publication Format text, pure ASCII, LF line endings.
std::string render_spf(const BhtEntry& entry);

/// <root>/<journal>/<volume>-<number>/<identifier suffix>.bht
std::filesystem::path spf_path(const std::filesystem::path& root, const oai::HarvestedPublication& publication);

/// Writes `text` to `path`, creating parent directories. Throws IoError.
void write_file(const std::filesystem::path& path, std::string_view text);

inline constexpr std::string_view kConcatenatedName = "all.bht";

/// Writes all.bht in every directory below `root` (inclusive) that holds at
/// least one other .bht file, joining them in filename order. Failures are
/// reported per directory through `errors` and do not stop the walk.
/// Returns the number of all.bht files written.
std::size_t concatenate(const std::filesystem::path& root, std::vector<std::string>* errors = nullptr);

}  // namespace jpbib::bht
