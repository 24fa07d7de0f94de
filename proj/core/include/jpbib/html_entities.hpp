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

#include <optional>
#include <string>
#include <string_view>

namespace jpbib::xml {

/// Code point of an HTML 4 named entity ("ouml" -> U+00F6).
std::optional<char32_t> lookup_html_entity(std::string_view name) noexcept;

/// The entity table as DTD declarations, fed to the XML parser in place of
/// external DTDs such as dblp.dtd.
const std::string& html_entity_dtd();

}  // namespace jpbib::xml
