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


#include "jpbib/bht_export.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <iterator>

#include <spdlog/spdlog.h>

#include "jpbib/utf8.hpp"

namespace jpbib::bht {

namespace fs = std::filesystem;

namespace {

constexpr std::array<std::string_view, 12> kMonths = {
    "January", "February", "March",     "April",   "May",      "June",
    "July",    "August",   "September", "October", "November", "December",
};

void append_hex_reference(std::string& out, char32_t c) {
    constexpr char kHex[] = "0123456789ABCDEF";
    char digits[8];
    int n = 0;
    do {
        digits[n++] = kHex[c & 0xF];
        c >>= 4;
    } while (c != 0);
    out += "&#x";
    while (n > 0)
        out.push_back(digits[--n]);
    out.push_back(';');
}

std::string slug(std::string_view text) {
    std::string out;
    for (const char32_t c : utf8::decode(text)) {
        if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '-' || c == '_') {
            out.push_back(static_cast<char>(c));
        } else if (c < 128) {
            if (!out.empty() && out.back() != '_')
                out.push_back('_');
        } else {
            std::string ref;
            append_hex_reference(ref, c);
            out += 'x';
            out += ref.substr(3, ref.size() - 4);
        }
    }
    while (!out.empty() && out.back() == '_')
        out.pop_back();
    return out;
}

std::string join(const std::vector<std::string>& parts, std::string_view separator) {
    std::string out;
    for (const std::string& part : parts) {
        if (!out.empty())
            out += separator;
        out += part;
    }
    return out;
}

}  // namespace

std::string escape_non_ascii(std::string_view text, bool attribute) {
    std::string out;
    out.reserve(text.size());
    for (const char32_t c : utf8::decode(text)) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"':
            if (attribute)
                out += "&quot;";
            else
                out.push_back('"');
            break;
        default:
            if (c < 128)
                out.push_back(static_cast<char>(c));
            else
                append_hex_reference(out, c);
        }
    }
    return out;
}

std::string unescape(std::string_view text) {
    std::string out;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] != '&') {
            out.push_back(text[i]);
            continue;
        }
        const std::size_t semi = text.find(';', i);
        if (semi == std::string_view::npos) {
            out.push_back('&');
            continue;
        }
        const std::string_view name = text.substr(i + 1, semi - i - 1);
        bool decoded = true;
        if (name == "amp") out.push_back('&');
        else if (name == "lt") out.push_back('<');
        else if (name == "gt") out.push_back('>');
        else if (name == "quot") out.push_back('"');
        else if (name == "apos") out.push_back('\'');
        else if (name.size() > 1 && name[0] == '#') {
            const bool hex = name[1] == 'x' || name[1] == 'X';
            const std::string_view digits = name.substr(hex ? 2 : 1);
            std::uint32_t value = 0;
            const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value, hex ? 16 : 10);
            decoded = !digits.empty() && ec == std::errc() && ptr == digits.data() + digits.size();
            if (decoded)
                utf8::append(out, static_cast<char32_t>(value));
        } else {
            decoded = false;
        }
        if (decoded)
            i = semi;
        else
            out.push_back('&');
    }
    return out;
}

std::string date_label(std::string_view date) {
    const std::string trimmed = utf8::trim(date);
    int year = 0;
    const char* begin = trimmed.data();
    const char* end = trimmed.data() + trimmed.size();
    const auto [ptr, ec] = std::from_chars(begin, end, year);
    if (ec != std::errc() || ptr - begin != 4)
        return {};
    if (ptr == end || (*ptr != '-' && *ptr != '/'))
        return std::to_string(year);
    int month = 0;
    const char* month_begin = ptr + 1;
    const auto month_result = std::from_chars(month_begin, end, month);
    if (month_result.ec != std::errc() || month < 1 || month > 12)
        return std::to_string(year);
    return std::string(kMonths[static_cast<std::size_t>(month - 1)]) + " " + std::to_string(year);
}

std::string terminate_title(std::string_view title) {
    std::string out = utf8::collapse_whitespace(title);
    if (out.empty() || (out.back() != '.' && out.back() != '?' && out.back() != '!'))
        out.push_back('.');
    return out;
}

std::string display_name(const names::AuthorResolution& author) {
    if (author.latin)
        return author.latin->display();
    if (author.kanji)
        return author.kanji->family + author.kanji->given;
    return {};
}

BhtEntry make_entry(const oai::HarvestedPublication& publication, std::vector<names::AuthorResolution> authors,
                    std::vector<std::string> common_coauthors, std::optional<std::string> dblp_key) {
    BhtEntry entry;
    entry.volume = publication.volume.value_or("");
    entry.number = publication.number.value_or("");
    entry.date_label = publication.date ? date_label(*publication.date) : std::string();
    entry.authors = std::move(authors);

    const oai::Title* english = publication.title_in(oai::Language::en);
    const oai::Title* japanese = publication.title_in(oai::Language::ja);
    const oai::Title* shown = english != nullptr ? english : &publication.titles.front();
    entry.title = shown->text;
    if (publication.language == oai::Language::ja && japanese != nullptr)
        entry.original_title = OriginalTitle{japanese->text, "ja", publication.publication_type};

    if (publication.pages && !publication.pages->empty())
        entry.pages = *publication.pages;
    entry.ee = publication.source_url;
    entry.common_coauthors = std::move(common_coauthors);
    entry.dblp_key = std::move(dblp_key);
    return entry;
}

std::string render_spf(const BhtEntry& entry) {
    std::vector<std::string> header;
    if (!entry.volume.empty())
        header.push_back("Volume " + entry.volume);
    if (!entry.number.empty())
        header.push_back("Number " + entry.number);
    if (!entry.date_label.empty())
        header.push_back(entry.date_label);

    std::string out;
    if (!header.empty())
        out += "<h2>" + escape_non_ascii(join(header, ", ")) + "</h2>\n";
    out += "<ul>\n";

    if (entry.authors.empty())
        spdlog::warn("BHT entry '{}' has no authors", entry.title);
    std::vector<std::string> shown;
    for (const names::AuthorResolution& author : entry.authors)
        shown.push_back(escape_non_ascii(display_name(author)));
    out += "<li>" + join(shown, ", ") + ":\n";
    out += escape_non_ascii(terminate_title(entry.title)) + "\n";
    out += escape_non_ascii(entry.pages.empty() ? std::string("0-") : entry.pages) + "\n";
    if (entry.ee)
        out += "<ee>" + escape_non_ascii(*entry.ee) + "</ee>\n";

    for (const names::AuthorResolution& author : entry.authors) {
        const std::string name = display_name(author);
        if (author.kanji) {
            out += "<originalname";
            if (author.latin)
                out += " latin=\"" + escape_non_ascii(author.latin->display(), true) + "\"";
            out += ">" + escape_non_ascii(author.kanji->family + "," + author.kanji->given) + "</originalname>\n";
        }
        out += "<status name=\"" + escape_non_ascii(name, true) + "\">" +
               escape_non_ascii(names::to_string(author.status)) + "</status>\n";
        if (!author.latin && !author.candidates.empty()) {
            std::vector<std::string> candidates;
            for (const names::PersonName& candidate : author.candidates)
                candidates.push_back(candidate.display());
            out += "<namecandidates kanji=\"" + escape_non_ascii(name, true) + "\">" +
                   escape_non_ascii(join(candidates, ", ")) + "</namecandidates>\n";
        }
    }

    if (entry.original_title)
        out += "<originaltitle lang=\"" + escape_non_ascii(entry.original_title->lang, true) + "\" type=\"" +
               escape_non_ascii(entry.original_title->type, true) + "\">" +
               escape_non_ascii(entry.original_title->text) + "</originaltitle>\n";
    if (!entry.common_coauthors.empty())
        out += "<commoncoauthors>" + escape_non_ascii(join(entry.common_coauthors, ", ")) + "</commoncoauthors>\n";
    if (entry.dblp_key)
        out += "<dblpkey>" + escape_non_ascii(*entry.dblp_key) + "</dblpkey>\n";
    out += "</ul>\n";
    return out;
}

fs::path spf_path(const fs::path& root, const oai::HarvestedPublication& publication) {
    std::string journal = publication.journal ? slug(*publication.journal) : std::string();
    if (journal.empty())
        journal = "unknown-journal";
    const std::string volume = publication.volume ? slug(*publication.volume) : std::string();
    const std::string number = publication.number ? slug(*publication.number) : std::string();
    const std::string issue = (volume.empty() ? "0" : volume) + "-" + (number.empty() ? "0" : number);

    std::string_view id = publication.identifier;
    if (const std::size_t colon = id.rfind(':'); colon != std::string_view::npos)
        id.remove_prefix(colon + 1);
    std::string file = slug(id);
    if (file.empty())
        file = "record";
    return root / journal / issue / (file + ".bht");
}

void write_file(const fs::path& path, std::string_view text) {
    std::error_code ec;
    if (path.has_parent_path())
        fs::create_directories(path.parent_path(), ec);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("cannot write " + path.string());
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out)
        throw IoError("write to " + path.string() + " failed");
}

std::size_t concatenate(const fs::path& root, std::vector<std::string>* errors) {
    if (!fs::is_directory(root))
        throw IoError("BHT root " + root.string() + " is not a directory");

    std::vector<fs::path> directories{root};
    std::error_code walk_error;
    for (fs::recursive_directory_iterator it(root, walk_error), end; !walk_error && it != end;
         it.increment(walk_error))
        if (it->is_directory())
            directories.push_back(it->path());
    if (walk_error && errors != nullptr)
        errors->push_back(root.string() + ": " + walk_error.message());
    std::sort(directories.begin(), directories.end());

    std::size_t written = 0;
    for (const fs::path& directory : directories) {
        try {
            std::vector<fs::path> files;
            for (const fs::directory_entry& entry : fs::directory_iterator(directory))
                if (entry.is_regular_file() && entry.path().extension() == ".bht" &&
                    entry.path().filename() != kConcatenatedName)
                    files.push_back(entry.path());
            if (files.empty())
                continue;
            std::sort(files.begin(), files.end(),
                      [](const fs::path& a, const fs::path& b) { return a.filename() < b.filename(); });

            std::string joined;
            for (const fs::path& file : files) {
                std::ifstream in(file, std::ios::binary);
                if (!in)
                    throw IoError("cannot read " + file.string());
                joined.append(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
            }
            write_file(directory / kConcatenatedName, joined);
            ++written;
        } catch (const std::exception& e) {
            spdlog::error("concatenation in {} failed: {}", directory.string(), e.what());
            if (errors != nullptr)
                errors->push_back(directory.string() + ": " + e.what());
        }
    }
    return written;
}

}  // namespace jpbib::bht
