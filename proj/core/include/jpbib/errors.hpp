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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace jpbib {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    ConfigError(const std::string& key, const std::string& what)
        : Error("config error at " + key + ": " + what), key_(key) {}

    const std::string& key() const noexcept { return key_; }

private:
    std::string key_;
};

/// Input normalized to nothing.
class EmptyNameError : public Error {
public:
    using Error::Error;
};

class VariantExplosionError : public Error {
public:
    VariantExplosionError(std::size_t sites, std::size_t cap)
        : Error("vowel expansion over " + std::to_string(sites) + " sites exceeds cap of " +
                std::to_string(cap)),
          sites_(sites), cap_(cap) {}

    std::size_t sites() const noexcept { return sites_; }
    std::size_t cap() const noexcept { return cap_; }

private:
    std::size_t sites_;
    std::size_t cap_;
};

/// XML syntax error with the position expat reported.
class XmlParseError : public Error {
public:
    XmlParseError(const std::string& message, std::size_t line, std::size_t column)
        : Error(message + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

class PrerequisiteError : public Error {
public:
    using Error::Error;
};

}  // namespace jpbib
