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


// Fetcher over HTTP(S) backed by cpp-httplib.

#pragma once

#include <chrono>
#include <string>

#include "jpbib/oai_client.hpp"

namespace jpbib::oai {

class HttpFetcher final : public Fetcher {
public:
    explicit HttpFetcher(std::chrono::seconds timeout = std::chrono::seconds(60)) : timeout_(timeout) {}

    /// GET `url`; a connection failure or a non-200 reply raises TransportError.
    std::string fetch(const std::string& url) override;

private:
    std::chrono::seconds timeout_;
};

}  // namespace jpbib::oai
