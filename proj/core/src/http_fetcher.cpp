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


#include "jpbib/http_fetcher.hpp"

#include <httplib.h>

namespace jpbib::oai {

std::string HttpFetcher::fetch(const std::string& url) {
    const std::size_t scheme_end = url.find("://");
    if (scheme_end == std::string::npos)
        throw TransportError("not an http url: " + url);
    const std::size_t path_start = url.find('/', scheme_end + 3);
    const std::string origin = url.substr(0, path_start);
    const std::string path = path_start == std::string::npos ? "/" : url.substr(path_start);

    httplib::Client client(origin);
    client.set_follow_location(true);
    client.set_connection_timeout(timeout_);
    client.set_read_timeout(timeout_);
    const httplib::Result result = client.Get(path);
    if (!result)
        throw TransportError("GET " + url + " failed: " + httplib::to_string(result.error()));
    if (result->status != 200)
        throw TransportError("GET " + url + " returned HTTP " + std::to_string(result->status));
    return result->body;
}

}  // namespace jpbib::oai
