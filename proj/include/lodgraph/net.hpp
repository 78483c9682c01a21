/*
Copyright 2026 The lodgraph Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#pragma once

#include <chrono>
#include <filesystem>
#include <string>
#include <string_view>

namespace lodgraph {

bool is_url(std::string_view location) noexcept;

struct Availability {
  bool available = false;
  int http_status = 0;   // 0 for local paths and transport failures
  std::string detail;    // "ok", "404", "timeout", "missing", ...
};

/// HEAD request for URLs (redirects followed), stat for local paths. Never
/// downloads a body and never throws for unreachable targets.
Availability probe_location(const std::string& location, std::chrono::seconds timeout);

/// GETs `url` into `dest`. Throws AcquireError("download") on failure.
void download(const std::string& url, const std::filesystem::path& dest,
              std::chrono::seconds timeout);

/// Last path component of a URL, or `fallback` if there is none.
std::string url_basename(std::string_view url, std::string_view fallback = "download");

}  // namespace lodgraph
