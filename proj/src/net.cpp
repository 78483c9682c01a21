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

#include "lodgraph/net.hpp"

#include <httplib.h>

#include <fstream>

#include "lodgraph/error.hpp"

namespace fs = std::filesystem;

namespace lodgraph {

namespace {

struct SplitUrl {
  std::string origin;  // scheme://host[:port]
  std::string target;  // /path?query
};

SplitUrl split_url(std::string_view url) {
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string_view::npos)
    throw Error(ErrorCode::InvalidArgument, "not a URL: " + std::string(url));
  const auto path_start = url.find('/', scheme_end + 3);
  if (path_start == std::string_view::npos) return {std::string(url), "/"};
  return {std::string(url.substr(0, path_start)), std::string(url.substr(path_start))};
}

httplib::Client make_client(const SplitUrl& u, std::chrono::seconds timeout) {
  httplib::Client cli(u.origin);
  cli.set_follow_location(true);
  cli.set_connection_timeout(timeout);
  cli.set_read_timeout(timeout);
  cli.set_write_timeout(timeout);
  return cli;
}

}  // namespace

bool is_url(std::string_view location) noexcept {
  return location.starts_with("http://") || location.starts_with("https://");
}

Availability probe_location(const std::string& location, std::chrono::seconds timeout) {
  if (!is_url(location)) {
    std::error_code ec;
    std::string path = location;
    if (path.starts_with("file://")) path = path.substr(7);
    if (fs::is_regular_file(path, ec)) return {true, 0, "ok"};
    return {false, 0, "missing"};
  }
  try {
    const SplitUrl u = split_url(location);
    auto cli = make_client(u, timeout);
    auto res = cli.Head(u.target);
    if (!res) return {false, 0, httplib::to_string(res.error())};
    const bool ok = res->status >= 200 && res->status < 400;
    return {ok, res->status, ok ? "ok" : std::to_string(res->status)};
  } catch (const std::exception& e) {
    return {false, 0, e.what()};
  }
}

void download(const std::string& url, const fs::path& dest, std::chrono::seconds timeout) {
  const SplitUrl u = split_url(url);
  auto cli = make_client(u, timeout);
  std::ofstream out(dest, std::ios::binary | std::ios::trunc);
  if (!out) throw AcquireError("download", "cannot write " + dest.string());
  int status = 0;
  auto res = cli.Get(
      u.target,
      [&](const httplib::Response& r) {
        status = r.status;
        return r.status >= 200 && r.status < 300;
      },
      [&](const char* data, std::size_t len) {
        out.write(data, static_cast<std::streamsize>(len));
        return static_cast<bool>(out);
      });
  if (!res) {
    if (status != 0) throw AcquireError("download", url + " returned HTTP " + std::to_string(status));
    throw AcquireError("download", url + ": " + httplib::to_string(res.error()));
  }
  out.close();
  if (!out) throw AcquireError("download", "cannot write " + dest.string());
}

std::string url_basename(std::string_view url, std::string_view fallback) {
  auto end = url.find_first_of("?#");
  if (end != std::string_view::npos) url = url.substr(0, end);
  const auto scheme_end = url.find("://");
  if (scheme_end != std::string_view::npos) url = url.substr(scheme_end + 3);
  const auto slash = url.rfind('/');
  if (slash == std::string_view::npos || slash + 1 == url.size()) return std::string(fallback);
  return std::string(url.substr(slash + 1));
}

}  // namespace lodgraph
