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

#include "lodgraph/config.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <json.hpp>

#include "lodgraph/error.hpp"

namespace lodgraph {

const char* to_string(Stage stage) noexcept {
  switch (stage) {
    case Stage::Probe: return "probe";
    case Stage::Download: return "download";
    case Stage::Prepare: return "prepare";
    case Stage::Build: return "build";
    case Stage::Analyze: return "analyze";
  }
  return "unknown";
}

namespace {

[[noreturn]] void bad_value(std::string_view key, std::string_view value) {
  throw Error(ErrorCode::InvalidArgument,
              "invalid value '" + std::string(value) + "' for " + std::string(key));
}

template <class T>
T parse_number(std::string_view key, std::string_view value) {
  T out{};
  const char* end = value.data() + value.size();
  auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end) bad_value(key, value);
  return out;
}

bool parse_bool(std::string_view key, std::string_view value) {
  if (value == "1" || value == "true" || value == "yes" || value == "on") return true;
  if (value == "0" || value == "false" || value == "no" || value == "off") return false;
  bad_value(key, value);
}

}  // namespace

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = {
      "workers_prepare", "workers_analyze",   "hash_algorithm",   "hash_seed",
      "damping",         "pagerank_tolerance", "pagerank_max_iterations",
      "powerlaw_estimator", "powerlaw_min_tail", "converter_command",
      "extractor_command",  "bzip2_command",     "work_dir",
      "http_timeout",       "plots",             "save_binary"};
  return keys;
}

void apply_setting(Config& c, std::string_view key, std::string_view value) {
  if (key == "workers_prepare" || key == "workers_analyze") {
    const auto n = parse_number<unsigned>(key, value);
    if (n == 0) bad_value(key, value);
    (key == "workers_prepare" ? c.workers_prepare : c.workers_analyze) = n;
  } else if (key == "hash_algorithm") {
    TermHasher check(HashConfig{std::string(value), c.hash.seed});
    c.hash.algorithm = value;
  } else if (key == "hash_seed") {
    c.hash.seed = parse_number<std::uint64_t>(key, value);
  } else if (key == "damping") {
    const auto d = parse_number<double>(key, value);
    if (!(d > 0.0 && d < 1.0)) bad_value(key, value);
    c.measures.pagerank.damping = d;
  } else if (key == "pagerank_tolerance") {
    const auto t = parse_number<double>(key, value);
    if (!(t > 0.0)) bad_value(key, value);
    c.measures.pagerank.tolerance = t;
  } else if (key == "pagerank_max_iterations") {
    c.measures.pagerank.max_iterations = parse_number<std::uint32_t>(key, value);
  } else if (key == "powerlaw_estimator") {
    if (value == "exact")
      c.measures.powerlaw.estimator = PowerLawEstimator::Exact;
    else if (value == "approximate")
      c.measures.powerlaw.estimator = PowerLawEstimator::Approximate;
    else
      bad_value(key, value);
  } else if (key == "powerlaw_min_tail") {
    const auto t = parse_number<std::uint64_t>(key, value);
    if (t < 2) bad_value(key, value);
    c.measures.powerlaw.min_tail = t;
  } else if (key == "converter_command") {
    c.acquire.converter_command = value;
  } else if (key == "extractor_command") {
    c.acquire.extractor_command = value;
  } else if (key == "bzip2_command") {
    c.acquire.bzip2_command = value;
  } else if (key == "work_dir") {
    c.acquire.work_dir = std::string(value);
  } else if (key == "http_timeout") {
    const auto s = parse_number<unsigned>(key, value);
    if (s == 0) bad_value(key, value);
    c.http_timeout = std::chrono::seconds(s);
  } else if (key == "plots") {
    c.plots = parse_bool(key, value);
  } else if (key == "save_binary") {
    c.save_binary = parse_bool(key, value);
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown config key '" + std::string(key) + "'");
  }
}

void apply_config_file(Config& config, const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open config " + path.string());
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, "config " + path.string() + ": " + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::InvalidArgument, "config must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    std::string text;
    if (value.is_string())
      text = value.get<std::string>();
    else if (value.is_boolean())
      text = value.get<bool>() ? "true" : "false";
    else if (value.is_number())
      text = value.dump();
    else
      throw Error(ErrorCode::InvalidArgument, "config key '" + key + "' needs a scalar value");
    apply_setting(config, key, text);
  }
}

void apply_environment(Config& config, std::string_view prefix) {
  for (const auto& key : config_keys()) {
    std::string name(prefix);
    for (char ch : key) name += static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    if (const char* v = std::getenv(name.c_str())) apply_setting(config, key, v);
  }
}

}  // namespace lodgraph
