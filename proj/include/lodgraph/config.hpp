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
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "lodgraph/acquire.hpp"
#include "lodgraph/measures.hpp"
#include "lodgraph/term_hash.hpp"

namespace lodgraph {

enum class Stage { Probe, Download, Prepare, Build, Analyze };

const char* to_string(Stage stage) noexcept;

struct ProgressEvent {
  Stage stage;
  std::string dataset;
  std::string status;  // "ok", "failed", "skipped"
  double seconds = 0;
};

using ProgressSink = std::function<void(const ProgressEvent&)>;
/// Invoked at the start of every stage of every dataset; throwing from it
/// fails that stage.
using StageHook = std::function<void(std::string_view dataset, Stage stage)>;

struct Config {
  unsigned workers_prepare = 28;
  unsigned workers_analyze = 12;
  HashConfig hash;
  MeasureOptions measures;
  AcquireConfig acquire;
  std::chrono::seconds http_timeout{30};
  bool plots = true;
  bool save_binary = true;

  ProgressSink progress;
  StageHook stage_hook;
};

/// Keys accepted by apply_setting, the config file and the environment.
const std::vector<std::string>& config_keys();

/// Sets one option from its text form. Throws Error(InvalidArgument) for an
/// unknown key or an unparsable value.
void apply_setting(Config& config, std::string_view key, std::string_view value);

/// JSON object of key/value pairs; values may be strings, numbers or booleans.
void apply_config_file(Config& config, const std::filesystem::path& path);

/// For each key, `<prefix><KEY>` in the environment overrides the value
/// (e.g. LODGRAPH_WORKERS_PREPARE).
void apply_environment(Config& config, std::string_view prefix = "LODGRAPH_");

}  // namespace lodgraph
