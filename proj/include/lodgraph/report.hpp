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

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "lodgraph/measures.hpp"

namespace lodgraph {

inline constexpr int kReportSchemaVersion = 1;

/// JSON object: schema_version, dataset, domain, measures{...}. Undefined
/// measures are written as null.
std::string report_to_json(const MeasureReport& report);
/// Throws Error(Format) on schema-version mismatch or a malformed document.
MeasureReport report_from_json(std::string_view json);

void write_report(const MeasureReport& report, const std::filesystem::path& path);
MeasureReport read_report(const std::filesystem::path& path);

/// Reads every *.json report in `dir`, sorted by file name.
std::vector<MeasureReport> read_report_dir(const std::filesystem::path& dir);

/// One CSV row per report; undefined cells are written as NA.
void write_aggregate_csv(std::span<const MeasureReport> reports, std::ostream& out);
void write_aggregate_csv(std::span<const MeasureReport> reports, const std::filesystem::path& path);

}  // namespace lodgraph
