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

#include "lodgraph/report.hpp"

#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "lodgraph/error.hpp"
#include "lodgraph/format.hpp"

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

namespace lodgraph {

std::string report_to_json(const MeasureReport& r) {
  ordered_json measures = ordered_json::object();
  for (const auto& field : measure_fields()) {
    std::visit(
        [&](auto member) {
          const auto& v = r.*member;
          measures[std::string(field.name)] = v ? ordered_json(*v) : ordered_json(nullptr);
        },
        field.member);
    if (field.name == "pr_max") {
      measures["pr_max_vertex"] =
          r.pr_max_vertex ? ordered_json(r.pr_max_vertex->hex()) : ordered_json(nullptr);
      measures["pagerank_converged"] =
          r.pagerank_converged ? ordered_json(*r.pagerank_converged) : ordered_json(nullptr);
    }
  }
  ordered_json doc;
  doc["schema_version"] = kReportSchemaVersion;
  doc["dataset"] = r.dataset;
  doc["domain"] = r.domain;
  doc["measures"] = std::move(measures);
  return doc.dump(2) + "\n";
}

MeasureReport report_from_json(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Format, std::string("report is not valid JSON: ") + e.what());
  }
  try {
    const int version = doc.at("schema_version").get<int>();
    if (version != kReportSchemaVersion)
      throw Error(ErrorCode::Format, "report schema version " + std::to_string(version) +
                                         " not supported (expected " +
                                         std::to_string(kReportSchemaVersion) + ")");
    MeasureReport r;
    r.dataset = doc.at("dataset").get<std::string>();
    r.domain = doc.value("domain", std::string());
    const auto& measures = doc.at("measures");
    for (const auto& field : measure_fields()) {
      const auto& v = measures.at(std::string(field.name));
      std::visit(
          [&](auto member) {
            using T = typename std::remove_reference_t<decltype(r.*member)>::value_type;
            if (v.is_null())
              r.*member = std::nullopt;
            else
              r.*member = v.template get<T>();
          },
          field.member);
    }
    const auto& vertex = measures.at("pr_max_vertex");
    if (!vertex.is_null()) {
      auto h = TermHash::parse(vertex.get<std::string>());
      if (!h) throw Error(ErrorCode::Format, "pr_max_vertex is not a 16-hex-digit hash");
      r.pr_max_vertex = *h;
    }
    const auto& converged = measures.at("pagerank_converged");
    if (!converged.is_null()) r.pagerank_converged = converged.get<bool>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Format, std::string("malformed report: ") + e.what());
  }
}

void write_report(const MeasureReport& report, const fs::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path.string());
  out << report_to_json(report);
  out.close();
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path.string());
}

MeasureReport read_report(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return report_from_json(ss.str());
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

std::vector<MeasureReport> read_report_dir(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw Error(ErrorCode::Io, dir.string() + " is not a directory");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  std::vector<MeasureReport> reports;
  reports.reserve(files.size());
  for (const auto& f : files) reports.push_back(read_report(f));
  return reports;
}

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

void write_aggregate_csv(std::span<const MeasureReport> reports, std::ostream& out) {
  out << "dataset,domain";
  for (const auto& f : measure_fields()) out << ',' << f.name;
  out << ",pr_max_vertex\n";
  for (const auto& r : reports) {
    out << csv_escape(r.dataset) << ',' << csv_escape(r.domain);
    for (const auto& f : measure_fields()) {
      out << ',';
      std::visit(
          [&](auto member) {
            const auto& v = r.*member;
            if (!v) {
              out << "NA";
            } else if constexpr (std::is_same_v<std::decay_t<decltype(*v)>, double>) {
              out << format_double(*v);
            } else {
              out << *v;
            }
          },
          f.member);
    }
    out << ',' << (r.pr_max_vertex ? r.pr_max_vertex->hex() : "NA") << '\n';
  }
  if (!out) throw Error(ErrorCode::Io, "aggregate write failed");
}

void write_aggregate_csv(std::span<const MeasureReport> reports, const fs::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path.string());
  write_aggregate_csv(reports, out);
}

}  // namespace lodgraph
