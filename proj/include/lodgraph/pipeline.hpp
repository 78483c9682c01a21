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

#include <array>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lodgraph/config.hpp"
#include "lodgraph/ingest.hpp"
#include "lodgraph/measures.hpp"
#include "lodgraph/net.hpp"

namespace lodgraph {

// --- manifest ------------------------------------------------------------

struct ManifestEntry {
  std::string id;
  std::string domain;
  std::string url;         // http(s) URL, file:// URL or local path
  std::string media_type;  // as declared; may be empty
};

struct Manifest {
  std::vector<ManifestEntry> entries;
  std::filesystem::path base_dir;  // relative local paths resolve against it
};

/// JSON array of objects or TSV with a header naming id, domain, url,
/// media_type. Throws Error(Parse) on malformed input and
/// Error(InvalidArgument) on missing, duplicate or unsafe ids.
Manifest read_manifest(const std::filesystem::path& path);
Manifest parse_manifest(std::string_view text, bool json);

enum class MediaTypeStatus { Mapped, Ambiguous, Unknown };

struct MediaTypeMapping {
  MediaTypeStatus status = MediaTypeStatus::Unknown;
  std::string canonical;  // set when Mapped; empty means "detect from file"
};

/// Maps declared aliases (rdf, xml_rdf, rdf_xml, ttl, nt, ...) to official
/// media types. Declarations naming several formats are Ambiguous.
MediaTypeMapping map_media_type(std::string_view declared);

// --- stages --------------------------------------------------------------

/// Local path for a manifest location (resolving relative paths and file://).
std::filesystem::path local_path(const Manifest& manifest, const std::string& location);

/// acquire + hash-encode: writes the edgelist and the term dictionary.
IngestStats prepare_dataset(const std::filesystem::path& input, std::string_view format_hint,
                            const Config& config, const std::filesystem::path& edgelist,
                            const std::filesystem::path& dictionary);

/// Plot data for the total- and in-degree distributions:
/// `<dir>/<id>.total.tsv` and `<dir>/<id>.in.tsv`.
void write_plots(const Graph& g, const MeasureOptions& options, const std::filesystem::path& dir,
                 const std::string& id);

// --- probing -------------------------------------------------------------

struct ProbeRow {
  std::string id;
  MediaTypeMapping media_type;
  Availability availability;
};

/// One row per manifest entry, in manifest order. Ambiguous or unknown media
/// types are not probed.
std::vector<ProbeRow> probe_availability(const Manifest& manifest, const Config& config);
void write_probe_tsv(const std::vector<ProbeRow>& rows, std::ostream& out);

// --- batch ---------------------------------------------------------------

enum class Outcome { Succeeded, Failed, Skipped };

const char* to_string(Outcome outcome) noexcept;

struct LedgerRow {
  std::string id;
  std::string domain;
  Outcome outcome = Outcome::Skipped;
  Stage last_stage = Stage::Probe;  // stage that failed, skipped, or finished last
  std::string reason;
  std::array<std::optional<double>, 5> seconds{};  // indexed by Stage
  std::uint64_t triples = 0;
  std::uint64_t malformed_lines = 0;
};

struct RunLedger {
  std::vector<LedgerRow> rows;  // manifest order

  std::size_t count(Outcome outcome) const noexcept;
  /// Outcomes only, so reruns over the same inputs give identical bytes.
  void write_tsv(std::ostream& out) const;
  /// Wall-clock seconds per stage; NA for stages not reached.
  void write_timings_tsv(std::ostream& out) const;
};

struct BatchResult {
  RunLedger ledger;
  std::vector<MeasureReport> reports;  // successful datasets, manifest order

  bool all_succeeded() const noexcept { return ledger.count(Outcome::Failed) == 0; }
};

/// Runs probe, download, prepare, build and analyze for every entry. Probe,
/// download and prepare share a pool of `workers_prepare` threads; build and
/// analyze a pool of `workers_analyze`. Failures are confined to their
/// dataset. Output layout under `out_dir`:
///   data/<id>/           edgelist, dictionary, binary graph, downloads
///   reports/<id>.json    one report per successful dataset
///   plots/<id>.{total,in}.tsv
///   ledger.tsv, timings.tsv, reports.csv
BatchResult run_batch(const Manifest& manifest, const Config& config,
                      const std::filesystem::path& out_dir);

}  // namespace lodgraph
