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
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "lodgraph/ntriples.hpp"

namespace lodgraph {

enum class Serialization { NTriples, NQuads, RdfXml, Turtle, N3, Unknown };

const char* to_string(Serialization s) noexcept;

/// Serialization implied by a file name (".nt", ".ttl", ".rdf", ...). Any
/// compression suffix must already be stripped.
Serialization serialization_from_extension(const std::filesystem::path& name);
/// Serialization for a canonical media type or a short hint ("nt", "ttl").
Serialization serialization_from_hint(std::string_view hint);

struct AcquireConfig {
  /// Converts a non-N-Triples file to N-Triples on stdout. Placeholders:
  /// {input} (file path) and {format} (rdfxml, turtle, ntriples, nquads).
  std::string converter_command = "rapper -q -i {format} -o ntriples {input}";
  /// Unpacks archives the library cannot read natively (zip, 7z, xz, rar).
  /// Placeholders: {input}, {outdir}. Empty means unsupported.
  std::string extractor_command;
  /// Decompresses a bzip2 file to stdout.
  std::string bzip2_command = "bzip2 -dc {input}";
  /// Parent directory for scratch space; system temp dir when empty.
  std::filesystem::path work_dir;
};

struct AcquisitionLog {
  std::vector<std::string> members;  // RDF members fed into the stream
  std::vector<std::string> ignored;  // non-RDF members skipped
};

/// Opens `path` as a single N-Triples line stream. gzip, bzip2 and tar are
/// unpacked, archives are scanned for RDF members, and other serializations go
/// through the converter command. `format_hint` (media type or short name, may
/// be empty) decides the serialization when the file name does not.
///
/// Scan failures throw AcquireError immediately; decompression and converter
/// failures surface from the returned source while it is being read.
std::unique_ptr<LineSource> acquire_input(const std::filesystem::path& path,
                                          std::string_view format_hint,
                                          const AcquireConfig& config,
                                          AcquisitionLog* log = nullptr);

/// Substitutes `{key}` placeholders with shell-quoted values.
std::string expand_command(std::string_view tmpl,
                           const std::vector<std::pair<std::string, std::string>>& values);

/// Extracts a (optionally gzip-compressed) tar archive into `out_dir`.
void extract_tar(const std::filesystem::path& archive, const std::filesystem::path& out_dir);

}  // namespace lodgraph
