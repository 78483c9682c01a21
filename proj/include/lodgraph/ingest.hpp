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

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lodgraph/ntriples.hpp"
#include "lodgraph/term_hash.hpp"

namespace lodgraph {

/// Reverse map from term hashes to the surface strings they were computed
/// from. Entries keep first-insertion order; when a sink stream is attached,
/// each new entry is appended to it as a `hash<TAB>term` line.
class TermDictionary {
 public:
  TermDictionary() = default;
  explicit TermDictionary(std::ostream* sink) : sink_(sink) {}

  /// Returns true if the entry is new. Throws Error(Integrity) if `hash` is
  /// already bound to a different term.
  bool insert(TermHash hash, std::string_view term);

  std::optional<std::string_view> find(TermHash hash) const noexcept;
  /// Throws Error(NotFound) for unknown hashes.
  std::string_view resolve(TermHash hash) const;

  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }

  void write(std::ostream& out) const;
  static TermDictionary read(std::istream& in);
  static TermDictionary load(const std::filesystem::path& path);

 private:
  std::ostream* sink_ = nullptr;
  std::vector<std::pair<TermHash, std::string>> terms_;
  std::unordered_map<TermHash, std::size_t> index_;
};

struct IngestStats {
  ParseStats parse;
  std::uint64_t triples = 0;
  std::uint64_t distinct_terms = 0;
};

/// Formats one edgelist record: subject-hash object-hash predicate-hash.
std::string format_edge(TermHash subject, TermHash object, TermHash predicate);

/// Hashes every statement from `reader` and writes one edgelist line per
/// triple (duplicates preserved). New terms go to `dictionary`.
IngestStats triples_to_edgelist(NTriplesReader& reader, const TermHasher& hasher,
                                std::ostream& edgelist, TermDictionary& dictionary);

/// File-level wrapper: reads `source`, writes the edgelist and the dictionary
/// file. Output files are replaced.
IngestStats write_edgelist_files(LineSource& source, const TermHasher& hasher,
                                 const std::filesystem::path& edgelist_path,
                                 const std::filesystem::path& dictionary_path);

}  // namespace lodgraph
