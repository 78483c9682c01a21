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
#include <istream>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lodgraph {

enum class TermKind { Iri, BlankNode, Literal };

/// An RDF term kept in its N-Triples surface form, exactly as it appeared in
/// the source line (delimiters and escapes included).
struct Term {
  TermKind kind = TermKind::Iri;
  std::string surface;

  static Term iri(std::string_view iri);
  static Term blank(std::string_view label);
  static Term literal(std::string_view escaped_lexical, std::string_view suffix = {});

  friend bool operator==(const Term&, const Term&) = default;
};

struct Triple {
  Term subject;
  Term predicate;
  Term object;

  /// `s p o .`
  std::string to_ntriples() const;

  friend bool operator==(const Triple&, const Triple&) = default;
};

/// Non-owning view of a parsed statement; the views point into the line.
struct TripleView {
  std::string_view subject;
  std::string_view predicate;
  std::string_view object;
  TermKind subject_kind = TermKind::Iri;
  TermKind object_kind = TermKind::Iri;

  Triple to_owned() const;
};

struct ParseStats {
  std::uint64_t valid = 0;
  std::uint64_t skipped = 0;    // blank and comment lines
  std::uint64_t malformed = 0;

  std::uint64_t lines() const noexcept { return valid + skipped + malformed; }
};

enum class LineKind { Statement, Skipped, Malformed };

/// Classifies one line (with or without its trailing newline). N-Quads lines
/// are accepted; the graph label is dropped.
LineKind parse_line(std::string_view line, TripleView& out) noexcept;

/// Source of text lines, terminator included. `next` returns false at end
/// of input and throws lodgraph::Error on I/O failure.
class LineSource {
 public:
  virtual ~LineSource() = default;
  virtual bool next(std::string& line) = 0;
};

class IstreamLineSource final : public LineSource {
 public:
  explicit IstreamLineSource(std::istream& in) : in_(in) {}
  bool next(std::string& line) override;

 private:
  std::istream& in_;
};

/// Streams statements out of a LineSource, counting skipped and malformed
/// lines as it goes.
class NTriplesReader {
 public:
  explicit NTriplesReader(LineSource& source) : source_(source) {}

  /// The returned view is valid until the next call.
  bool next(TripleView& out);
  const ParseStats& stats() const noexcept { return stats_; }

 private:
  LineSource& source_;
  std::string line_;
  ParseStats stats_;
};

/// Convenience: parses a whole stream into owned triples.
std::vector<Triple> parse_ntriples(std::istream& in, ParseStats* stats = nullptr);

}  // namespace lodgraph
