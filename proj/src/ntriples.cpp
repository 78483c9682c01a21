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

#include "lodgraph/ntriples.hpp"

#include "lodgraph/error.hpp"

namespace lodgraph {

namespace {

bool is_ws(char c) noexcept { return c == ' ' || c == '\t'; }

bool is_hex(char c) noexcept {
  return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f') || (c >= 'A' && c <= 'F');
}

bool is_alpha(char c) noexcept { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool is_digit(char c) noexcept { return c >= '0' && c <= '9'; }

// Cursor over one line. Every scan_* returns the end offset of the term or
// npos if the term is not well formed.
class Scanner {
 public:
  static constexpr std::size_t npos = std::string_view::npos;
  explicit Scanner(std::string_view s) : s_(s) {}

  void skip_ws() noexcept {
    while (pos_ < s_.size() && is_ws(s_[pos_])) ++pos_;
  }
  bool at_end() const noexcept { return pos_ >= s_.size(); }
  char peek() const noexcept { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  std::size_t pos() const noexcept { return pos_; }
  void advance(std::size_t to) noexcept { pos_ = to; }
  std::string_view slice(std::size_t from, std::size_t to) const noexcept {
    return s_.substr(from, to - from);
  }

  std::size_t scan_escape_u(std::size_t i) const noexcept {
    // s_[i] == '\\'
    if (i + 1 >= s_.size()) return npos;
    const char kind = s_[i + 1];
    std::size_t digits = kind == 'u' ? 4 : kind == 'U' ? 8 : 0;
    if (digits == 0) return npos;
    if (i + 2 + digits > s_.size()) return npos;
    for (std::size_t k = 0; k < digits; ++k)
      if (!is_hex(s_[i + 2 + k])) return npos;
    return i + 2 + digits;
  }

  std::size_t scan_iri(std::size_t i) const noexcept {
    if (i >= s_.size() || s_[i] != '<') return npos;
    ++i;
    const std::size_t start = i;
    while (i < s_.size()) {
      const char c = s_[i];
      if (c == '>') return i == start ? npos : i + 1;
      const auto uc = static_cast<unsigned char>(c);
      if (uc <= 0x20 || c == '<' || c == '"' || c == '{' || c == '}' || c == '|' ||
          c == '^' || c == '`')
        return npos;
      if (c == '\\') {
        i = scan_escape_u(i);
        if (i == npos) return npos;
        continue;
      }
      ++i;
    }
    return npos;
  }

  std::size_t scan_blank(std::size_t i) const noexcept {
    if (i + 2 >= s_.size() || s_[i] != '_' || s_[i + 1] != ':') return npos;
    i += 2;
    auto first_ok = [](char c) {
      return is_alpha(c) || is_digit(c) || c == '_' || static_cast<unsigned char>(c) >= 0x80;
    };
    auto rest_ok = [&](char c) { return first_ok(c) || c == '-' || c == '.'; };
    if (!first_ok(s_[i])) return npos;
    ++i;
    while (i < s_.size() && rest_ok(s_[i])) ++i;
    while (s_[i - 1] == '.') --i;  // a label never ends in '.'
    return i;
  }

  std::size_t scan_literal(std::size_t i) const noexcept {
    if (i >= s_.size() || s_[i] != '"') return npos;
    ++i;
    while (true) {
      if (i >= s_.size()) return npos;
      const char c = s_[i];
      if (c == '"') break;
      if (c == '\n' || c == '\r') return npos;
      if (c == '\\') {
        if (i + 1 >= s_.size()) return npos;
        switch (s_[i + 1]) {
          case 't': case 'b': case 'n': case 'r': case 'f': case '"': case '\'': case '\\':
            i += 2;
            continue;
          default:
            i = scan_escape_u(i);
            if (i == npos) return npos;
            continue;
        }
      }
      ++i;
    }
    ++i;  // closing quote
    if (i < s_.size() && s_[i] == '@') {
      std::size_t j = i + 1;
      const std::size_t tag_start = j;
      while (j < s_.size() && is_alpha(s_[j])) ++j;
      if (j == tag_start) return npos;
      while (j < s_.size() && s_[j] == '-') {
        const std::size_t sub = ++j;
        while (j < s_.size() && (is_alpha(s_[j]) || is_digit(s_[j]))) ++j;
        if (j == sub) return npos;
      }
      return j;
    }
    if (i + 1 < s_.size() && s_[i] == '^' && s_[i + 1] == '^') return scan_iri(i + 2);
    return i;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

LineKind parse_line(std::string_view line, TripleView& out) noexcept {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  Scanner sc(line);
  sc.skip_ws();
  if (sc.at_end() || sc.peek() == '#') return LineKind::Skipped;

  auto term = [&](bool allow_blank, bool allow_literal, std::string_view& view,
                  TermKind& kind) -> bool {
    sc.skip_ws();
    const std::size_t start = sc.pos();
    std::size_t end = Scanner::npos;
    switch (sc.peek()) {
      case '<':
        end = sc.scan_iri(start);
        kind = TermKind::Iri;
        break;
      case '_':
        if (allow_blank) end = sc.scan_blank(start);
        kind = TermKind::BlankNode;
        break;
      case '"':
        if (allow_literal) end = sc.scan_literal(start);
        kind = TermKind::Literal;
        break;
      default:
        break;
    }
    if (end == Scanner::npos) return false;
    view = sc.slice(start, end);
    sc.advance(end);
    return true;
  };

  TermKind predicate_kind;
  if (!term(true, false, out.subject, out.subject_kind)) return LineKind::Malformed;
  if (!term(false, false, out.predicate, predicate_kind)) return LineKind::Malformed;
  if (!term(true, true, out.object, out.object_kind)) return LineKind::Malformed;

  sc.skip_ws();
  if (sc.peek() == '<' || sc.peek() == '_') {
    std::string_view graph;
    TermKind graph_kind;
    if (!term(true, false, graph, graph_kind)) return LineKind::Malformed;
    sc.skip_ws();
  }
  if (sc.peek() != '.') return LineKind::Malformed;
  sc.advance(sc.pos() + 1);
  sc.skip_ws();
  if (!sc.at_end() && sc.peek() != '#') return LineKind::Malformed;
  return LineKind::Statement;
}

Term Term::iri(std::string_view iri) {
  return Term{TermKind::Iri, "<" + std::string(iri) + ">"};
}

Term Term::blank(std::string_view label) {
  return Term{TermKind::BlankNode, "_:" + std::string(label)};
}

Term Term::literal(std::string_view escaped_lexical, std::string_view suffix) {
  std::string s;
  s.reserve(escaped_lexical.size() + suffix.size() + 2);
  s += '"';
  s += escaped_lexical;
  s += '"';
  s += suffix;
  return Term{TermKind::Literal, std::move(s)};
}

std::string Triple::to_ntriples() const {
  return subject.surface + ' ' + predicate.surface + ' ' + object.surface + " .";
}

Triple TripleView::to_owned() const {
  return Triple{Term{subject_kind, std::string(subject)},
                Term{TermKind::Iri, std::string(predicate)},
                Term{object_kind, std::string(object)}};
}

bool IstreamLineSource::next(std::string& line) {
  if (std::getline(in_, line)) return true;
  if (in_.bad()) throw Error(ErrorCode::Io, "read failure on input stream");
  return false;
}

bool NTriplesReader::next(TripleView& out) {
  while (source_.next(line_)) {
    switch (parse_line(line_, out)) {
      case LineKind::Statement:
        ++stats_.valid;
        return true;
      case LineKind::Skipped:
        ++stats_.skipped;
        break;
      case LineKind::Malformed:
        ++stats_.malformed;
        break;
    }
  }
  return false;
}

std::vector<Triple> parse_ntriples(std::istream& in, ParseStats* stats) {
  IstreamLineSource source(in);
  NTriplesReader reader(source);
  std::vector<Triple> triples;
  TripleView view;
  while (reader.next(view)) triples.push_back(view.to_owned());
  if (stats) *stats = reader.stats();
  return triples;
}

}  // namespace lodgraph
