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

#include "lodgraph/ingest.hpp"

#include <fstream>
#include <istream>
#include <ostream>

#include "lodgraph/error.hpp"

namespace lodgraph {

bool TermDictionary::insert(TermHash hash, std::string_view term) {
  auto [it, inserted] = index_.try_emplace(hash, terms_.size());
  if (!inserted) {
    const std::string& known = terms_[it->second].second;
    if (known != term)
      throw Error(ErrorCode::Integrity, "hash collision on " + hash.hex() + ": '" + known +
                                            "' vs '" + std::string(term) + "'");
    return false;
  }
  terms_.emplace_back(hash, std::string(term));
  if (sink_) {
    char buf[17];
    write_hex(hash.value, buf);
    buf[16] = '\t';
    sink_->write(buf, sizeof buf);
    sink_->write(term.data(), static_cast<std::streamsize>(term.size()));
    sink_->put('\n');
    if (!*sink_) throw Error(ErrorCode::Io, "dictionary write failed");
  }
  return true;
}

std::optional<std::string_view> TermDictionary::find(TermHash hash) const noexcept {
  auto it = index_.find(hash);
  if (it == index_.end()) return std::nullopt;
  return std::string_view(terms_[it->second].second);
}

std::string_view TermDictionary::resolve(TermHash hash) const {
  if (auto term = find(hash)) return *term;
  throw Error(ErrorCode::NotFound, "hash " + hash.hex() + " not in dictionary");
}

void TermDictionary::write(std::ostream& out) const {
  for (const auto& [hash, term] : terms_) out << hash.hex() << '\t' << term << '\n';
}

TermDictionary TermDictionary::read(std::istream& in) {
  TermDictionary dict;
  std::string line;
  std::uint64_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    auto hash = tab == std::string::npos ? std::nullopt
                                         : TermHash::parse(std::string_view(line).substr(0, tab));
    if (!hash)
      throw Error(ErrorCode::Parse, "dictionary line " + std::to_string(lineno) + " is malformed");
    dict.insert(*hash, std::string_view(line).substr(tab + 1));
  }
  if (in.bad()) throw Error(ErrorCode::Io, "dictionary read failed");
  return dict;
}

TermDictionary TermDictionary::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open dictionary " + path.string());
  return read(in);
}

std::string format_edge(TermHash subject, TermHash object, TermHash predicate) {
  std::string line(51, ' ');
  write_hex(subject.value, line.data());
  write_hex(object.value, line.data() + 17);
  write_hex(predicate.value, line.data() + 34);
  line[50] = '\n';
  return line;
}

IngestStats triples_to_edgelist(NTriplesReader& reader, const TermHasher& hasher,
                                std::ostream& edgelist, TermDictionary& dictionary) {
  IngestStats stats;
  TripleView t;
  char line[51];
  line[16] = line[33] = ' ';
  line[50] = '\n';
  while (reader.next(t)) {
    const TermHash s = hasher(t.subject);
    const TermHash p = hasher(t.predicate);
    const TermHash o = hasher(t.object);
    dictionary.insert(s, t.subject);
    dictionary.insert(p, t.predicate);
    dictionary.insert(o, t.object);
    write_hex(s.value, line);
    write_hex(o.value, line + 17);
    write_hex(p.value, line + 34);
    edgelist.write(line, sizeof line);
    ++stats.triples;
  }
  if (!edgelist) throw Error(ErrorCode::Io, "edgelist write failed");
  stats.parse = reader.stats();
  stats.distinct_terms = dictionary.size();
  return stats;
}

IngestStats write_edgelist_files(LineSource& source, const TermHasher& hasher,
                                 const std::filesystem::path& edgelist_path,
                                 const std::filesystem::path& dictionary_path) {
  std::ofstream edges(edgelist_path, std::ios::binary | std::ios::trunc);
  if (!edges) throw Error(ErrorCode::Io, "cannot write " + edgelist_path.string());
  std::ofstream dict_out(dictionary_path, std::ios::binary | std::ios::trunc);
  if (!dict_out) throw Error(ErrorCode::Io, "cannot write " + dictionary_path.string());

  TermDictionary dict(&dict_out);
  NTriplesReader reader(source);
  IngestStats stats = triples_to_edgelist(reader, hasher, edges, dict);
  edges.close();
  dict_out.close();
  if (edges.fail() || dict_out.fail())
    throw Error(ErrorCode::Io, "failed to flush edgelist or dictionary");
  return stats;
}

}  // namespace lodgraph
