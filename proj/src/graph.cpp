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

#include "lodgraph/graph.hpp"

#include <zlib.h>

#include <array>
#include <bit>
#include <cstring>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <unordered_map>

#include "lodgraph/error.hpp"

namespace fs = std::filesystem;

namespace lodgraph {

Graph::Graph(std::vector<TermHash> vertex_hashes, std::vector<VertexId> sources,
             std::vector<VertexId> targets, std::vector<TermHash> attributes)
    : vertex_hashes_(std::move(vertex_hashes)),
      sources_(std::move(sources)),
      targets_(std::move(targets)),
      attributes_(std::move(attributes)) {
  if (sources_.size() != targets_.size() || sources_.size() != attributes_.size())
    throw Error(ErrorCode::InvalidArgument, "edge arrays differ in length");
  if (vertex_hashes_.size() > std::numeric_limits<VertexId>::max())
    throw Error(ErrorCode::InvalidArgument, "too many vertices");
  const auto n = vertex_hashes_.size();
  for (std::size_t e = 0; e < sources_.size(); ++e)
    if (sources_[e] >= n || targets_[e] >= n)
      throw Error(ErrorCode::InvalidArgument, "edge " + std::to_string(e) + " references a missing vertex");
  index();
}

Graph Graph::from_pairs(std::size_t n, std::span<const std::pair<VertexId, VertexId>> edges) {
  std::vector<TermHash> hashes(n);
  for (std::size_t v = 0; v < n; ++v) hashes[v] = TermHash{v};
  std::vector<VertexId> src, tgt;
  src.reserve(edges.size());
  tgt.reserve(edges.size());
  for (auto [s, t] : edges) {
    src.push_back(s);
    tgt.push_back(t);
  }
  std::vector<TermHash> attrs(edges.size());
  return Graph(std::move(hashes), std::move(src), std::move(tgt), std::move(attrs));
}

void Graph::index() {
  const std::size_t n = vertex_hashes_.size();
  const std::size_t m = sources_.size();
  out_offsets_.assign(n + 1, 0);
  in_offsets_.assign(n + 1, 0);
  for (std::size_t e = 0; e < m; ++e) {
    ++out_offsets_[sources_[e] + 1];
    ++in_offsets_[targets_[e] + 1];
  }
  for (std::size_t v = 0; v < n; ++v) {
    out_offsets_[v + 1] += out_offsets_[v];
    in_offsets_[v + 1] += in_offsets_[v];
  }
  out_targets_.resize(m);
  in_sources_.resize(m);
  std::vector<EdgeId> out_fill(out_offsets_.begin(), out_offsets_.end() - 1);
  std::vector<EdgeId> in_fill(in_offsets_.begin(), in_offsets_.end() - 1);
  for (std::size_t e = 0; e < m; ++e) {
    out_targets_[out_fill[sources_[e]]++] = targets_[e];
    in_sources_[in_fill[targets_[e]]++] = sources_[e];
  }
}

// --- edgelist ------------------------------------------------------------

namespace {

class EdgeListBuilder {
 public:
  void add(TermHash s, TermHash o, TermHash p) {
    sources_.push_back(vertex(s));
    targets_.push_back(vertex(o));
    attributes_.push_back(p);
  }
  Graph finish() {
    return Graph(std::move(hashes_), std::move(sources_), std::move(targets_), std::move(attributes_));
  }

 private:
  VertexId vertex(TermHash h) {
    auto [it, inserted] = ids_.try_emplace(h.value, static_cast<VertexId>(hashes_.size()));
    if (inserted) {
      if (hashes_.size() >= std::numeric_limits<VertexId>::max())
        throw Error(ErrorCode::InvalidArgument, "too many vertices");
      hashes_.push_back(h);
    }
    return it->second;
  }

  std::unordered_map<std::uint64_t, VertexId> ids_;
  std::vector<TermHash> hashes_;
  std::vector<VertexId> sources_;
  std::vector<VertexId> targets_;
  std::vector<TermHash> attributes_;
};

bool parse_edge_line(std::string_view line, TermHash& s, TermHash& o, TermHash& p) {
  while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
    line.remove_suffix(1);
  if (line.size() != 50 || line[16] != ' ' || line[33] != ' ') return false;
  auto a = TermHash::parse(line.substr(0, 16));
  auto b = TermHash::parse(line.substr(17, 16));
  auto c = TermHash::parse(line.substr(34, 16));
  if (!a || !b || !c) return false;
  s = *a;
  o = *b;
  p = *c;
  return true;
}

}  // namespace

Graph build_graph(std::istream& edgelist) {
  EdgeListBuilder builder;
  std::string line;
  std::uint64_t lineno = 0;
  TermHash s, o, p;
  while (std::getline(edgelist, line)) {
    ++lineno;
    if (!parse_edge_line(line, s, o, p)) {
      if (line.empty() || line == "\r") continue;
      throw Error(ErrorCode::Parse, "edgelist line " + std::to_string(lineno) + " is malformed");
    }
    builder.add(s, o, p);
  }
  if (edgelist.bad()) throw Error(ErrorCode::Io, "edgelist read failed");
  return builder.finish();
}

Graph build_graph_file(const fs::path& edgelist_path) {
  std::FILE* f = std::fopen(edgelist_path.c_str(), "rb");
  if (!f) throw Error(ErrorCode::Io, "cannot open edgelist " + edgelist_path.string());
  struct Closer {
    std::FILE* f;
    ~Closer() { std::fclose(f); }
  } closer{f};
  std::setvbuf(f, nullptr, _IOFBF, 1 << 20);

  EdgeListBuilder builder;
  std::array<char, 256> buf;
  std::uint64_t lineno = 0;
  TermHash s, o, p;
  while (std::fgets(buf.data(), static_cast<int>(buf.size()), f)) {
    ++lineno;
    std::string_view line(buf.data());
    if (!line.empty() && line.back() != '\n' && !std::feof(f))
      throw Error(ErrorCode::Parse, "edgelist line " + std::to_string(lineno) + " is malformed");
    if (!line.empty() && line.back() == '\n') line.remove_suffix(1);
    if (!parse_edge_line(line, s, o, p)) {
      if (line.empty() || line == "\r") continue;
      throw Error(ErrorCode::Parse, "edgelist line " + std::to_string(lineno) + " is malformed");
    }
    builder.add(s, o, p);
  }
  if (std::ferror(f)) throw Error(ErrorCode::Io, "edgelist read failed");
  return builder.finish();
}

// --- binary --------------------------------------------------------------

namespace {

constexpr std::array<char, 8> kMagic = {'L', 'O', 'D', 'G', 'R', 'A', 'P', 'H'};
constexpr std::uint64_t kCompressionZlib = 1;
constexpr std::size_t kHeaderWords = 6;  // version n m compression raw_bytes compressed_bytes

void put_le64(unsigned char* out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out[i] = static_cast<unsigned char>(v >> (8 * i));
}

std::uint64_t get_le64(const unsigned char* in) {
  std::uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | in[i];
  return v;
}

class DeflateWriter {
 public:
  explicit DeflateWriter(std::ostream& out) : out_(out) {
    if (deflateInit(&zs_, Z_BEST_SPEED) != Z_OK) throw Error(ErrorCode::Internal, "deflateInit failed");
  }
  ~DeflateWriter() { deflateEnd(&zs_); }
  DeflateWriter(const DeflateWriter&) = delete;
  DeflateWriter& operator=(const DeflateWriter&) = delete;

  void write_words(std::span<const std::uint64_t> words) {
    std::array<unsigned char, 8 * 4096> buf;
    for (std::size_t i = 0; i < words.size();) {
      const std::size_t k = std::min<std::size_t>(4096, words.size() - i);
      for (std::size_t j = 0; j < k; ++j) put_le64(buf.data() + 8 * j, words[i + j]);
      feed(buf.data(), 8 * k, Z_NO_FLUSH);
      i += k;
    }
  }
  template <class T, class F>
  void write_mapped(std::span<const T> items, F&& to_word) {
    std::array<std::uint64_t, 4096> words;
    for (std::size_t i = 0; i < items.size();) {
      const std::size_t k = std::min<std::size_t>(words.size(), items.size() - i);
      for (std::size_t j = 0; j < k; ++j) words[j] = to_word(items[i + j]);
      write_words(std::span(words.data(), k));
      i += k;
    }
  }
  void finish() { feed(nullptr, 0, Z_FINISH); }
  std::uint64_t raw_bytes() const { return zs_.total_in; }
  std::uint64_t compressed_bytes() const { return zs_.total_out; }

 private:
  void feed(const unsigned char* data, std::size_t len, int flush) {
    zs_.next_in = const_cast<unsigned char*>(data);
    zs_.avail_in = static_cast<uInt>(len);
    std::array<unsigned char, 1 << 16> out;
    int rc;
    do {
      zs_.next_out = out.data();
      zs_.avail_out = static_cast<uInt>(out.size());
      rc = deflate(&zs_, flush);
      if (rc == Z_STREAM_ERROR) throw Error(ErrorCode::Internal, "deflate failed");
      out_.write(reinterpret_cast<const char*>(out.data()),
                 static_cast<std::streamsize>(out.size() - zs_.avail_out));
    } while (zs_.avail_out == 0 || (flush == Z_FINISH && rc != Z_STREAM_END));
    if (!out_) throw Error(ErrorCode::Io, "graph write failed");
  }

  std::ostream& out_;
  z_stream zs_{};
};

class InflateReader {
 public:
  explicit InflateReader(std::istream& in) : in_(in) {
    if (inflateInit(&zs_) != Z_OK) throw Error(ErrorCode::Internal, "inflateInit failed");
  }
  ~InflateReader() { inflateEnd(&zs_); }
  InflateReader(const InflateReader&) = delete;
  InflateReader& operator=(const InflateReader&) = delete;

  void read(unsigned char* dst, std::size_t len) {
    zs_.next_out = dst;
    zs_.avail_out = static_cast<uInt>(len);
    while (zs_.avail_out > 0) {
      if (ended_) throw Error(ErrorCode::Format, "binary graph payload ends early");
      refill();
      const int rc = inflate(&zs_, Z_NO_FLUSH);
      if (rc != Z_OK && rc != Z_STREAM_END)
        throw Error(ErrorCode::Format, "binary graph payload is corrupt");
      ended_ = rc == Z_STREAM_END;
    }
  }

  template <class T, class F>
  std::vector<T> read_mapped(std::uint64_t count, F&& from_word) {
    std::vector<T> items;
    items.reserve(count);
    std::array<unsigned char, 8 * 4096> buf;
    for (std::uint64_t i = 0; i < count;) {
      const std::size_t k = static_cast<std::size_t>(std::min<std::uint64_t>(4096, count - i));
      read(buf.data(), 8 * k);
      for (std::size_t j = 0; j < k; ++j) items.push_back(from_word(get_le64(buf.data() + 8 * j)));
      i += k;
    }
    return items;
  }

  // The payload must end exactly where the last array ends, and nothing may
  // follow the deflate stream.
  void expect_end() {
    if (!ended_) {
      unsigned char probe;
      zs_.next_out = &probe;
      zs_.avail_out = 1;
      while (!ended_) {
        refill();
        const int rc = inflate(&zs_, Z_NO_FLUSH);
        if ((rc != Z_OK && rc != Z_STREAM_END) || zs_.avail_out == 0)
          throw Error(ErrorCode::Format, "binary graph payload has trailing data or is corrupt");
        ended_ = rc == Z_STREAM_END;
      }
    }
    if (zs_.avail_in != 0 || in_.peek() != std::char_traits<char>::eof())
      throw Error(ErrorCode::Format, "binary graph has trailing bytes");
  }

 private:
  void refill() {
    if (zs_.avail_in > 0) return;
    in_.read(reinterpret_cast<char*>(inbuf_.data()), static_cast<std::streamsize>(inbuf_.size()));
    const auto got = in_.gcount();
    if (got <= 0) throw Error(ErrorCode::Format, "binary graph is truncated");
    if (in_.eof()) in_.clear(std::ios::eofbit);
    zs_.next_in = inbuf_.data();
    zs_.avail_in = static_cast<uInt>(got);
  }

  std::istream& in_;
  z_stream zs_{};
  bool ended_ = false;
  std::array<unsigned char, 1 << 16> inbuf_;
};

}  // namespace

void save_binary(const Graph& graph, std::ostream& out) {
  std::array<unsigned char, 8 + 8 * kHeaderWords> header{};
  std::memcpy(header.data(), kMagic.data(), kMagic.size());
  const auto header_pos = out.tellp();
  out.write(reinterpret_cast<const char*>(header.data()), header.size());

  DeflateWriter writer(out);
  writer.write_mapped(graph.vertex_hashes(), [](TermHash h) { return h.value; });
  writer.write_mapped(graph.sources(), [](VertexId v) { return std::uint64_t{v}; });
  writer.write_mapped(graph.targets(), [](VertexId v) { return std::uint64_t{v}; });
  writer.write_mapped(graph.attributes(), [](TermHash h) { return h.value; });
  writer.finish();

  const std::array<std::uint64_t, kHeaderWords> words = {
      kGraphFormatVersion, graph.num_vertices(), graph.num_edges(), kCompressionZlib,
      writer.raw_bytes(), writer.compressed_bytes()};
  for (std::size_t i = 0; i < words.size(); ++i) put_le64(header.data() + 8 + 8 * i, words[i]);
  const auto end_pos = out.tellp();
  out.seekp(header_pos);
  out.write(reinterpret_cast<const char*>(header.data()), header.size());
  out.seekp(end_pos);
  if (!out) throw Error(ErrorCode::Io, "graph write failed");
}

void save_binary(const Graph& graph, const fs::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path.string());
  save_binary(graph, out);
  out.close();
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path.string());
}

Graph load_binary(std::istream& in) {
  std::array<unsigned char, 8 + 8 * kHeaderWords> header{};
  in.read(reinterpret_cast<char*>(header.data()), header.size());
  if (in.gcount() != static_cast<std::streamsize>(header.size()))
    throw Error(ErrorCode::Format, "binary graph header is truncated");
  if (std::memcmp(header.data(), kMagic.data(), kMagic.size()) != 0)
    throw Error(ErrorCode::Format, "not a binary graph (bad magic)");
  const std::uint64_t version = get_le64(header.data() + 8);
  if (version != kGraphFormatVersion)
    throw Error(ErrorCode::Format, "binary graph version " + std::to_string(version) +
                                       " not supported (expected " +
                                       std::to_string(kGraphFormatVersion) + ")");
  const std::uint64_t n = get_le64(header.data() + 16);
  const std::uint64_t m = get_le64(header.data() + 24);
  const std::uint64_t compression = get_le64(header.data() + 32);
  const std::uint64_t raw = get_le64(header.data() + 40);
  if (compression != kCompressionZlib) throw Error(ErrorCode::Format, "unknown graph compression");
  if (n > std::numeric_limits<VertexId>::max() || raw != 8 * (n + 3 * m))
    throw Error(ErrorCode::Format, "binary graph header is inconsistent");

  InflateReader reader(in);
  auto hashes = reader.read_mapped<TermHash>(n, [](std::uint64_t w) { return TermHash{w}; });
  auto to_vertex = [n](std::uint64_t w) {
    if (w >= n) throw Error(ErrorCode::Format, "binary graph references a missing vertex");
    return static_cast<VertexId>(w);
  };
  auto sources = reader.read_mapped<VertexId>(m, to_vertex);
  auto targets = reader.read_mapped<VertexId>(m, to_vertex);
  auto attrs = reader.read_mapped<TermHash>(m, [](std::uint64_t w) { return TermHash{w}; });
  reader.expect_end();
  return Graph(std::move(hashes), std::move(sources), std::move(targets), std::move(attrs));
}

Graph load_binary(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path.string());
  return load_binary(in);
}

bool is_binary_graph(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::array<char, 8> magic{};
  in.read(magic.data(), magic.size());
  return in.gcount() == 8 && magic == kMagic;
}

}  // namespace lodgraph
