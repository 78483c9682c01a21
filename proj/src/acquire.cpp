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

#include "lodgraph/acquire.hpp"

#include <zlib.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <functional>
#include <sys/wait.h>
#include <unistd.h>

#include "lodgraph/error.hpp"

namespace fs = std::filesystem;

namespace lodgraph {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::string shell_quote(std::string_view s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'')
      out += "'\\''";
    else
      out += c;
  }
  out += '\'';
  return out;
}

enum class Container { Plain, Gzip, Bzip2, Tar, Foreign };

Container sniff(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw AcquireError("open", "cannot open " + path.string());
  std::array<unsigned char, 512> head{};
  in.read(reinterpret_cast<char*>(head.data()), head.size());
  const auto got = static_cast<std::size_t>(in.gcount());
  auto starts = [&](std::initializer_list<unsigned char> magic) {
    if (got < magic.size()) return false;
    return std::equal(magic.begin(), magic.end(), head.begin());
  };
  if (starts({0x1f, 0x8b})) return Container::Gzip;
  if (starts({'B', 'Z', 'h'})) return Container::Bzip2;
  if (starts({'P', 'K', 3, 4}) || starts({'7', 'z', 0xBC, 0xAF, 0x27, 0x1C}) ||
      starts({0xFD, '7', 'z', 'X', 'Z', 0}) || starts({'R', 'a', 'r', '!'}))
    return Container::Foreign;
  if (got == 512 && std::memcmp(head.data() + 257, "ustar", 5) == 0) return Container::Tar;
  return Container::Plain;
}

bool gzip_holds_tar(const fs::path& path) {
  gzFile gz = gzopen(path.c_str(), "rb");
  if (!gz) return false;
  std::array<char, 512> block{};
  const int got = gzread(gz, block.data(), static_cast<unsigned>(block.size()));
  gzclose(gz);
  return got == 512 && std::memcmp(block.data() + 257, "ustar", 5) == 0;
}

// Drops one compression suffix: a.nt.gz -> a.nt, a.tgz -> a.tar.
fs::path strip_compression(const fs::path& name) {
  const std::string ext = lower(name.extension().string());
  if (ext == ".tgz" || ext == ".tbz" || ext == ".tbz2") return fs::path(name).replace_extension(".tar");
  if (ext == ".gz" || ext == ".bz2" || ext == ".gzip" || ext == ".bzip2") return name.parent_path() / name.stem();
  return name;
}

bool looks_compressed_or_archive(const fs::path& name) {
  static const std::array<std::string_view, 12> exts = {
      ".gz", ".bz2", ".tgz", ".tbz", ".tbz2", ".tar", ".zip", ".7z", ".xz", ".rar", ".gzip", ".bzip2"};
  const std::string ext = lower(name.extension().string());
  return std::find(exts.begin(), exts.end(), ext) != exts.end();
}

const char* converter_format(Serialization s) {
  switch (s) {
    case Serialization::RdfXml: return "rdfxml";
    case Serialization::Turtle: return "turtle";
    case Serialization::N3: return "turtle";
    case Serialization::NQuads: return "nquads";
    default: return "ntriples";
  }
}

// --- line sources --------------------------------------------------------

class StdioLineSource final : public LineSource {
 public:
  explicit StdioLineSource(const fs::path& path) : path_(path) {
    file_ = std::fopen(path.c_str(), "rb");
    if (!file_) throw AcquireError("open", "cannot open " + path.string());
  }
  ~StdioLineSource() override {
    if (file_) std::fclose(file_);
    std::free(buf_);
  }
  StdioLineSource(const StdioLineSource&) = delete;
  StdioLineSource& operator=(const StdioLineSource&) = delete;

  bool next(std::string& line) override {
    const ssize_t n = ::getline(&buf_, &cap_, file_);
    if (n < 0) {
      if (std::ferror(file_)) throw Error(ErrorCode::Io, "read failure on " + path_.string());
      return false;
    }
    line.assign(buf_, static_cast<std::size_t>(n));
    return true;
  }

 private:
  fs::path path_;
  std::FILE* file_ = nullptr;
  char* buf_ = nullptr;
  std::size_t cap_ = 0;
};

class GzipLineSource final : public LineSource {
 public:
  explicit GzipLineSource(const fs::path& path) : path_(path) {
    gz_ = gzopen(path.c_str(), "rb");
    if (!gz_) throw AcquireError("decompress", "cannot open " + path.string());
    gzbuffer(gz_, 1 << 18);
  }
  ~GzipLineSource() override {
    if (gz_) gzclose(gz_);
  }
  GzipLineSource(const GzipLineSource&) = delete;
  GzipLineSource& operator=(const GzipLineSource&) = delete;

  bool next(std::string& line) override {
    line.clear();
    std::array<char, 8192> chunk;
    while (true) {
      if (!gzgets(gz_, chunk.data(), static_cast<int>(chunk.size()))) {
        check_error();
        return !line.empty();
      }
      const std::size_t len = std::strlen(chunk.data());
      line.append(chunk.data(), len);
      if (len > 0 && chunk[len - 1] == '\n') return true;
    }
  }

 private:
  void check_error() {
    int err = Z_OK;
    const char* msg = gzerror(gz_, &err);
    if (err != Z_OK && err != Z_STREAM_END)
      throw AcquireError("decompress", path_.string() + ": " + (msg ? msg : "zlib error"));
  }

  fs::path path_;
  gzFile gz_ = nullptr;
};

// Reads the stdout of a shell command; a nonzero exit status is reported as
// an AcquireError tagged with `stage`.
class PipeLineSource final : public LineSource {
 public:
  PipeLineSource(std::string command, std::string stage)
      : command_(std::move(command)), stage_(std::move(stage)) {
    pipe_ = ::popen(command_.c_str(), "r");
    if (!pipe_) throw AcquireError(stage_, "cannot run: " + command_);
  }
  ~PipeLineSource() override {
    if (pipe_) ::pclose(pipe_);
    std::free(buf_);
  }
  PipeLineSource(const PipeLineSource&) = delete;
  PipeLineSource& operator=(const PipeLineSource&) = delete;

  bool next(std::string& line) override {
    if (!pipe_) return false;
    const ssize_t n = ::getline(&buf_, &cap_, pipe_);
    if (n >= 0) {
      line.assign(buf_, static_cast<std::size_t>(n));
      return true;
    }
    const int status = ::pclose(pipe_);
    pipe_ = nullptr;
    if (status == -1 || !WIFEXITED(status) || WEXITSTATUS(status) != 0)
      throw AcquireError(stage_, "command failed (status " + std::to_string(status) +
                                     "): " + command_);
    return false;
  }

 private:
  std::string command_;
  std::string stage_;
  std::FILE* pipe_ = nullptr;
  char* buf_ = nullptr;
  std::size_t cap_ = 0;
};

class ScratchDir {
 public:
  explicit ScratchDir(const fs::path& parent) {
    fs::path base = parent.empty() ? fs::temp_directory_path() : parent;
    fs::create_directories(base);
    std::string tmpl = (base / "lodgraph-XXXXXX").string();
    if (!::mkdtemp(tmpl.data())) throw AcquireError("extract", "cannot create scratch dir in " + base.string());
    path_ = tmpl;
  }
  ~ScratchDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  ScratchDir(const ScratchDir&) = delete;
  ScratchDir& operator=(const ScratchDir&) = delete;
  const fs::path& path() const noexcept { return path_; }

 private:
  fs::path path_;
};

using SegmentFactory = std::function<std::unique_ptr<LineSource>()>;

// Concatenation of member streams; members are opened lazily in order.
class ChainedLineSource final : public LineSource {
 public:
  ChainedLineSource(std::vector<SegmentFactory> segments,
                    std::vector<std::shared_ptr<ScratchDir>> scratch)
      : segments_(std::move(segments)), scratch_(std::move(scratch)) {}

  bool next(std::string& line) override {
    while (true) {
      if (!current_) {
        if (index_ >= segments_.size()) return false;
        current_ = segments_[index_++]();
      }
      if (current_->next(line)) {
        if (line.empty() || line.back() != '\n') line.push_back('\n');
        return true;
      }
      current_.reset();
    }
  }

 private:
  std::vector<SegmentFactory> segments_;
  std::vector<std::shared_ptr<ScratchDir>> scratch_;
  std::size_t index_ = 0;
  std::unique_ptr<LineSource> current_;
};

// --- resolution ----------------------------------------------------------

class Resolver {
 public:
  Resolver(const AcquireConfig& config, Serialization hint, AcquisitionLog* log)
      : config_(config), hint_(hint), log_(log) {}

  void resolve(const fs::path& path, const fs::path& logical_name, bool top_level) {
    switch (sniff(path)) {
      case Container::Gzip:
        resolve_gzip(path, logical_name, top_level);
        return;
      case Container::Bzip2: {
        auto scratch = make_scratch();
        const fs::path out = scratch->path() / strip_compression(logical_name).filename();
        run_to_file(expand_command(config_.bzip2_command, {{"input", path.string()}}), out,
                    "decompress");
        resolve(out, out.filename(), top_level);
        return;
      }
      case Container::Tar: {
        auto scratch = make_scratch();
        extract_tar(path, scratch->path());
        scan(scratch->path());
        return;
      }
      case Container::Foreign: {
        if (config_.extractor_command.empty())
          throw AcquireError("extract", "no extractor configured for " + path.string());
        auto scratch = make_scratch();
        run_checked(expand_command(config_.extractor_command,
                                   {{"input", path.string()}, {"outdir", scratch->path().string()}}),
                    "extract");
        scan(scratch->path());
        return;
      }
      case Container::Plain:
        add_plain(path, logical_name, top_level, /*gzipped=*/false);
        return;
    }
  }

  std::vector<SegmentFactory> take_segments() { return std::move(segments_); }
  std::vector<std::shared_ptr<ScratchDir>> take_scratch() { return std::move(scratch_); }

 private:
  void resolve_gzip(const fs::path& path, const fs::path& logical_name, bool top_level) {
    if (gzip_holds_tar(path)) {
      auto scratch = make_scratch();
      extract_tar(path, scratch->path());
      scan(scratch->path());
      return;
    }
    add_plain(path, strip_compression(logical_name), top_level, /*gzipped=*/true);
  }

  void add_plain(const fs::path& path, const fs::path& logical_name, bool top_level, bool gzipped) {
    Serialization s = serialization_from_extension(logical_name);
    if (s == Serialization::Unknown && top_level)
      s = hint_ == Serialization::Unknown ? Serialization::NTriples : hint_;
    if (s == Serialization::Unknown) {
      if (log_) log_->ignored.push_back(logical_name.string());
      return;
    }
    if (log_) log_->members.push_back(logical_name.string());

    if (s == Serialization::NTriples || s == Serialization::NQuads) {
      if (gzipped)
        segments_.push_back([path] { return std::make_unique<GzipLineSource>(path); });
      else
        segments_.push_back([path] { return std::make_unique<StdioLineSource>(path); });
      return;
    }

    fs::path input = path;
    if (gzipped) {
      auto scratch = make_scratch();
      input = scratch->path() / logical_name.filename();
      gunzip_to(path, input);
    }
    const std::string command = expand_command(
        config_.converter_command, {{"input", input.string()}, {"format", converter_format(s)}});
    segments_.push_back([command] { return std::make_unique<PipeLineSource>(command, "convert"); });
  }

  void scan(const fs::path& dir) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::recursive_directory_iterator(dir))
      if (entry.is_regular_file()) files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
      const fs::path rel = fs::relative(f, dir);
      if (looks_compressed_or_archive(f))
        resolve(f, rel, /*top_level=*/false);
      else
        add_plain(f, rel, /*top_level=*/false, /*gzipped=*/false);
    }
  }

  std::shared_ptr<ScratchDir> make_scratch() {
    scratch_.push_back(std::make_shared<ScratchDir>(config_.work_dir));
    return scratch_.back();
  }

  static void gunzip_to(const fs::path& in, const fs::path& out) {
    GzipLineSource src(in);
    std::ofstream os(out, std::ios::binary);
    std::string line;
    while (src.next(line)) os << line;
    if (!os) throw AcquireError("decompress", "cannot write " + out.string());
  }

  static void run_to_file(const std::string& command, const fs::path& out, const std::string& stage) {
    PipeLineSource src(command, stage);
    std::ofstream os(out, std::ios::binary);
    std::string line;
    while (src.next(line)) os << line;
    if (!os) throw AcquireError(stage, "cannot write " + out.string());
  }

  static void run_checked(const std::string& command, const std::string& stage) {
    const int status = std::system(command.c_str());
    if (status == -1 || !WIFEXITED(status) || WEXITSTATUS(status) != 0)
      throw AcquireError(stage, "command failed: " + command);
  }

  const AcquireConfig& config_;
  Serialization hint_;
  AcquisitionLog* log_;
  std::vector<SegmentFactory> segments_;
  std::vector<std::shared_ptr<ScratchDir>> scratch_;
};

// --- tar -----------------------------------------------------------------

std::uint64_t parse_tar_size(const char* field) {
  const auto* f = reinterpret_cast<const unsigned char*>(field);
  if (f[0] & 0x80) {  // base-256
    std::uint64_t v = f[0] & 0x7F;
    for (int i = 1; i < 12; ++i) v = (v << 8) | f[i];
    return v;
  }
  std::uint64_t v = 0;
  for (int i = 0; i < 12 && field[i]; ++i) {
    if (field[i] == ' ') continue;
    if (field[i] < '0' || field[i] > '7') throw AcquireError("extract", "corrupt tar header");
    v = v * 8 + static_cast<std::uint64_t>(field[i] - '0');
  }
  return v;
}

std::string cstr(const char* p, std::size_t max) {
  return std::string(p, strnlen(p, max));
}

fs::path safe_member_path(const fs::path& root, const std::string& name) {
  fs::path rel;
  for (const auto& part : fs::path(name).relative_path()) {
    if (part == ".." || part == "." || part.empty()) continue;
    rel /= part;
  }
  return root / rel;
}

}  // namespace

const char* to_string(Serialization s) noexcept {
  switch (s) {
    case Serialization::NTriples: return "application/n-triples";
    case Serialization::NQuads: return "application/n-quads";
    case Serialization::RdfXml: return "application/rdf+xml";
    case Serialization::Turtle: return "text/turtle";
    case Serialization::N3: return "text/n3";
    case Serialization::Unknown: return "unknown";
  }
  return "unknown";
}

Serialization serialization_from_extension(const fs::path& name) {
  const std::string ext = lower(name.extension().string());
  if (ext == ".nt" || ext == ".ntriples") return Serialization::NTriples;
  if (ext == ".nq" || ext == ".nquads") return Serialization::NQuads;
  if (ext == ".rdf" || ext == ".owl" || ext == ".xml" || ext == ".rdfs") return Serialization::RdfXml;
  if (ext == ".ttl" || ext == ".turtle") return Serialization::Turtle;
  if (ext == ".n3") return Serialization::N3;
  return Serialization::Unknown;
}

Serialization serialization_from_hint(std::string_view hint) {
  const std::string h = lower(hint);
  if (h == "application/n-triples" || h == "nt" || h == "ntriples" || h == "n-triples")
    return Serialization::NTriples;
  if (h == "application/n-quads" || h == "nq" || h == "nquads" || h == "n-quads")
    return Serialization::NQuads;
  if (h == "application/rdf+xml" || h == "rdf" || h == "rdfxml" || h == "xml")
    return Serialization::RdfXml;
  if (h == "text/turtle" || h == "ttl" || h == "turtle") return Serialization::Turtle;
  if (h == "text/n3" || h == "n3") return Serialization::N3;
  return Serialization::Unknown;
}

std::string expand_command(std::string_view tmpl,
                           const std::vector<std::pair<std::string, std::string>>& values) {
  std::string out;
  std::size_t i = 0;
  while (i < tmpl.size()) {
    if (tmpl[i] == '{') {
      const auto close = tmpl.find('}', i);
      if (close != std::string_view::npos) {
        const std::string_view key = tmpl.substr(i + 1, close - i - 1);
        auto it = std::find_if(values.begin(), values.end(),
                               [&](const auto& kv) { return kv.first == key; });
        if (it != values.end()) {
          out += key == "format" ? it->second : shell_quote(it->second);
          i = close + 1;
          continue;
        }
      }
    }
    out += tmpl[i++];
  }
  return out;
}

void extract_tar(const fs::path& archive, const fs::path& out_dir) {
  gzFile gz = gzopen(archive.c_str(), "rb");
  if (!gz) throw AcquireError("extract", "cannot open " + archive.string());
  struct Closer {
    gzFile gz;
    ~Closer() { gzclose(gz); }
  } closer{gz};

  auto read_exact = [&](char* buf, std::size_t n) {
    std::size_t done = 0;
    while (done < n) {
      const int got = gzread(gz, buf + done, static_cast<unsigned>(std::min<std::size_t>(n - done, 1 << 20)));
      if (got <= 0) throw AcquireError("extract", "truncated tar archive " + archive.string());
      done += static_cast<std::size_t>(got);
    }
  };

  std::array<char, 512> header;
  std::string long_name;
  std::vector<char> buffer(1 << 16);
  int zero_blocks = 0;
  while (true) {
    const int got = gzread(gz, header.data(), 512);
    if (got == 0) break;
    if (got != 512) throw AcquireError("extract", "truncated tar archive " + archive.string());
    if (std::all_of(header.begin(), header.end(), [](char c) { return c == 0; })) {
      if (++zero_blocks == 2) break;
      continue;
    }
    zero_blocks = 0;

    unsigned checksum = 0;
    for (int i = 0; i < 512; ++i)
      checksum += (i >= 148 && i < 156) ? ' ' : static_cast<unsigned char>(header[i]);
    if (parse_tar_size(header.data() + 148) != checksum)
      throw AcquireError("extract", "tar checksum mismatch in " + archive.string());

    const std::uint64_t size = parse_tar_size(header.data() + 124);
    const char type = header[156];
    std::string name = cstr(header.data(), 100);
    if (std::memcmp(header.data() + 257, "ustar", 5) == 0) {
      const std::string prefix = cstr(header.data() + 345, 155);
      if (!prefix.empty()) name = prefix + "/" + name;
    }
    if (!long_name.empty()) {
      name = long_name;
      long_name.clear();
    }

    const std::uint64_t padded = (size + 511) / 512 * 512;
    if (type == 'L' || type == 'x') {
      std::string data(padded, '\0');
      read_exact(data.data(), padded);
      data.resize(size);
      if (type == 'L') {
        long_name = cstr(data.data(), data.size());
      } else {
        // pax: "<len> path=<value>\n" records
        std::size_t pos = 0;
        while (pos < data.size()) {
          const auto sp = data.find(' ', pos);
          if (sp == std::string::npos) break;
          const std::size_t len = std::stoul(data.substr(pos, sp - pos));
          if (len == 0) break;
          const std::string rec = data.substr(sp + 1, len - (sp - pos) - 2);
          if (rec.rfind("path=", 0) == 0) long_name = rec.substr(5);
          pos += len;
        }
      }
      continue;
    }

    const bool regular = type == '0' || type == '\0' || type == '7';
    if (!regular) {
      // directories, links, global headers: contents skipped
      for (std::uint64_t left = padded; left > 0;) {
        const std::size_t chunk = static_cast<std::size_t>(std::min<std::uint64_t>(left, buffer.size()));
        read_exact(buffer.data(), chunk);
        left -= chunk;
      }
      continue;
    }

    const fs::path target = safe_member_path(out_dir, name);
    fs::create_directories(target.parent_path());
    std::ofstream out(target, std::ios::binary);
    if (!out) throw AcquireError("extract", "cannot write " + target.string());
    for (std::uint64_t left = padded, payload = size; left > 0;) {
      const std::size_t chunk = static_cast<std::size_t>(std::min<std::uint64_t>(left, buffer.size()));
      read_exact(buffer.data(), chunk);
      const std::size_t keep = static_cast<std::size_t>(std::min<std::uint64_t>(payload, chunk));
      out.write(buffer.data(), static_cast<std::streamsize>(keep));
      payload -= keep;
      left -= chunk;
    }
    if (!out) throw AcquireError("extract", "cannot write " + target.string());
  }
  int err = Z_OK;
  gzerror(gz, &err);
  if (err != Z_OK && err != Z_STREAM_END)
    throw AcquireError("extract", "corrupt compressed tar " + archive.string());
}

std::unique_ptr<LineSource> acquire_input(const fs::path& path, std::string_view format_hint,
                                          const AcquireConfig& config, AcquisitionLog* log) {
  if (!fs::exists(path)) throw AcquireError("open", "no such file " + path.string());
  Resolver resolver(config, serialization_from_hint(format_hint), log);
  if (fs::is_directory(path)) {
    throw AcquireError("open", path.string() + " is a directory");
  }
  resolver.resolve(path, path.filename(), /*top_level=*/true);
  auto segments = resolver.take_segments();
  if (segments.empty()) throw AcquireError("scan", "no RDF member found in " + path.string());
  return std::make_unique<ChainedLineSource>(std::move(segments), resolver.take_scratch());
}

}  // namespace lodgraph
