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

#include "lodgraph/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <condition_variable>
#include <deque>
#include <fstream>
#include <json.hpp>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "lodgraph/acquire.hpp"
#include "lodgraph/error.hpp"
#include "lodgraph/format.hpp"
#include "lodgraph/graph.hpp"
#include "lodgraph/report.hpp"
#include "lodgraph/stats_fit.hpp"

namespace fs = std::filesystem;

namespace lodgraph {

// --- manifest ------------------------------------------------------------

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

void validate(const Manifest& m) {
  std::set<std::string> ids;
  for (const auto& e : m.entries) {
    if (e.id.empty()) throw Error(ErrorCode::InvalidArgument, "manifest entry without id");
    if (e.id.find_first_of("/\\") != std::string::npos || e.id.front() == '.')
      throw Error(ErrorCode::InvalidArgument, "manifest id '" + e.id + "' is not a safe file name");
    if (!ids.insert(e.id).second)
      throw Error(ErrorCode::InvalidArgument, "duplicate manifest id '" + e.id + "'");
  }
}

}  // namespace

Manifest parse_manifest(std::string_view text, bool json) {
  Manifest m;
  if (json) {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::Parse, std::string("manifest is not valid JSON: ") + e.what());
    }
    if (!doc.is_array()) throw Error(ErrorCode::Parse, "JSON manifest must be an array");
    for (const auto& item : doc) {
      if (!item.is_object()) throw Error(ErrorCode::Parse, "manifest entries must be objects");
      auto field = [&](const char* key) {
        auto it = item.find(key);
        return it != item.end() && it->is_string() ? it->get<std::string>() : std::string();
      };
      m.entries.push_back({field("id"), field("domain"), field("url"), field("media_type")});
    }
  } else {
    std::istringstream in{std::string(text)};
    std::string line;
    std::vector<std::string> header;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (trim(line).empty() || line.front() == '#') continue;
      auto cols = split(line, '\t');
      if (header.empty()) {
        for (auto& c : cols) header.push_back(trim(c));
        for (const char* need : {"id", "url"})
          if (std::find(header.begin(), header.end(), need) == header.end())
            throw Error(ErrorCode::Parse, std::string("TSV manifest header lacks '") + need + "'");
        continue;
      }
      ManifestEntry e;
      for (std::size_t i = 0; i < header.size() && i < cols.size(); ++i) {
        const std::string v = trim(cols[i]);
        if (header[i] == "id") e.id = v;
        else if (header[i] == "domain") e.domain = v;
        else if (header[i] == "url") e.url = v;
        else if (header[i] == "media_type") e.media_type = v;
      }
      m.entries.push_back(std::move(e));
    }
  }
  validate(m);
  return m;
}

Manifest read_manifest(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open manifest " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  const bool json = path.extension() == ".json" || (first != std::string::npos && text[first] == '[');
  Manifest m = parse_manifest(text, json);
  m.base_dir = fs::absolute(path).parent_path();
  return m;
}

MediaTypeMapping map_media_type(std::string_view declared) {
  std::string s;
  for (char c : declared) s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  s = trim(s);
  if (s.empty()) return {MediaTypeStatus::Mapped, ""};

  std::vector<std::string> tokens;
  std::string cur;
  for (char c : s) {
    if (std::isalnum(static_cast<unsigned char>(c))) {
      cur += c;
    } else if (!cur.empty()) {
      tokens.push_back(std::move(cur));
      cur.clear();
    }
  }
  if (!cur.empty()) tokens.push_back(std::move(cur));

  static const std::set<std::string, std::less<>> neutral = {"application", "text", "x", "gzip",
                                                            "gz", "bz2", "bzip2", "zip", "tar",
                                                            "tgz", "compressed", "dump"};
  std::set<std::string> formats;
  bool rdf = false, xml = false, foreign = false;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const std::string& t = tokens[i];
    const std::string next = i + 1 < tokens.size() ? tokens[i + 1] : "";
    if (t == "n" && (next == "triples" || next == "quads")) {
      formats.insert(next == "triples" ? "nt" : "nq");
      ++i;
    } else if (t == "nt" || t == "ntriples") {
      formats.insert("nt");
    } else if (t == "nq" || t == "nquads") {
      formats.insert("nq");
    } else if (t == "n3" || t == "notation3") {
      formats.insert("n3");
    } else if (t == "ttl" || t == "turtle") {
      formats.insert("ttl");
    } else if (t == "rdfxml" || t == "owl") {
      formats.insert("rdfxml");
    } else if (t == "rdf") {
      rdf = true;
    } else if (t == "xml") {
      xml = true;
    } else if (!neutral.contains(t)) {
      foreign = true;
    }
  }
  if (rdf && xml) formats.insert("rdfxml");
  else if (xml) foreign = true;
  if (rdf && formats.empty()) formats.insert("rdfxml");

  if (formats.empty()) return {MediaTypeStatus::Unknown, ""};
  if (formats.size() > 1 || foreign) return {MediaTypeStatus::Ambiguous, ""};
  const std::string& f = *formats.begin();
  if (f == "nt") return {MediaTypeStatus::Mapped, "application/n-triples"};
  if (f == "nq") return {MediaTypeStatus::Mapped, "application/n-quads"};
  if (f == "n3") return {MediaTypeStatus::Mapped, "text/n3"};
  if (f == "ttl") return {MediaTypeStatus::Mapped, "text/turtle"};
  return {MediaTypeStatus::Mapped, "application/rdf+xml"};
}

// --- stages --------------------------------------------------------------

fs::path local_path(const Manifest& manifest, const std::string& location) {
  fs::path p = location.starts_with("file://") ? fs::path(location.substr(7)) : fs::path(location);
  if (p.is_relative() && !manifest.base_dir.empty()) p = manifest.base_dir / p;
  return p;
}

IngestStats prepare_dataset(const fs::path& input, std::string_view format_hint, const Config& config,
                            const fs::path& edgelist, const fs::path& dictionary) {
  const TermHasher hasher(config.hash);
  auto source = acquire_input(input, format_hint, config.acquire);
  return write_edgelist_files(*source, hasher, edgelist, dictionary);
}

void write_plots(const Graph& g, const MeasureOptions& options, const fs::path& dir,
                 const std::string& id) {
  if (g.empty()) return;
  fs::create_directories(dir);
  for (DegreeMode mode : {DegreeMode::Total, DegreeMode::In}) {
    const auto degrees = degree_sequence(g, mode);
    export_plotdata(make_histogram(degrees, mode), fit_powerlaw(degrees, options.powerlaw),
                    dir / (id + "." + to_string(mode) + ".tsv"));
  }
}

// --- worker pool -----------------------------------------------------------

namespace {

class WorkerPool {
 public:
  explicit WorkerPool(unsigned workers) {
    for (unsigned i = 0; i < std::max(1u, workers); ++i)
      threads_.emplace_back([this] { run(); });
  }
  ~WorkerPool() {
    {
      std::lock_guard lock(mutex_);
      stopping_ = true;
    }
    cv_.notify_all();
  }
  WorkerPool(const WorkerPool&) = delete;
  WorkerPool& operator=(const WorkerPool&) = delete;

  void submit(std::function<void()> task) {
    {
      std::lock_guard lock(mutex_);
      tasks_.push_back(std::move(task));
      ++pending_;
    }
    cv_.notify_one();
  }

  void wait_idle() {
    std::unique_lock lock(mutex_);
    idle_cv_.wait(lock, [this] { return pending_ == 0; });
  }

 private:
  void run() {
    while (true) {
      std::function<void()> task;
      {
        std::unique_lock lock(mutex_);
        cv_.wait(lock, [this] { return stopping_ || !tasks_.empty(); });
        if (tasks_.empty()) return;
        task = std::move(tasks_.front());
        tasks_.pop_front();
      }
      task();  // tasks never throw
      {
        std::lock_guard lock(mutex_);
        if (--pending_ == 0) idle_cv_.notify_all();
      }
    }
  }

  std::mutex mutex_;
  std::condition_variable cv_;
  std::condition_variable idle_cv_;
  std::deque<std::function<void()>> tasks_;
  std::size_t pending_ = 0;
  bool stopping_ = false;
  std::vector<std::jthread> threads_;
};

struct StageFailure {
  Stage stage;
  std::string reason;
};

// Single writer for ledger rows and progress events.
class LedgerWriter {
 public:
  LedgerWriter(RunLedger& ledger, const ProgressSink& progress) : ledger_(ledger), progress_(progress) {}

  template <class F>
  void update(std::size_t row, F&& f) {
    std::lock_guard lock(mutex_);
    f(ledger_.rows[row]);
  }

  void event(Stage stage, const std::string& id, const char* status, double seconds) {
    std::lock_guard lock(mutex_);
    if (progress_) progress_(ProgressEvent{stage, id, status, seconds});
  }

 private:
  std::mutex mutex_;
  RunLedger& ledger_;
  const ProgressSink& progress_;
};

}  // namespace

// --- probing -------------------------------------------------------------

std::vector<ProbeRow> probe_availability(const Manifest& manifest, const Config& config) {
  std::vector<ProbeRow> rows(manifest.entries.size());
  WorkerPool pool(config.workers_prepare);
  for (std::size_t i = 0; i < manifest.entries.size(); ++i) {
    pool.submit([&, i] {
      const auto& e = manifest.entries[i];
      ProbeRow& row = rows[i];
      row.id = e.id;
      row.media_type = map_media_type(e.media_type);
      if (row.media_type.status != MediaTypeStatus::Mapped) {
        row.availability = {false, 0,
                            row.media_type.status == MediaTypeStatus::Ambiguous ? "ambiguous media type"
                                                                                 : "unknown media type"};
        return;
      }
      const std::string where = is_url(e.url) ? e.url : local_path(manifest, e.url).string();
      row.availability = probe_location(where, config.http_timeout);
    });
  }
  pool.wait_idle();
  return rows;
}

void write_probe_tsv(const std::vector<ProbeRow>& rows, std::ostream& out) {
  out << "id\tmedia_type\tavailable\thttp_status\tdetail\n";
  for (const auto& r : rows) {
    const char* media = r.media_type.status == MediaTypeStatus::Ambiguous ? "ambiguous"
                        : r.media_type.status == MediaTypeStatus::Unknown ? "unknown"
                        : r.media_type.canonical.empty()                  ? "auto"
                                                                          : r.media_type.canonical.c_str();
    out << r.id << '\t' << media << '\t' << (r.availability.available ? "yes" : "no") << '\t'
        << r.availability.http_status << '\t' << r.availability.detail << '\n';
  }
}

// --- batch ---------------------------------------------------------------

const char* to_string(Outcome outcome) noexcept {
  switch (outcome) {
    case Outcome::Succeeded: return "succeeded";
    case Outcome::Failed: return "failed";
    case Outcome::Skipped: return "skipped";
  }
  return "unknown";
}

std::size_t RunLedger::count(Outcome outcome) const noexcept {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [&](const LedgerRow& r) { return r.outcome == outcome; }));
}

namespace {

std::string clean_field(std::string s) {
  std::replace_if(s.begin(), s.end(), [](char c) { return c == '\t' || c == '\n' || c == '\r'; }, ' ');
  return s;
}

}  // namespace

void RunLedger::write_tsv(std::ostream& out) const {
  out << "id\tdomain\toutcome\tstage\treason\ttriples\tmalformed_lines\n";
  for (const auto& r : rows)
    out << r.id << '\t' << r.domain << '\t' << to_string(r.outcome) << '\t' << to_string(r.last_stage)
        << '\t' << clean_field(r.reason) << '\t' << r.triples << '\t' << r.malformed_lines << '\n';
}

void RunLedger::write_timings_tsv(std::ostream& out) const {
  out << "id";
  for (Stage s : {Stage::Probe, Stage::Download, Stage::Prepare, Stage::Build, Stage::Analyze})
    out << '\t' << to_string(s);
  out << '\n';
  for (const auto& r : rows) {
    out << r.id;
    for (const auto& t : r.seconds) out << '\t' << (t ? format_double(*t) : "NA");
    out << '\n';
  }
}

BatchResult run_batch(const Manifest& manifest, const Config& config, const fs::path& out_dir) {
  const fs::path data_dir = out_dir / "data";
  const fs::path report_dir = out_dir / "reports";
  const fs::path plot_dir = out_dir / "plots";
  fs::create_directories(data_dir);
  fs::create_directories(report_dir);
  if (config.plots) fs::create_directories(plot_dir);

  BatchResult result;
  result.ledger.rows.resize(manifest.entries.size());
  for (std::size_t i = 0; i < manifest.entries.size(); ++i) {
    result.ledger.rows[i].id = manifest.entries[i].id;
    result.ledger.rows[i].domain = manifest.entries[i].domain;
  }
  std::vector<std::optional<MeasureReport>> reports(manifest.entries.size());
  LedgerWriter ledger(result.ledger, config.progress);

  using Clock = std::chrono::steady_clock;
  // Runs one stage, records its time; returns false (and records the
  // failure) if it threw.
  auto stage = [&](std::size_t row, Stage s, auto&& body) -> bool {
    const auto& id = manifest.entries[row].id;
    const auto start = Clock::now();
    std::string failure;
    try {
      if (config.stage_hook) config.stage_hook(id, s);
      body();
    } catch (const std::exception& e) {
      failure = e.what();
      if (failure.empty()) failure = "unknown failure";
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    ledger.update(row, [&](LedgerRow& r) {
      r.seconds[static_cast<std::size_t>(s)] = secs;
      r.last_stage = s;
      if (!failure.empty()) {
        r.outcome = Outcome::Failed;
        r.reason = failure;
      }
    });
    ledger.event(s, id, failure.empty() ? "ok" : "failed", secs);
    return failure.empty();
  };

  auto skip = [&](std::size_t row, Stage s, std::string reason) {
    ledger.update(row, [&](LedgerRow& r) {
      r.outcome = Outcome::Skipped;
      r.last_stage = s;
      r.reason = std::move(reason);
    });
    ledger.event(s, manifest.entries[row].id, "skipped", 0.0);
  };

  WorkerPool analysis(config.workers_analyze);
  {
    WorkerPool preparation(config.workers_prepare);
    for (std::size_t i = 0; i < manifest.entries.size(); ++i) {
      preparation.submit([&, i] {
        const ManifestEntry& e = manifest.entries[i];
        const fs::path dir = data_dir / e.id;
        const fs::path edgelist = dir / (e.id + ".edgelist");
        const fs::path dictionary = dir / (e.id + ".dict.tsv");

        MediaTypeMapping media;
        Availability avail;
        if (!stage(i, Stage::Probe, [&] {
              media = map_media_type(e.media_type);
              if (media.status == MediaTypeStatus::Mapped)
                avail = probe_location(is_url(e.url) ? e.url : local_path(manifest, e.url).string(),
                                       config.http_timeout);
            }))
          return;
        if (media.status != MediaTypeStatus::Mapped) {
          skip(i, Stage::Probe,
               (media.status == MediaTypeStatus::Ambiguous ? "ambiguous media type '"
                                                           : "unknown media type '") +
                   e.media_type + "'");
          return;
        }
        if (!avail.available) {
          skip(i, Stage::Probe, "unavailable: " + avail.detail);
          return;
        }

        fs::path input;
        if (!stage(i, Stage::Download, [&] {
              fs::create_directories(dir);
              if (is_url(e.url)) {
                input = dir / "download" / url_basename(e.url);
                fs::create_directories(input.parent_path());
                download(e.url, input, config.http_timeout);
              } else {
                input = local_path(manifest, e.url);
              }
            }))
          return;

        IngestStats stats;
        if (!stage(i, Stage::Prepare, [&] {
              stats = prepare_dataset(input, media.canonical, config, edgelist, dictionary);
            }))
          return;
        ledger.update(i, [&](LedgerRow& r) {
          r.triples = stats.triples;
          r.malformed_lines = stats.parse.malformed;
        });

        analysis.submit([&, i, dir, edgelist] {
          const ManifestEntry& e = manifest.entries[i];
          Graph g;
          if (!stage(i, Stage::Build, [&] {
                g = build_graph_file(edgelist);
                if (config.save_binary) save_binary(g, dir / (e.id + ".graph"));
              }))
            return;
          MeasureReport report;
          if (!stage(i, Stage::Analyze, [&] {
                report = compute_measures(g, config.measures, e.id, e.domain);
                write_report(report, report_dir / (e.id + ".json"));
                if (config.plots) write_plots(g, config.measures, plot_dir, e.id);
              }))
            return;
          ledger.update(i, [&](LedgerRow& r) { r.outcome = Outcome::Succeeded; });
          reports[i] = std::move(report);
        });
      });
    }
    preparation.wait_idle();
  }
  analysis.wait_idle();

  for (auto& r : reports)
    if (r) result.reports.push_back(std::move(*r));

  {
    std::ofstream out(out_dir / "ledger.tsv", std::ios::binary | std::ios::trunc);
    result.ledger.write_tsv(out);
    if (!out) throw Error(ErrorCode::Io, "cannot write ledger");
  }
  {
    std::ofstream out(out_dir / "timings.tsv", std::ios::binary | std::ios::trunc);
    result.ledger.write_timings_tsv(out);
    if (!out) throw Error(ErrorCode::Io, "cannot write timings");
  }
  write_aggregate_csv(result.reports, out_dir / "reports.csv");
  return result;
}

}  // namespace lodgraph
