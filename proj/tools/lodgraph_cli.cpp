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

// Command-line front end. Talks to the library only through lodgraph.h.

#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lodgraph/lodgraph.h"

namespace fs = std::filesystem;

namespace {

constexpr int kUsage = 2;
constexpr int kFailure = 1;

struct Failure {
  std::string stage;
  lg_status status;
  std::string detail;
};

void check(lg_status s, const char* stage) {
  if (s != LG_OK) throw Failure{stage, s, lg_last_error()};
}

struct ConfigDeleter { void operator()(lg_config* c) const { lg_config_destroy(c); } };
struct GraphDeleter { void operator()(lg_graph* g) const { lg_graph_destroy(g); } };
struct ReportDeleter { void operator()(lg_report* r) const { lg_report_destroy(r); } };
struct DictDeleter { void operator()(lg_dictionary* d) const { lg_dictionary_destroy(d); } };
struct StringDeleter { void operator()(char* s) const { lg_string_free(s); } };

using ConfigPtr = std::unique_ptr<lg_config, ConfigDeleter>;
using GraphPtr = std::unique_ptr<lg_graph, GraphDeleter>;
using ReportPtr = std::unique_ptr<lg_report, ReportDeleter>;
using DictPtr = std::unique_ptr<lg_dictionary, DictDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

// One machine-readable line per finished stage.
void progress_line(const char* stage, const char* dataset, const char* status, double seconds, void*) {
  std::fprintf(stderr, "progress\tstage=%s\tdataset=%s\tstatus=%s\tseconds=%.3f\n", stage, dataset,
               status, seconds);
}

class StageTimer {
 public:
  StageTimer(const char* stage, std::string dataset) : stage_(stage), dataset_(std::move(dataset)) {}
  void done() {
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    progress_line(stage_, dataset_.c_str(), "ok", s, nullptr);
  }

 private:
  const char* stage_;
  std::string dataset_;
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void write_text(const std::string& path, const char* text, const char* stage) {
  if (path.empty() || path == "-") {
    std::fputs(text, stdout);
    return;
  }
  if (fs::path(path).has_parent_path()) fs::create_directories(fs::path(path).parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  if (!out) throw Failure{stage, LG_ERR_IO, "cannot write " + path};
}

// "dump.nt.gz" -> "dump"
std::string dataset_stem(const fs::path& p) {
  std::string name = p.filename().string();
  const auto dot = name.find('.');
  return dot == 0 || dot == std::string::npos ? name : name.substr(0, dot);
}

struct GlobalOptions {
  std::string config_file;
  std::optional<unsigned> workers_prepare, workers_analyze;
  std::optional<std::uint64_t> hash_seed;
  std::optional<double> damping;
  std::vector<std::string> settings;
};

ConfigPtr make_config(const GlobalOptions& g) {
  lg_config* raw = nullptr;
  check(lg_config_create(&raw), "config");
  ConfigPtr c(raw);
  if (!g.config_file.empty()) check(lg_config_load_file(c.get(), g.config_file.c_str()), "config");
  check(lg_config_apply_env(c.get(), nullptr), "config");
  for (const auto& kv : g.settings) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw Failure{"config", LG_ERR_INVALID_ARGUMENT, "--set expects KEY=VALUE"};
    check(lg_config_set(c.get(), kv.substr(0, eq).c_str(), kv.substr(eq + 1).c_str()), "config");
  }
  if (g.workers_prepare)
    check(lg_config_set(c.get(), "workers_prepare", std::to_string(*g.workers_prepare).c_str()), "config");
  if (g.workers_analyze)
    check(lg_config_set(c.get(), "workers_analyze", std::to_string(*g.workers_analyze).c_str()), "config");
  if (g.hash_seed) check(lg_config_set(c.get(), "hash_seed", std::to_string(*g.hash_seed).c_str()), "config");
  if (g.damping) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", *g.damping);
    check(lg_config_set(c.get(), "damping", buf), "config");
  }
  check(lg_config_set_progress(c.get(), progress_line, nullptr), "config");
  return c;
}

GraphPtr open_graph(const std::string& path) {
  lg_graph* g = nullptr;
  check(lg_graph_open(path.c_str(), &g), "build");
  return GraphPtr(g);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Structural profiling of RDF datasets as directed multigraphs."};
  app.set_version_flag("--version", lg_version());
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions global;
  app.add_option("--config", global.config_file, "JSON config file")->check(CLI::ExistingFile);
  app.add_option("--workers-prepare", global.workers_prepare, "Preparation pool size")
      ->check(CLI::PositiveNumber);
  app.add_option("--workers-analyze", global.workers_analyze, "Analysis pool size")->check(CLI::PositiveNumber);
  app.add_option("--hash-seed", global.hash_seed, "Seed of the term hash");
  app.add_option("--damping", global.damping, "PageRank damping factor")->check(CLI::Range(0.0, 1.0));
  app.add_option("--set", global.settings, "Any config key as KEY=VALUE (repeatable)");
  app.footer("Settings are read from --config, then LODGRAPH_<KEY> environment variables, then flags.");

  // prepare
  std::string prep_input, prep_format, prep_out, prep_dict;
  auto* prepare = app.add_subcommand("prepare", "RDF dump -> edgelist + term dictionary");
  prepare->add_option("input", prep_input, "RDF file or archive")->required()->check(CLI::ExistingFile);
  prepare->add_option("--format", prep_format, "Serialization or media type (nt, ttl, application/rdf+xml, ...)");
  prepare->add_option("--out", prep_out, "Edgelist path [<stem>.edgelist]");
  prepare->add_option("--dict", prep_dict, "Dictionary path [<edgelist stem>.dict.tsv]");

  // build
  std::string build_input, build_out;
  auto* build = app.add_subcommand("build", "Edgelist -> binary graph");
  build->add_option("edgelist", build_input, "Edgelist file")->required()->check(CLI::ExistingFile);
  build->add_option("--out", build_out, "Binary graph path [<stem>.graph]");

  // analyze
  std::string an_input, an_out, an_id, an_domain, an_plot_dir;
  bool an_plots = false;
  auto* analyze = app.add_subcommand("analyze", "Graph -> measure report");
  analyze->add_option("graph", an_input, "Binary graph or edgelist")->required()->check(CLI::ExistingFile);
  analyze->add_option("--out", an_out, "Report path [stdout]");
  analyze->add_option("--id", an_id, "Dataset id recorded in the report [file stem]");
  analyze->add_option("--domain", an_domain, "Domain label recorded in the report");
  analyze->add_flag("--plots", an_plots, "Also write degree distribution plot data");
  analyze->add_option("--plot-dir", an_plot_dir, "Directory for plot data [next to --out]");

  // batch
  std::string batch_manifest, batch_out;
  std::optional<bool> batch_plots;
  auto* batch = app.add_subcommand("batch", "Manifest -> reports, plot data and run ledger");
  batch->add_option("manifest", batch_manifest, "JSON or TSV manifest")->required()->check(CLI::ExistingFile);
  batch->add_option("--out", batch_out, "Output directory")->required();
  batch->add_flag("--plots,!--no-plots", batch_plots, "Write plot data (default on)");

  // probe
  std::string probe_manifest, probe_out;
  auto* probe = app.add_subcommand("probe", "Check availability of every manifest entry");
  probe->add_option("manifest", probe_manifest, "JSON or TSV manifest")->required()->check(CLI::ExistingFile);
  probe->add_option("--out", probe_out, "TSV path [stdout]");

  // hist
  std::string hist_input, hist_out, hist_mode = "total";
  auto* hist = app.add_subcommand("hist", "Graph -> degree histogram with power-law fit");
  hist->add_option("graph", hist_input, "Binary graph or edgelist")->required()->check(CLI::ExistingFile);
  hist->add_option("--mode", hist_mode, "Degree kind")->check(CLI::IsMember({"total", "in", "out"}));
  hist->add_option("--out", hist_out, "TSV path [stdout]");

  // correlate
  std::string cor_dir, cor_measures, cor_domain, cor_out, cor_heatmap;
  auto* correlate = app.add_subcommand("correlate", "Report directory -> Pearson correlation matrix");
  correlate->add_option("reports", cor_dir, "Directory of JSON reports")->required()->check(CLI::ExistingDirectory);
  correlate->add_option("--measures", cor_measures, "Comma-separated measures [n,m,d_max,z,p,y,delta,alpha]");
  correlate->add_option("--domain", cor_domain, "Only reports of this domain");
  correlate->add_option("--out", cor_out, "Matrix CSV path [stdout]");
  correlate->add_option("--heatmap", cor_heatmap, "Also write row/col/r TSV here");

  // resolve
  std::string res_dict;
  std::vector<std::string> res_hashes;
  auto* resolve = app.add_subcommand("resolve", "Dictionary + hash -> RDF term");
  resolve->add_option("dictionary", res_dict, "Dictionary TSV")->required()->check(CLI::ExistingFile);
  resolve->add_option("hashes", res_hashes, "16-digit hex hashes")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    const ConfigPtr config = make_config(global);

    if (*prepare) {
      const fs::path input(prep_input);
      if (prep_out.empty()) prep_out = (fs::path(input).parent_path() / (dataset_stem(input) + ".edgelist")).string();
      if (prep_dict.empty()) prep_dict = (fs::path(prep_out).parent_path() / (dataset_stem(prep_out) + ".dict.tsv")).string();
      StageTimer t("prepare", dataset_stem(input));
      lg_ingest_stats stats{};
      check(lg_prepare(config.get(), prep_input.c_str(), prep_format.c_str(), prep_out.c_str(),
                       prep_dict.c_str(), &stats),
            "prepare");
      t.done();
      std::fprintf(stderr, "prepare\ttriples=%llu\tterms=%llu\tmalformed_lines=%llu\n",
                   static_cast<unsigned long long>(stats.triples),
                   static_cast<unsigned long long>(stats.distinct_terms),
                   static_cast<unsigned long long>(stats.malformed_lines));
    } else if (*build) {
      if (build_out.empty())
        build_out = (fs::path(build_input).parent_path() / (dataset_stem(build_input) + ".graph")).string();
      StageTimer t("build", dataset_stem(build_input));
      lg_graph* raw = nullptr;
      check(lg_graph_build(build_input.c_str(), &raw), "build");
      GraphPtr g(raw);
      check(lg_graph_save(g.get(), build_out.c_str()), "build");
      t.done();
    } else if (*analyze) {
      const std::string id = an_id.empty() ? dataset_stem(an_input) : an_id;
      const GraphPtr g = open_graph(an_input);
      StageTimer t("analyze", id);
      lg_report* raw = nullptr;
      check(lg_analyze(config.get(), g.get(), id.c_str(), an_domain.c_str(), &raw), "analyze");
      ReportPtr report(raw);
      if (an_out.empty() || an_out == "-") {
        char* json = nullptr;
        check(lg_report_to_json(report.get(), &json), "analyze");
        StringPtr owned(json);
        std::fputs(json, stdout);
      } else {
        check(lg_report_write(report.get(), an_out.c_str()), "analyze");
      }
      if (an_plots) {
        if (an_plot_dir.empty())
          an_plot_dir = an_out.empty() || an_out == "-" ? "." : fs::path(an_out).parent_path().string();
        if (an_plot_dir.empty()) an_plot_dir = ".";
        check(lg_write_plots(config.get(), g.get(), an_plot_dir.c_str(), id.c_str()), "analyze");
      }
      t.done();
    } else if (*batch) {
      if (batch_plots) check(lg_config_set(config.get(), "plots", *batch_plots ? "true" : "false"), "config");
      lg_batch_summary summary{};
      const lg_status s = lg_batch_run(config.get(), batch_manifest.c_str(), batch_out.c_str(), &summary);
      if (s != LG_OK && s != LG_ERR_BATCH_FAILURES) check(s, "batch");
      std::fprintf(stderr, "batch\tsucceeded=%llu\tfailed=%llu\tskipped=%llu\n",
                   static_cast<unsigned long long>(summary.succeeded),
                   static_cast<unsigned long long>(summary.failed),
                   static_cast<unsigned long long>(summary.skipped));
      check(s, "batch");
    } else if (*probe) {
      char* tsv = nullptr;
      std::uint64_t unavailable = 0;
      check(lg_probe(config.get(), probe_manifest.c_str(), &tsv, &unavailable), "probe");
      StringPtr owned(tsv);
      write_text(probe_out, tsv, "probe");
    } else if (*hist) {
      const GraphPtr g = open_graph(hist_input);
      char* tsv = nullptr;
      check(lg_histogram_tsv(config.get(), g.get(), hist_mode.c_str(), &tsv), "hist");
      StringPtr owned(tsv);
      write_text(hist_out, tsv, "hist");
    } else if (*correlate) {
      char* csv = nullptr;
      char* heat = nullptr;
      check(lg_correlate(cor_dir.c_str(), cor_measures.c_str(), cor_domain.c_str(), &csv,
                         cor_heatmap.empty() ? nullptr : &heat),
            "correlate");
      StringPtr owned_csv(csv), owned_heat(heat);
      write_text(cor_out, csv, "correlate");
      if (heat) write_text(cor_heatmap, heat, "correlate");
    } else if (*resolve) {
      lg_dictionary* raw = nullptr;
      check(lg_dictionary_load(res_dict.c_str(), &raw), "resolve");
      DictPtr dict(raw);
      for (const auto& h : res_hashes) {
        const char* term = nullptr;
        check(lg_dictionary_resolve(dict.get(), h.c_str(), &term), "resolve");
        std::printf("%s\n", term);
      }
    }
  } catch (const Failure& f) {
    std::fprintf(stderr, "lodgraph: %s: %s: %s\n", f.stage.c_str(), lg_status_string(f.status),
                 f.detail.c_str());
    return kFailure;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "lodgraph: %s\n", e.what());
    return kFailure;
  }
  return 0;
}
