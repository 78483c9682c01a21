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

#include "lodgraph/lodgraph.h"

#include <cstdlib>
#include <cstring>
#include <mutex>
#include <new>
#include <sstream>
#include <string>

#include "lodgraph/config.hpp"
#include "lodgraph/correlation.hpp"
#include "lodgraph/error.hpp"
#include "lodgraph/graph.hpp"
#include "lodgraph/ingest.hpp"
#include "lodgraph/pipeline.hpp"
#include "lodgraph/report.hpp"
#include "lodgraph/stats_fit.hpp"

struct lg_config {
  lodgraph::Config config;
  lg_progress_fn progress_fn = nullptr;
  void* progress_user = nullptr;
  std::mutex progress_mutex;
};

struct lg_graph {
  lodgraph::Graph graph;
};

struct lg_report {
  lodgraph::MeasureReport report;
};

struct lg_dictionary {
  lodgraph::TermDictionary dictionary;
};

namespace {

thread_local std::string last_error;

lg_status to_status(lodgraph::ErrorCode code) {
  using lodgraph::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return LG_ERR_INVALID_ARGUMENT;
    case ErrorCode::Io: return LG_ERR_IO;
    case ErrorCode::Parse: return LG_ERR_PARSE;
    case ErrorCode::Integrity: return LG_ERR_INTEGRITY;
    case ErrorCode::NotFound: return LG_ERR_NOT_FOUND;
    case ErrorCode::Format: return LG_ERR_FORMAT;
    case ErrorCode::Acquire: return LG_ERR_ACQUIRE;
    case ErrorCode::Undefined: return LG_ERR_UNDEFINED;
    case ErrorCode::Network: return LG_ERR_NETWORK;
    case ErrorCode::Internal: return LG_ERR_INTERNAL;
  }
  return LG_ERR_INTERNAL;
}

lg_status fail(lg_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <class F>
lg_status guarded(F&& body) noexcept {
  try {
    return body();
  } catch (const lodgraph::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(LG_ERR_INTERNAL, "out of memory");
  } catch (const std::filesystem::filesystem_error& e) {
    return fail(LG_ERR_IO, e.what());
  } catch (const std::exception& e) {
    return fail(LG_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(LG_ERR_INTERNAL, "unknown exception");
  }
}

#define LG_REQUIRE(cond)                                             \
  do {                                                               \
    if (!(cond)) return fail(LG_ERR_INVALID_ARGUMENT, #cond " is required"); \
  } while (0)

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

const lodgraph::Config& config_or_default(const lg_config* c) {
  static const lodgraph::Config defaults;
  return c ? c->config : defaults;
}

}  // namespace

extern "C" {

const char* lg_version(void) { return LODGRAPH_VERSION; }

const char* lg_status_string(lg_status status) {
  switch (status) {
    case LG_OK: return "ok";
    case LG_ERR_INVALID_ARGUMENT: return "invalid argument";
    case LG_ERR_IO: return "i/o error";
    case LG_ERR_PARSE: return "parse error";
    case LG_ERR_INTEGRITY: return "integrity error";
    case LG_ERR_NOT_FOUND: return "not found";
    case LG_ERR_FORMAT: return "format error";
    case LG_ERR_ACQUIRE: return "acquisition error";
    case LG_ERR_UNDEFINED: return "undefined";
    case LG_ERR_NETWORK: return "network error";
    case LG_ERR_INTERNAL: return "internal error";
    case LG_ERR_BATCH_FAILURES: return "some datasets failed";
  }
  return "unknown status";
}

const char* lg_last_error(void) { return last_error.c_str(); }

void lg_string_free(char* s) { std::free(s); }

// ---- configuration ----

lg_status lg_config_create(lg_config** out) {
  LG_REQUIRE(out);
  return guarded([&] {
    *out = new lg_config;
    return LG_OK;
  });
}

void lg_config_destroy(lg_config* config) { delete config; }

lg_status lg_config_set(lg_config* config, const char* key, const char* value) {
  LG_REQUIRE(config && key && value);
  return guarded([&] {
    lodgraph::apply_setting(config->config, key, value);
    return LG_OK;
  });
}

lg_status lg_config_load_file(lg_config* config, const char* path) {
  LG_REQUIRE(config && path);
  return guarded([&] {
    lodgraph::apply_config_file(config->config, path);
    return LG_OK;
  });
}

lg_status lg_config_apply_env(lg_config* config, const char* prefix) {
  LG_REQUIRE(config);
  return guarded([&] {
    lodgraph::apply_environment(config->config, prefix ? prefix : "LODGRAPH_");
    return LG_OK;
  });
}

lg_status lg_config_set_progress(lg_config* config, lg_progress_fn fn, void* user) {
  LG_REQUIRE(config);
  config->progress_fn = fn;
  config->progress_user = user;
  if (!fn) {
    config->config.progress = nullptr;
    return LG_OK;
  }
  config->config.progress = [config](const lodgraph::ProgressEvent& e) {
    std::lock_guard lock(config->progress_mutex);
    config->progress_fn(lodgraph::to_string(e.stage), e.dataset.c_str(), e.status.c_str(), e.seconds,
                        config->progress_user);
  };
  return LG_OK;
}

// ---- ingest ----

lg_status lg_prepare(const lg_config* config, const char* input, const char* format_hint,
                     const char* edgelist_path, const char* dictionary_path, lg_ingest_stats* stats) {
  LG_REQUIRE(input && edgelist_path && dictionary_path);
  return guarded([&] {
    const auto s = lodgraph::prepare_dataset(input, format_hint ? format_hint : "",
                                             config_or_default(config), edgelist_path, dictionary_path);
    if (stats) {
      stats->triples = s.triples;
      stats->distinct_terms = s.distinct_terms;
      stats->valid_lines = s.parse.valid;
      stats->skipped_lines = s.parse.skipped;
      stats->malformed_lines = s.parse.malformed;
    }
    return LG_OK;
  });
}

lg_status lg_hash_term(const lg_config* config, const char* surface, char out_hex[17]) {
  LG_REQUIRE(surface && out_hex);
  return guarded([&] {
    const lodgraph::TermHasher hasher(config_or_default(config).hash);
    lodgraph::write_hex(hasher(surface).value, out_hex);
    out_hex[16] = '\0';
    return LG_OK;
  });
}

lg_status lg_dictionary_load(const char* path, lg_dictionary** out) {
  LG_REQUIRE(path && out);
  return guarded([&] {
    *out = new lg_dictionary{lodgraph::TermDictionary::load(path)};
    return LG_OK;
  });
}

void lg_dictionary_destroy(lg_dictionary* dictionary) { delete dictionary; }

lg_status lg_dictionary_resolve(const lg_dictionary* dictionary, const char* hash_hex,
                                const char** term) {
  LG_REQUIRE(dictionary && hash_hex && term);
  return guarded([&] {
    const auto hash = lodgraph::TermHash::parse(hash_hex);
    if (!hash) return fail(LG_ERR_INVALID_ARGUMENT, std::string("not a 64-bit hex hash: ") + hash_hex);
    const auto found = dictionary->dictionary.find(*hash);
    if (!found) return fail(LG_ERR_NOT_FOUND, std::string("hash not in dictionary: ") + hash_hex);
    *term = found->data();  // entries are std::strings, so NUL-terminated
    return LG_OK;
  });
}

// ---- graphs ----

lg_status lg_graph_build(const char* edgelist_path, lg_graph** out) {
  LG_REQUIRE(edgelist_path && out);
  return guarded([&] {
    *out = new lg_graph{lodgraph::build_graph_file(edgelist_path)};
    return LG_OK;
  });
}

lg_status lg_graph_load(const char* binary_path, lg_graph** out) {
  LG_REQUIRE(binary_path && out);
  return guarded([&] {
    *out = new lg_graph{lodgraph::load_binary(std::filesystem::path(binary_path))};
    return LG_OK;
  });
}

lg_status lg_graph_open(const char* path, lg_graph** out) {
  LG_REQUIRE(path && out);
  return guarded([&] {
    return lodgraph::is_binary_graph(path) ? lg_graph_load(path, out) : lg_graph_build(path, out);
  });
}

lg_status lg_graph_save(const lg_graph* graph, const char* binary_path) {
  LG_REQUIRE(graph && binary_path);
  return guarded([&] {
    lodgraph::save_binary(graph->graph, std::filesystem::path(binary_path));
    return LG_OK;
  });
}

void lg_graph_destroy(lg_graph* graph) { delete graph; }

uint64_t lg_graph_num_vertices(const lg_graph* graph) { return graph ? graph->graph.num_vertices() : 0; }

uint64_t lg_graph_num_edges(const lg_graph* graph) { return graph ? graph->graph.num_edges() : 0; }

lg_status lg_histogram_tsv(const lg_config* config, const lg_graph* graph, const char* mode,
                           char** tsv) {
  LG_REQUIRE(graph && mode && tsv);
  return guarded([&] {
    const auto m = lodgraph::parse_degree_mode(mode);
    if (!m) return fail(LG_ERR_INVALID_ARGUMENT, std::string("unknown degree mode '") + mode + "'");
    const auto degrees = lodgraph::degree_sequence(graph->graph, *m);
    std::ostringstream out;
    lodgraph::export_plotdata(lodgraph::make_histogram(degrees, *m),
                              lodgraph::fit_powerlaw(degrees, config_or_default(config).measures.powerlaw),
                              out);
    *tsv = dup_string(out.str());
    return LG_OK;
  });
}

lg_status lg_write_plots(const lg_config* config, const lg_graph* graph, const char* dir,
                         const char* id) {
  LG_REQUIRE(graph && dir && id);
  return guarded([&] {
    lodgraph::write_plots(graph->graph, config_or_default(config).measures, dir, id);
    return LG_OK;
  });
}

// ---- reports ----

lg_status lg_analyze(const lg_config* config, const lg_graph* graph, const char* dataset,
                     const char* domain, lg_report** out) {
  LG_REQUIRE(graph && out);
  return guarded([&] {
    *out = new lg_report{lodgraph::compute_measures(graph->graph, config_or_default(config).measures,
                                                    dataset ? dataset : "", domain ? domain : "")};
    return LG_OK;
  });
}

lg_status lg_report_read(const char* path, lg_report** out) {
  LG_REQUIRE(path && out);
  return guarded([&] {
    *out = new lg_report{lodgraph::read_report(path)};
    return LG_OK;
  });
}

lg_status lg_report_write(const lg_report* report, const char* path) {
  LG_REQUIRE(report && path);
  return guarded([&] {
    lodgraph::write_report(report->report, path);
    return LG_OK;
  });
}

lg_status lg_report_to_json(const lg_report* report, char** json) {
  LG_REQUIRE(report && json);
  return guarded([&] {
    *json = dup_string(lodgraph::report_to_json(report->report));
    return LG_OK;
  });
}

lg_status lg_report_get(const lg_report* report, const char* measure, double* value) {
  LG_REQUIRE(report && measure && value);
  return guarded([&] {
    const auto v = lodgraph::measure_value(report->report, measure);
    if (!v) return fail(LG_ERR_UNDEFINED, std::string(measure) + " is undefined for this dataset");
    *value = *v;
    return LG_OK;
  });
}

void lg_report_destroy(lg_report* report) { delete report; }

// ---- batch ----

lg_status lg_batch_run(const lg_config* config, const char* manifest_path, const char* out_dir,
                       lg_batch_summary* summary) {
  LG_REQUIRE(manifest_path && out_dir);
  return guarded([&] {
    const auto manifest = lodgraph::read_manifest(manifest_path);
    const auto result = lodgraph::run_batch(manifest, config_or_default(config), out_dir);
    const auto& ledger = result.ledger;
    if (summary) {
      summary->succeeded = ledger.count(lodgraph::Outcome::Succeeded);
      summary->failed = ledger.count(lodgraph::Outcome::Failed);
      summary->skipped = ledger.count(lodgraph::Outcome::Skipped);
    }
    if (result.all_succeeded()) return LG_OK;
    std::string message = "failed datasets:";
    for (const auto& row : ledger.rows)
      if (row.outcome == lodgraph::Outcome::Failed)
        message += std::string(" ") + row.id + " (" + lodgraph::to_string(row.last_stage) + ": " +
                   row.reason + ")";
    return fail(LG_ERR_BATCH_FAILURES, message);
  });
}

lg_status lg_probe(const lg_config* config, const char* manifest_path, char** tsv,
                   uint64_t* unavailable) {
  LG_REQUIRE(manifest_path && tsv);
  return guarded([&] {
    const auto rows = lodgraph::probe_availability(lodgraph::read_manifest(manifest_path),
                                                   config_or_default(config));
    std::ostringstream out;
    lodgraph::write_probe_tsv(rows, out);
    if (unavailable) {
      *unavailable = 0;
      for (const auto& r : rows) *unavailable += r.availability.available ? 0 : 1;
    }
    *tsv = dup_string(out.str());
    return LG_OK;
  });
}

lg_status lg_correlate(const char* report_dir, const char* measures, const char* domain,
                       char** matrix_csv, char** heatmap_tsv) {
  LG_REQUIRE(report_dir && matrix_csv);
  return guarded([&] {
    auto reports = lodgraph::read_report_dir(report_dir);
    if (domain && *domain)
      std::erase_if(reports, [&](const lodgraph::MeasureReport& r) { return r.domain != domain; });

    std::vector<std::string> names;
    if (measures && *measures) {
      std::stringstream list(measures);
      std::string name;
      while (std::getline(list, name, ','))
        if (!name.empty()) names.push_back(name);
    } else {
      names = lodgraph::minimal_measure_set();
    }
    const auto c = lodgraph::correlation_matrix(lodgraph::make_measure_matrix(reports, names));
    std::ostringstream csv, heat;
    lodgraph::write_correlation_csv(c, csv);
    char* csv_out = dup_string(csv.str());
    if (heatmap_tsv) {
      lodgraph::write_heatmap_tsv(c, heat);
      try {
        *heatmap_tsv = dup_string(heat.str());
      } catch (...) {
        std::free(csv_out);
        throw;
      }
    }
    *matrix_csv = csv_out;
    return LG_OK;
  });
}

}  // extern "C"
