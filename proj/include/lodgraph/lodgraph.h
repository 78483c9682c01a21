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

#ifndef LODGRAPH_LODGRAPH_H
#define LODGRAPH_LODGRAPH_H

/* C interface of the lodgraph shared library.
 *
 * Every fallible call returns an lg_status. On failure the message is kept
 * per thread and can be read with lg_last_error() until the next failing
 * call on that thread. Strings returned through char** are owned by the
 * caller and released with lg_string_free(). */

#include <stdint.h>

#if defined(_WIN32)
#if defined(LODGRAPH_BUILDING)
#define LG_API __declspec(dllexport)
#else
#define LG_API __declspec(dllimport)
#endif
#else
#define LG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lg_status {
  LG_OK = 0,
  LG_ERR_INVALID_ARGUMENT = 1,
  LG_ERR_IO = 2,
  LG_ERR_PARSE = 3,
  LG_ERR_INTEGRITY = 4,
  LG_ERR_NOT_FOUND = 5,
  LG_ERR_FORMAT = 6,
  LG_ERR_ACQUIRE = 7,
  LG_ERR_UNDEFINED = 8, /* measure has no value on this graph */
  LG_ERR_NETWORK = 9,
  LG_ERR_INTERNAL = 10,
  LG_ERR_BATCH_FAILURES = 11 /* batch finished, at least one dataset failed */
} lg_status;

typedef struct lg_config lg_config;
typedef struct lg_graph lg_graph;
typedef struct lg_report lg_report;
typedef struct lg_dictionary lg_dictionary;

LG_API const char* lg_version(void);
LG_API const char* lg_status_string(lg_status status);
LG_API const char* lg_last_error(void);
LG_API void lg_string_free(char* s);

/* ---- configuration ---- */

typedef void (*lg_progress_fn)(const char* stage, const char* dataset, const char* status,
                               double seconds, void* user);

LG_API lg_status lg_config_create(lg_config** out);
LG_API void lg_config_destroy(lg_config* config);
/* Keys: workers_prepare, workers_analyze, hash_algorithm, hash_seed, damping,
 * pagerank_tolerance, pagerank_max_iterations, powerlaw_estimator,
 * powerlaw_min_tail, converter_command, extractor_command, bzip2_command,
 * work_dir, http_timeout, plots, save_binary. */
LG_API lg_status lg_config_set(lg_config* config, const char* key, const char* value);
LG_API lg_status lg_config_load_file(lg_config* config, const char* path);
/* prefix NULL means "LODGRAPH_". */
LG_API lg_status lg_config_apply_env(lg_config* config, const char* prefix);
/* Batch progress; callbacks are serialized. */
LG_API lg_status lg_config_set_progress(lg_config* config, lg_progress_fn fn, void* user);

/* ---- ingest ---- */

typedef struct lg_ingest_stats {
  uint64_t triples;
  uint64_t distinct_terms;
  uint64_t valid_lines;
  uint64_t skipped_lines; /* blank and comment lines */
  uint64_t malformed_lines;
} lg_ingest_stats;

/* format_hint may be NULL or empty (detect from the file name). stats may be
 * NULL. */
LG_API lg_status lg_prepare(const lg_config* config, const char* input, const char* format_hint,
                            const char* edgelist_path, const char* dictionary_path,
                            lg_ingest_stats* stats);
/* Hash of an N-Triples term surface form as 16 lowercase hex digits. */
LG_API lg_status lg_hash_term(const lg_config* config, const char* surface, char out_hex[17]);

LG_API lg_status lg_dictionary_load(const char* path, lg_dictionary** out);
LG_API void lg_dictionary_destroy(lg_dictionary* dictionary);
/* *term stays valid until the dictionary is destroyed. */
LG_API lg_status lg_dictionary_resolve(const lg_dictionary* dictionary, const char* hash_hex,
                                       const char** term);

/* ---- graphs ---- */

LG_API lg_status lg_graph_build(const char* edgelist_path, lg_graph** out);
LG_API lg_status lg_graph_load(const char* binary_path, lg_graph** out);
/* Binary graph or edgelist, decided by the file's magic bytes. */
LG_API lg_status lg_graph_open(const char* path, lg_graph** out);
LG_API lg_status lg_graph_save(const lg_graph* graph, const char* binary_path);
LG_API void lg_graph_destroy(lg_graph* graph);
LG_API uint64_t lg_graph_num_vertices(const lg_graph* graph);
LG_API uint64_t lg_graph_num_edges(const lg_graph* graph);

/* mode: "total", "in" or "out". Histogram rows with the fitted power law in
 * the header line. */
LG_API lg_status lg_histogram_tsv(const lg_config* config, const lg_graph* graph, const char* mode,
                                  char** tsv);
/* Writes <dir>/<id>.total.tsv and <dir>/<id>.in.tsv. */
LG_API lg_status lg_write_plots(const lg_config* config, const lg_graph* graph, const char* dir,
                                const char* id);

/* ---- reports ---- */

LG_API lg_status lg_analyze(const lg_config* config, const lg_graph* graph, const char* dataset,
                            const char* domain, lg_report** out);
LG_API lg_status lg_report_read(const char* path, lg_report** out);
LG_API lg_status lg_report_write(const lg_report* report, const char* path);
LG_API lg_status lg_report_to_json(const lg_report* report, char** json);
/* LG_ERR_UNDEFINED when the measure is null, LG_ERR_NOT_FOUND for an unknown
 * name. */
LG_API lg_status lg_report_get(const lg_report* report, const char* measure, double* value);
LG_API void lg_report_destroy(lg_report* report);

/* ---- batch ---- */

typedef struct lg_batch_summary {
  uint64_t succeeded;
  uint64_t failed;
  uint64_t skipped;
} lg_batch_summary;

/* Returns LG_ERR_BATCH_FAILURES (summary filled) if any dataset failed. */
LG_API lg_status lg_batch_run(const lg_config* config, const char* manifest_path,
                              const char* out_dir, lg_batch_summary* summary);
/* TSV: id, media_type, available, http_status, detail. */
LG_API lg_status lg_probe(const lg_config* config, const char* manifest_path, char** tsv,
                          uint64_t* unavailable);

/* measures: comma-separated names, NULL or empty for the minimal set.
 * domain: restrict to reports of one domain, NULL for all. */
LG_API lg_status lg_correlate(const char* report_dir, const char* measures, const char* domain,
                              char** matrix_csv, char** heatmap_tsv);

#ifdef __cplusplus
}
#endif

#endif /* LODGRAPH_LODGRAPH_H */
