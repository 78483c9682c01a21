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

/* Exercises the C interface from C, so the header must stay C-clean. */

#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "lodgraph/lodgraph.h"

static int failures = 0;

#define CHECK(cond)                                                          \
  do {                                                                       \
    if (!(cond)) {                                                           \
      fprintf(stderr, "%s:%d: CHECK(%s) failed: %s\n", __FILE__, __LINE__, \
              #cond, lg_last_error());                                       \
      ++failures;                                                            \
    }                                                                        \
  } while (0)

static const char* roma =
    "<http://data.linkedopendata.it/musei/resource/Roma> "
    "<http://www.w3.org/2000/01/rdf-schema#label> \"Roma\" .\n";

static void write_text(const char* path, const char* text) {
  FILE* f = fopen(path, "wb");
  fputs(text, f);
  fclose(f);
}

int main(int argc, char** argv) {
  const char* dir = argc > 1 ? argv[1] : ".";
  char nt[1024], edges[1024], dict_path[1024], graph_path[1024], report_path[1024];
  snprintf(nt, sizeof nt, "%s/roma.nt", dir);
  snprintf(edges, sizeof edges, "%s/roma.edgelist", dir);
  snprintf(dict_path, sizeof dict_path, "%s/roma.dict.tsv", dir);
  snprintf(graph_path, sizeof graph_path, "%s/roma.graph", dir);
  snprintf(report_path, sizeof report_path, "%s/roma.json", dir);
  write_text(nt, roma);

  CHECK(strcmp(lg_status_string(LG_OK), "ok") == 0);
  CHECK(strlen(lg_version()) > 0);

  lg_config* config = NULL;
  CHECK(lg_config_create(&config) == LG_OK);
  CHECK(lg_config_set(config, "workers_prepare", "2") == LG_OK);
  CHECK(lg_config_set(config, "workers_prepare", "zero") == LG_ERR_INVALID_ARGUMENT);
  CHECK(strstr(lg_last_error(), "workers_prepare") != NULL);
  CHECK(lg_config_set(config, "no_such_key", "1") == LG_ERR_INVALID_ARGUMENT);

  char hex[17];
  CHECK(lg_hash_term(config, "\"Roma\"", hex) == LG_OK);
  CHECK(strcmp(hex, "c9643559faeed68e") == 0);

  lg_ingest_stats stats;
  CHECK(lg_prepare(config, nt, NULL, edges, dict_path, &stats) == LG_OK);
  CHECK(stats.triples == 1 && stats.distinct_terms == 3 && stats.malformed_lines == 0);

  lg_dictionary* dict = NULL;
  const char* term = NULL;
  CHECK(lg_dictionary_load(dict_path, &dict) == LG_OK);
  CHECK(lg_dictionary_resolve(dict, "02325f53aeba2f02", &term) == LG_OK);
  CHECK(term && strcmp(term, "<http://www.w3.org/2000/01/rdf-schema#label>") == 0);
  CHECK(lg_dictionary_resolve(dict, "0000000000000000", &term) == LG_ERR_NOT_FOUND);
  CHECK(lg_dictionary_resolve(dict, "xyz", &term) == LG_ERR_INVALID_ARGUMENT);
  lg_dictionary_destroy(dict);

  lg_graph* g = NULL;
  CHECK(lg_graph_build(edges, &g) == LG_OK);
  CHECK(lg_graph_num_vertices(g) == 2 && lg_graph_num_edges(g) == 1);
  CHECK(lg_graph_save(g, graph_path) == LG_OK);
  lg_graph_destroy(g);
  g = NULL;
  CHECK(lg_graph_open(graph_path, &g) == LG_OK);
  CHECK(lg_graph_num_edges(g) == 1);

  lg_report* report = NULL;
  double value = 0;
  CHECK(lg_analyze(config, g, "roma", "culture", &report) == LG_OK);
  CHECK(lg_report_get(report, "n", &value) == LG_OK && value == 2.0);
  CHECK(lg_report_get(report, "c_d", &value) == LG_ERR_UNDEFINED);
  CHECK(lg_report_get(report, "bogus", &value) == LG_ERR_NOT_FOUND);
  CHECK(lg_report_write(report, report_path) == LG_OK);
  char* json = NULL;
  CHECK(lg_report_to_json(report, &json) == LG_OK);
  CHECK(json && strstr(json, "\"dataset\": \"roma\"") != NULL);
  lg_string_free(json);
  lg_report_destroy(report);
  report = NULL;
  CHECK(lg_report_read(report_path, &report) == LG_OK);
  CHECK(lg_report_get(report, "m", &value) == LG_OK && value == 1.0);
  lg_report_destroy(report);

  char* tsv = NULL;
  CHECK(lg_histogram_tsv(config, g, "total", &tsv) == LG_OK);
  CHECK(tsv && strncmp(tsv, "# alpha=NA dmin=NA mode=total\n", 30) == 0);
  lg_string_free(tsv);
  CHECK(lg_histogram_tsv(config, g, "sideways", &tsv) == LG_ERR_INVALID_ARGUMENT);
  lg_graph_destroy(g);

  CHECK(lg_graph_load(nt, &g) == LG_ERR_FORMAT);
  CHECK(lg_graph_build("/nonexistent/file", &g) == LG_ERR_IO);
  CHECK(lg_prepare(config, NULL, NULL, edges, dict_path, NULL) == LG_ERR_INVALID_ARGUMENT);

  lg_config_destroy(config);
  if (failures == 0) printf("c api: all checks passed\n");
  return failures == 0 ? 0 : 1;
}
