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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lodgraph/graph.hpp"
#include "lodgraph/stats_fit.hpp"

namespace lodgraph {

struct BasicCounts {
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::uint64_t m_u = 0;  // distinct (source, target) pairs
  std::uint64_t m_p = 0;  // m - m_u
};

BasicCounts basic_counts(const Graph& g);

struct DegreeStats {
  std::uint64_t d_max = 0;
  std::uint64_t d_max_in = 0;
  std::uint64_t d_max_out = 0;
  double z = 0;      // m / n
  double z_in = 0;
  double z_out = 0;
  double z_total = 0;  // 2m / n, mean total degree
};

/// Throws UndefinedMeasure on an empty graph.
DegreeStats degree_stats(const Graph& g);

enum class HIndexMode { DirectedIn, UndirectedTotal };

/// Largest h such that at least h values are >= h.
std::uint64_t h_index(std::span<const std::uint64_t> degrees);
std::uint64_t h_index(const Graph& g, HIndexMode mode);

struct PageRankOptions {
  double damping = 0.85;
  double tolerance = 1e-8;  // L1 change between iterations
  std::uint32_t max_iterations = 200;
};

struct PageRankResult {
  std::vector<double> scores;
  std::uint32_t iterations = 0;
  bool converged = false;
  VertexId max_vertex = 0;
  double max_score = 0;
};

/// Power iteration; parallel edges weight the transition, dangling mass is
/// spread uniformly. Throws UndefinedMeasure on an empty graph and
/// Error(InvalidArgument) for damping outside (0, 1).
PageRankResult pagerank(const Graph& g, const PageRankOptions& options = {});

/// Degree centralization on the graph with parallel edges collapsed:
/// sum(d'_max - d'(v)) / ((n-1)(n-2)). Throws UndefinedMeasure when n < 3.
double centralization(const Graph& g);

struct Fill {
  double p = 0;    // m / n^2
  double p_u = 0;  // m_u / n^2
};

/// Throws UndefinedMeasure on an empty graph.
Fill fill(const Graph& g);

struct Reciprocity {
  double y = 0;
  std::uint64_t m_bi = 0;  // edge instances (u,v) with some (v,u) present
};

/// Throws UndefinedMeasure when m == 0.
Reciprocity reciprocity(const Graph& g);

/// Iterated double-sweep BFS on the undirected view of the largest weakly
/// connected component; a lower bound on the diameter, exact on trees.
/// Throws UndefinedMeasure on an empty graph.
std::uint64_t pseudo_diameter(const Graph& g);

struct MeasureOptions {
  PageRankOptions pagerank;
  PowerLawOptions powerlaw;
};

/// Every measure of one dataset. An empty optional marks a measure that is
/// undefined on the input (it is never coerced to 0).
struct MeasureReport {
  std::string dataset;
  std::string domain;

  std::optional<std::uint64_t> n, m, m_u, m_p;
  std::optional<std::uint64_t> d_max, d_max_in, d_max_out;
  std::optional<double> z, z_in, z_out, z_total;
  std::optional<std::uint64_t> h_d, h_u;
  std::optional<std::uint64_t> c_d_max;
  std::optional<double> pr_max;
  std::optional<TermHash> pr_max_vertex;
  std::optional<bool> pagerank_converged;
  std::optional<double> c_d;
  std::optional<double> p, p_u;
  std::optional<double> y;
  std::optional<std::uint64_t> m_bi;
  std::optional<std::uint64_t> delta;
  std::optional<double> var_in, var_out, sd_in, sd_out, cv_in, cv_out;
  std::optional<double> alpha, alpha_in;
  std::optional<std::uint64_t> d_min, d_min_in;

  friend bool operator==(const MeasureReport&, const MeasureReport&) = default;
};

/// Numeric measure fields in report order, addressable by name.
struct MeasureField {
  std::string_view name;
  std::variant<std::optional<std::uint64_t> MeasureReport::*, std::optional<double> MeasureReport::*>
      member;
};

std::span<const MeasureField> measure_fields() noexcept;

/// Value of a numeric measure as a double; nullopt if undefined. Throws
/// Error(NotFound) for unknown names.
std::optional<double> measure_value(const MeasureReport& r, std::string_view name);

MeasureReport compute_measures(const Graph& g, const MeasureOptions& options = {},
                               std::string dataset = {}, std::string domain = {});

}  // namespace lodgraph
