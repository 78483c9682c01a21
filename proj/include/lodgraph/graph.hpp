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
#include <filesystem>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "lodgraph/term_hash.hpp"

namespace lodgraph {

using VertexId = std::uint32_t;
using EdgeId = std::uint64_t;

/// Immutable directed multigraph. Vertices are numbered 0..n-1 in order of
/// first appearance in the edge list and carry the term hash they stand for;
/// every edge carries its predicate hash. Parallel edges and self-loops are
/// kept; a self-loop adds one to both the in- and the out-degree.
class Graph {
 public:
  Graph() = default;

  /// Takes ownership of edge arrays indexed by EdgeId. Throws
  /// Error(InvalidArgument) if array sizes disagree or ids are out of range.
  Graph(std::vector<TermHash> vertex_hashes, std::vector<VertexId> sources,
        std::vector<VertexId> targets, std::vector<TermHash> attributes);

  /// Test/fixture helper: vertex i gets hash i, every attribute is 0.
  static Graph from_pairs(std::size_t n, std::span<const std::pair<VertexId, VertexId>> edges);

  std::uint64_t num_vertices() const noexcept { return vertex_hashes_.size(); }
  std::uint64_t num_edges() const noexcept { return sources_.size(); }
  bool empty() const noexcept { return vertex_hashes_.empty(); }

  /// Neighbors in edge-id order; parallel edges repeat the neighbor.
  std::span<const VertexId> out_neighbors(VertexId v) const noexcept {
    return {out_targets_.data() + out_offsets_[v], out_targets_.data() + out_offsets_[v + 1]};
  }
  std::span<const VertexId> in_neighbors(VertexId v) const noexcept {
    return {in_sources_.data() + in_offsets_[v], in_sources_.data() + in_offsets_[v + 1]};
  }

  std::uint64_t out_degree(VertexId v) const noexcept { return out_offsets_[v + 1] - out_offsets_[v]; }
  std::uint64_t in_degree(VertexId v) const noexcept { return in_offsets_[v + 1] - in_offsets_[v]; }
  std::uint64_t degree(VertexId v) const noexcept { return in_degree(v) + out_degree(v); }

  TermHash vertex_hash(VertexId v) const noexcept { return vertex_hashes_[v]; }
  std::span<const TermHash> vertex_hashes() const noexcept { return vertex_hashes_; }
  std::span<const VertexId> sources() const noexcept { return sources_; }
  std::span<const VertexId> targets() const noexcept { return targets_; }
  std::span<const TermHash> attributes() const noexcept { return attributes_; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_hashes_ == b.vertex_hashes_ && a.sources_ == b.sources_ &&
           a.targets_ == b.targets_ && a.attributes_ == b.attributes_;
  }

 private:
  void index();

  std::vector<TermHash> vertex_hashes_;
  std::vector<VertexId> sources_;
  std::vector<VertexId> targets_;
  std::vector<TermHash> attributes_;

  std::vector<EdgeId> out_offsets_{0};
  std::vector<VertexId> out_targets_;
  std::vector<EdgeId> in_offsets_{0};
  std::vector<VertexId> in_sources_;
};

/// Builds a graph from `subject-hash object-hash predicate-hash` lines.
/// Throws Error(Parse) naming the first malformed line.
Graph build_graph(std::istream& edgelist);
Graph build_graph_file(const std::filesystem::path& edgelist_path);

inline constexpr std::uint64_t kGraphFormatVersion = 1;

/// Compressed, versioned binary image of a graph. Output bytes depend only on
/// the graph contents.
void save_binary(const Graph& graph, const std::filesystem::path& path);
void save_binary(const Graph& graph, std::ostream& out);
/// Throws Error(Format) on bad magic, version mismatch or truncation.
Graph load_binary(const std::filesystem::path& path);
Graph load_binary(std::istream& in);

/// True if the file starts with the binary graph magic.
bool is_binary_graph(const std::filesystem::path& path);

}  // namespace lodgraph
