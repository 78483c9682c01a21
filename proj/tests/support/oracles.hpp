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

// Deliberately naive reference implementations used to cross-check the
// library. They work on plain edge lists and share no code with it.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Edge = std::pair<std::uint32_t, std::uint32_t>;

struct EdgeList {
  std::size_t n = 0;
  std::vector<Edge> edges;
};

// n in [1, max_n], m in [0, max_m]; a share of loops and repeated edges.
EdgeList random_multigraph(std::mt19937_64& rng, std::size_t max_n, std::size_t max_m);

std::vector<std::uint64_t> in_degrees(const EdgeList& g);
std::vector<std::uint64_t> out_degrees(const EdgeList& g);
std::vector<std::uint64_t> total_degrees(const EdgeList& g);

std::uint64_t distinct_pairs(const EdgeList& g);
// Edge instances (u,v) such that some (v,u) exists, by scanning all pairs.
std::uint64_t reciprocated(const EdgeList& g);
std::uint64_t h_index_scan(const std::vector<std::uint64_t>& values);
// Freeman centralization on the pair-deduplicated graph; nullopt for n < 3.
std::optional<double> centralization(const EdgeList& g);

// Undirected all-pairs BFS over the largest weak component (smallest vertex
// wins ties between equally large components).
std::uint64_t exact_diameter_largest_component(const EdgeList& g);
bool is_forest(const EdgeList& g);

// Dense transition matrix iterated to a fixed point in long double.
std::vector<double> dense_pagerank(const EdgeList& g, double damping);

struct Moments {
  double mean, variance, stddev;
  std::optional<double> cv;
};
Moments two_pass_moments(const std::vector<std::uint64_t>& values);

std::optional<double> two_pass_pearson(const std::vector<double>& x, const std::vector<double>& y);

// Discrete power law P(k) = k^-alpha / zeta(alpha), k >= 1, by inverse CDF.
class PowerLawSampler {
 public:
  explicit PowerLawSampler(double alpha, std::size_t table_size = 1'000'000);
  std::uint64_t operator()(std::mt19937_64& rng) const;

 private:
  double alpha_;
  std::vector<double> cdf_;
};

// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

void write_file(const std::filesystem::path& path, const std::string& content);
std::string read_file(const std::filesystem::path& path);
void write_gzip(const std::filesystem::path& path, const std::string& content);

// Minimal ustar writer for fixtures.
struct TarMember {
  std::string name;
  std::string content;
};
std::string make_tar(const std::vector<TarMember>& members);

}  // namespace oracle
