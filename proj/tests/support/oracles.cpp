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

#include "oracles.hpp"

#include <zlib.h>

#include <algorithm>
#include <boost/math/special_functions/zeta.hpp>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace oracle {

EdgeList random_multigraph(std::mt19937_64& rng, std::size_t max_n, std::size_t max_m) {
  EdgeList g;
  g.n = std::uniform_int_distribution<std::size_t>(1, max_n)(rng);
  const std::size_t m = std::uniform_int_distribution<std::size_t>(0, max_m)(rng);
  std::uniform_int_distribution<std::uint32_t> vertex(0, static_cast<std::uint32_t>(g.n - 1));
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (std::size_t i = 0; i < m; ++i) {
    const double c = coin(rng);
    if (c < 0.15 && !g.edges.empty()) {
      g.edges.push_back(g.edges[std::uniform_int_distribution<std::size_t>(0, g.edges.size() - 1)(rng)]);
    } else if (c < 0.25) {
      const auto v = vertex(rng);
      g.edges.emplace_back(v, v);
    } else if (c < 0.35 && !g.edges.empty()) {
      const auto e = g.edges[std::uniform_int_distribution<std::size_t>(0, g.edges.size() - 1)(rng)];
      g.edges.emplace_back(e.second, e.first);
    } else {
      g.edges.emplace_back(vertex(rng), vertex(rng));
    }
  }
  return g;
}

std::vector<std::uint64_t> in_degrees(const EdgeList& g) {
  std::vector<std::uint64_t> d(g.n, 0);
  for (std::size_t v = 0; v < g.n; ++v)
    for (const auto& e : g.edges)
      if (e.second == v) ++d[v];
  return d;
}

std::vector<std::uint64_t> out_degrees(const EdgeList& g) {
  std::vector<std::uint64_t> d(g.n, 0);
  for (std::size_t v = 0; v < g.n; ++v)
    for (const auto& e : g.edges)
      if (e.first == v) ++d[v];
  return d;
}

std::vector<std::uint64_t> total_degrees(const EdgeList& g) {
  auto in = in_degrees(g);
  const auto out = out_degrees(g);
  for (std::size_t v = 0; v < g.n; ++v) in[v] += out[v];
  return in;
}

std::uint64_t distinct_pairs(const EdgeList& g) {
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    bool seen_before = false;
    for (std::size_t j = 0; j < i; ++j) seen_before = seen_before || g.edges[j] == g.edges[i];
    if (!seen_before) ++count;
  }
  return count;
}

std::uint64_t reciprocated(const EdgeList& g) {
  std::uint64_t count = 0;
  for (const auto& e : g.edges) {
    bool found = false;
    for (const auto& f : g.edges) found = found || (f.first == e.second && f.second == e.first);
    if (found) ++count;
  }
  return count;
}

std::uint64_t h_index_scan(const std::vector<std::uint64_t>& values) {
  std::uint64_t best = 0;
  for (std::uint64_t h = 0; h <= values.size(); ++h) {
    const auto at_least = std::count_if(values.begin(), values.end(), [&](std::uint64_t v) { return v >= h; });
    if (static_cast<std::uint64_t>(at_least) >= h) best = h;
  }
  return best;
}

std::optional<double> centralization(const EdgeList& g) {
  if (g.n < 3) return std::nullopt;
  std::set<Edge> unique(g.edges.begin(), g.edges.end());
  EdgeList dedup{g.n, {unique.begin(), unique.end()}};
  const auto d = total_degrees(dedup);
  const auto dmax = *std::max_element(d.begin(), d.end());
  double sum = 0;
  for (auto v : d) sum += static_cast<double>(dmax - v);
  return sum / (static_cast<double>(g.n - 1) * static_cast<double>(g.n - 2));
}

namespace {

std::vector<std::vector<std::uint32_t>> undirected_adjacency(const EdgeList& g) {
  std::vector<std::vector<std::uint32_t>> adj(g.n);
  for (const auto& [u, v] : g.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

std::vector<long> bfs(const std::vector<std::vector<std::uint32_t>>& adj, std::uint32_t s) {
  std::vector<long> dist(adj.size(), -1);
  std::vector<std::uint32_t> q{s};
  dist[s] = 0;
  for (std::size_t h = 0; h < q.size(); ++h)
    for (auto w : adj[q[h]])
      if (dist[w] < 0) {
        dist[w] = dist[q[h]] + 1;
        q.push_back(w);
      }
  return dist;
}

}  // namespace

std::uint64_t exact_diameter_largest_component(const EdgeList& g) {
  const auto adj = undirected_adjacency(g);
  std::vector<std::uint32_t> best;
  std::vector<bool> done(g.n, false);
  for (std::uint32_t v = 0; v < g.n; ++v) {
    if (done[v]) continue;
    std::vector<std::uint32_t> members;
    const auto dist = bfs(adj, v);
    for (std::uint32_t w = 0; w < g.n; ++w)
      if (dist[w] >= 0) {
        members.push_back(w);
        done[w] = true;
      }
    if (members.size() > best.size()) best = members;
  }
  long diameter = 0;
  for (auto s : best) {
    const auto dist = bfs(adj, s);
    for (auto t : best) diameter = std::max(diameter, dist[t]);
  }
  return static_cast<std::uint64_t>(diameter);
}

bool is_forest(const EdgeList& g) {
  // Undirected simple forest: no loops, no repeated pair in either direction,
  // and every component has |E| = |V| - 1.
  std::set<Edge> seen;
  for (auto [u, v] : g.edges) {
    if (u == v) return false;
    if (!seen.insert({std::min(u, v), std::max(u, v)}).second) return false;
  }
  std::vector<std::uint32_t> parent(g.n);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [u, v] : g.edges) {
    const auto a = find(u), b = find(v);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

std::vector<double> dense_pagerank(const EdgeList& g, double damping) {
  const std::size_t n = g.n;
  // M[i][j] = probability of moving j -> i.
  std::vector<std::vector<long double>> M(n, std::vector<long double>(n, 0.0L));
  const auto out = out_degrees(g);
  for (const auto& [u, v] : g.edges) M[v][u] += 1.0L / static_cast<long double>(out[u]);
  for (std::size_t j = 0; j < n; ++j)
    if (out[j] == 0)
      for (std::size_t i = 0; i < n; ++i) M[i][j] = 1.0L / static_cast<long double>(n);
  std::vector<long double> x(n, 1.0L / static_cast<long double>(n)), next(n);
  for (int it = 0; it < 100000; ++it) {
    long double change = 0;
    for (std::size_t i = 0; i < n; ++i) {
      long double s = 0;
      for (std::size_t j = 0; j < n; ++j) s += M[i][j] * x[j];
      next[i] = (1.0L - damping) / static_cast<long double>(n) + damping * s;
      change += std::fabs(next[i] - x[i]);
    }
    x.swap(next);
    if (change < 1e-15L) break;
  }
  return {x.begin(), x.end()};
}

Moments two_pass_moments(const std::vector<std::uint64_t>& values) {
  long double sum = 0;
  for (auto v : values) sum += static_cast<long double>(v);
  const long double mean = sum / static_cast<long double>(values.size());
  long double ss = 0;
  for (auto v : values) ss += (static_cast<long double>(v) - mean) * (static_cast<long double>(v) - mean);
  const long double var = ss / static_cast<long double>(values.size());
  Moments m{static_cast<double>(mean), static_cast<double>(var), static_cast<double>(std::sqrt(var)), {}};
  if (mean != 0) m.cv = static_cast<double>(100.0L * std::sqrt(var) / mean);
  return m;
}

std::optional<double> two_pass_pearson(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  if (n < 3 || y.size() != n) return std::nullopt;
  long double mx = 0, my = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<long double>(n);
  my /= static_cast<long double>(n);
  long double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0 || syy == 0) return std::nullopt;
  return static_cast<double>(sxy / std::sqrt(sxx * syy));
}

PowerLawSampler::PowerLawSampler(double alpha, std::size_t table_size) : alpha_(alpha) {
  const double z = boost::math::zeta(alpha);
  cdf_.resize(table_size);
  long double acc = 0;
  for (std::size_t k = 1; k <= table_size; ++k) {
    acc += std::pow(static_cast<long double>(k), -static_cast<long double>(alpha)) / z;
    cdf_[k - 1] = static_cast<double>(acc);
  }
}

std::uint64_t PowerLawSampler::operator()(std::mt19937_64& rng) const {
  const double u = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
  const auto it = std::lower_bound(cdf_.begin(), cdf_.end(), u);
  if (it != cdf_.end()) return static_cast<std::uint64_t>(it - cdf_.begin()) + 1;
  // Beyond the table the tail is continuous to within far less than a unit.
  const double K = static_cast<double>(cdf_.size());
  const double rest = (1.0 - u) / (1.0 - cdf_.back());
  return static_cast<std::uint64_t>(std::floor((K + 0.5) * std::pow(rest, -1.0 / (alpha_ - 1.0))));
}

TempDir::TempDir() {
  std::string tmpl = (std::filesystem::temp_directory_path() / "lodgraph-test-XXXXXX").string();
  if (!mkdtemp(tmpl.data())) throw std::runtime_error("mkdtemp failed");
  path_ = tmpl;
}

TempDir::~TempDir() {
  std::error_code ec;
  std::filesystem::remove_all(path_, ec);
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << content;
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_gzip(const std::filesystem::path& path, const std::string& content) {
  gzFile f = gzopen(path.c_str(), "wb");
  if (!f) throw std::runtime_error("gzopen failed");
  if (!content.empty()) gzwrite(f, content.data(), static_cast<unsigned>(content.size()));
  gzclose(f);
}

std::string make_tar(const std::vector<TarMember>& members) {
  std::string out;
  for (const auto& m : members) {
    char h[512] = {};
    std::snprintf(h, 100, "%s", m.name.c_str());
    std::snprintf(h + 100, 8, "%07o", 0644);
    std::snprintf(h + 108, 8, "%07o", 0);
    std::snprintf(h + 116, 8, "%07o", 0);
    std::snprintf(h + 124, 12, "%011lo", static_cast<unsigned long>(m.content.size()));
    std::snprintf(h + 136, 12, "%011o", 0);
    h[156] = '0';
    std::memcpy(h + 257, "ustar", 6);
    std::memcpy(h + 263, "00", 2);
    std::memset(h + 148, ' ', 8);
    unsigned sum = 0;
    for (unsigned char c : h) sum += c;
    std::snprintf(h + 148, 8, "%06o", sum);
    h[155] = ' ';
    out.append(h, 512);
    out += m.content;
    out.append((512 - m.content.size() % 512) % 512, '\0');
  }
  out.append(1024, '\0');
  return out;
}

}  // namespace oracle
