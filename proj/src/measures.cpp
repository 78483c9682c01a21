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

#include "lodgraph/measures.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "lodgraph/error.hpp"

namespace lodgraph {

namespace {

// Out-neighbor lists with parallel edges collapsed, sorted ascending.
struct DistinctAdjacency {
  std::vector<EdgeId> offsets;
  std::vector<VertexId> targets;

  explicit DistinctAdjacency(const Graph& g) {
    const std::size_t n = g.num_vertices();
    offsets.assign(n + 1, 0);
    targets.reserve(g.num_edges());
    std::vector<VertexId> scratch;
    for (VertexId v = 0; v < n; ++v) {
      auto nb = g.out_neighbors(v);
      scratch.assign(nb.begin(), nb.end());
      std::sort(scratch.begin(), scratch.end());
      scratch.erase(std::unique(scratch.begin(), scratch.end()), scratch.end());
      targets.insert(targets.end(), scratch.begin(), scratch.end());
      offsets[v + 1] = targets.size();
    }
  }

  std::span<const VertexId> out(VertexId v) const {
    return {targets.data() + offsets[v], targets.data() + offsets[v + 1]};
  }
  bool has_edge(VertexId u, VertexId v) const {
    auto nb = out(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }
  std::uint64_t pairs() const { return targets.size(); }
};

}  // namespace

BasicCounts basic_counts(const Graph& g) {
  BasicCounts c;
  c.n = g.num_vertices();
  c.m = g.num_edges();
  c.m_u = DistinctAdjacency(g).pairs();
  c.m_p = c.m - c.m_u;
  return c;
}

DegreeStats degree_stats(const Graph& g) {
  const std::uint64_t n = g.num_vertices();
  if (n == 0) throw UndefinedMeasure("degree statistics of an empty graph");
  DegreeStats s;
  for (VertexId v = 0; v < n; ++v) {
    s.d_max = std::max(s.d_max, g.degree(v));
    s.d_max_in = std::max(s.d_max_in, g.in_degree(v));
    s.d_max_out = std::max(s.d_max_out, g.out_degree(v));
  }
  const double m = static_cast<double>(g.num_edges());
  s.z = m / static_cast<double>(n);
  s.z_in = s.z;
  s.z_out = s.z;
  s.z_total = 2.0 * m / static_cast<double>(n);
  return s;
}

std::uint64_t h_index(std::span<const std::uint64_t> degrees) {
  const std::size_t n = degrees.size();
  std::vector<std::uint64_t> at_least(n + 2, 0);
  for (auto d : degrees) ++at_least[std::min<std::uint64_t>(d, n)];
  std::uint64_t count = 0;
  for (std::size_t h = n; h > 0; --h) {
    count += at_least[h];
    if (count >= h) return h;
  }
  return 0;
}

std::uint64_t h_index(const Graph& g, HIndexMode mode) {
  return h_index(degree_sequence(g, mode == HIndexMode::DirectedIn ? DegreeMode::In : DegreeMode::Total));
}

PageRankResult pagerank(const Graph& g, const PageRankOptions& options) {
  const std::size_t n = g.num_vertices();
  if (n == 0) throw UndefinedMeasure("PageRank of an empty graph");
  if (!(options.damping > 0.0 && options.damping < 1.0))
    throw Error(ErrorCode::InvalidArgument, "damping must lie in (0, 1)");

  const double d = options.damping;
  const double inv_n = 1.0 / static_cast<double>(n);
  std::vector<double> x(n, inv_n), next(n), share(n);

  PageRankResult r;
  for (r.iterations = 0; r.iterations < options.max_iterations;) {
    double dangling = 0.0;
    for (VertexId v = 0; v < n; ++v) {
      const auto out = g.out_degree(v);
      if (out == 0) {
        dangling += x[v];
        share[v] = 0.0;
      } else {
        share[v] = x[v] / static_cast<double>(out);
      }
    }
    const double base = (1.0 - d) * inv_n + d * dangling * inv_n;
    double diff = 0.0;
    for (VertexId v = 0; v < n; ++v) {
      double acc = 0.0;
      for (VertexId u : g.in_neighbors(v)) acc += share[u];
      next[v] = base + d * acc;
      diff += std::fabs(next[v] - x[v]);
    }
    x.swap(next);
    ++r.iterations;
    if (diff < options.tolerance) {
      r.converged = true;
      break;
    }
  }

  r.max_vertex = 0;
  for (VertexId v = 1; v < n; ++v)
    if (x[v] > x[r.max_vertex]) r.max_vertex = v;
  r.max_score = x[r.max_vertex];
  r.scores = std::move(x);
  return r;
}

double centralization(const Graph& g) {
  const std::uint64_t n = g.num_vertices();
  if (n < 3) throw UndefinedMeasure("degree centralization needs at least 3 vertices");
  const DistinctAdjacency adj(g);
  std::vector<std::uint64_t> degree(n, 0);
  for (VertexId u = 0; u < n; ++u) {
    auto out = adj.out(u);
    degree[u] += out.size();
    for (VertexId v : out) ++degree[v];
  }
  const std::uint64_t top = *std::max_element(degree.begin(), degree.end());
  std::uint64_t gap = 0;
  for (auto dv : degree) gap += top - dv;
  return static_cast<double>(gap) / (static_cast<double>(n - 1) * static_cast<double>(n - 2));
}

Fill fill(const Graph& g) {
  const std::uint64_t n = g.num_vertices();
  if (n == 0) throw UndefinedMeasure("fill of an empty graph");
  const double nn = static_cast<double>(n) * static_cast<double>(n);
  const auto c = basic_counts(g);
  return Fill{static_cast<double>(c.m) / nn, static_cast<double>(c.m_u) / nn};
}

Reciprocity reciprocity(const Graph& g) {
  const std::uint64_t m = g.num_edges();
  if (m == 0) throw UndefinedMeasure("reciprocity of a graph without edges");
  const DistinctAdjacency adj(g);
  const auto src = g.sources();
  const auto tgt = g.targets();
  Reciprocity r;
  for (EdgeId e = 0; e < m; ++e)
    if (adj.has_edge(tgt[e], src[e])) ++r.m_bi;
  r.y = static_cast<double>(r.m_bi) / static_cast<double>(m);
  return r;
}

std::uint64_t pseudo_diameter(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n == 0) throw UndefinedMeasure("pseudo-diameter of an empty graph");
  constexpr std::uint64_t kUnseen = std::numeric_limits<std::uint64_t>::max();

  // Largest weak component; the first one found wins ties, so its root is
  // also its smallest vertex id.
  std::vector<std::uint32_t> component(n, std::numeric_limits<std::uint32_t>::max());
  std::vector<VertexId> queue;
  queue.reserve(n);
  VertexId best_root = 0;
  std::size_t best_size = 0;
  std::uint32_t label = 0;
  for (VertexId root = 0; root < n; ++root) {
    if (component[root] != std::numeric_limits<std::uint32_t>::max()) continue;
    queue.clear();
    queue.push_back(root);
    component[root] = label;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const VertexId v = queue[head];
      auto visit = [&](VertexId w) {
        if (component[w] == std::numeric_limits<std::uint32_t>::max()) {
          component[w] = label;
          queue.push_back(w);
        }
      };
      for (VertexId w : g.out_neighbors(v)) visit(w);
      for (VertexId w : g.in_neighbors(v)) visit(w);
    }
    if (queue.size() > best_size) {
      best_size = queue.size();
      best_root = root;
    }
    ++label;
  }

  std::vector<std::uint64_t> dist(n, kUnseen);
  std::vector<VertexId> touched;
  touched.reserve(best_size);
  // BFS from `source`; returns (eccentricity, farthest vertex with the
  // smallest degree, then the smallest id).
  auto sweep = [&](VertexId source) {
    for (VertexId v : touched) dist[v] = kUnseen;
    touched.clear();
    touched.push_back(source);
    dist[source] = 0;
    for (std::size_t head = 0; head < touched.size(); ++head) {
      const VertexId v = touched[head];
      auto visit = [&](VertexId w) {
        if (dist[w] == kUnseen) {
          dist[w] = dist[v] + 1;
          touched.push_back(w);
        }
      };
      for (VertexId w : g.out_neighbors(v)) visit(w);
      for (VertexId w : g.in_neighbors(v)) visit(w);
    }
    std::uint64_t ecc = 0;
    VertexId far = source;
    for (VertexId v : touched) {
      if (dist[v] > ecc || (dist[v] == ecc && (g.degree(v) < g.degree(far) ||
                                               (g.degree(v) == g.degree(far) && v < far)))) {
        ecc = dist[v];
        far = v;
      }
    }
    return std::pair{ecc, far};
  };

  std::uint64_t diameter = 0;
  VertexId source = best_root;
  while (true) {
    auto [ecc, far] = sweep(source);
    if (ecc <= diameter) break;
    diameter = ecc;
    source = far;
  }
  return diameter;
}

namespace {

using Count = std::optional<std::uint64_t> MeasureReport::*;
using Real = std::optional<double> MeasureReport::*;

constexpr std::array<MeasureField, 31> kFields = {{
    {"n", Count{&MeasureReport::n}},
    {"m", Count{&MeasureReport::m}},
    {"m_u", Count{&MeasureReport::m_u}},
    {"m_p", Count{&MeasureReport::m_p}},
    {"d_max", Count{&MeasureReport::d_max}},
    {"d_max_in", Count{&MeasureReport::d_max_in}},
    {"d_max_out", Count{&MeasureReport::d_max_out}},
    {"z", Real{&MeasureReport::z}},
    {"z_in", Real{&MeasureReport::z_in}},
    {"z_out", Real{&MeasureReport::z_out}},
    {"z_total", Real{&MeasureReport::z_total}},
    {"h_d", Count{&MeasureReport::h_d}},
    {"h_u", Count{&MeasureReport::h_u}},
    {"c_d_max", Count{&MeasureReport::c_d_max}},
    {"pr_max", Real{&MeasureReport::pr_max}},
    {"c_d", Real{&MeasureReport::c_d}},
    {"p", Real{&MeasureReport::p}},
    {"p_u", Real{&MeasureReport::p_u}},
    {"y", Real{&MeasureReport::y}},
    {"m_bi", Count{&MeasureReport::m_bi}},
    {"delta", Count{&MeasureReport::delta}},
    {"var_in", Real{&MeasureReport::var_in}},
    {"var_out", Real{&MeasureReport::var_out}},
    {"sd_in", Real{&MeasureReport::sd_in}},
    {"sd_out", Real{&MeasureReport::sd_out}},
    {"cv_in", Real{&MeasureReport::cv_in}},
    {"cv_out", Real{&MeasureReport::cv_out}},
    {"alpha", Real{&MeasureReport::alpha}},
    {"alpha_in", Real{&MeasureReport::alpha_in}},
    {"d_min", Count{&MeasureReport::d_min}},
    {"d_min_in", Count{&MeasureReport::d_min_in}},
}};

template <class F>
void try_measure(F&& f) {
  try {
    f();
  } catch (const UndefinedMeasure&) {
    // left empty: undefined on this input
  }
}

}  // namespace

std::span<const MeasureField> measure_fields() noexcept { return kFields; }

std::optional<double> measure_value(const MeasureReport& r, std::string_view name) {
  for (const auto& f : kFields) {
    if (f.name != name) continue;
    return std::visit(
        [&](auto member) -> std::optional<double> {
          const auto& v = r.*member;
          if (!v) return std::nullopt;
          return static_cast<double>(*v);
        },
        f.member);
  }
  throw Error(ErrorCode::NotFound, "unknown measure '" + std::string(name) + "'");
}

MeasureReport compute_measures(const Graph& g, const MeasureOptions& options, std::string dataset,
                               std::string domain) {
  MeasureReport r;
  r.dataset = std::move(dataset);
  r.domain = std::move(domain);

  const BasicCounts basic = basic_counts(g);
  r.n = basic.n;
  r.m = basic.m;
  r.m_u = basic.m_u;
  r.m_p = basic.m_p;

  try_measure([&] {
    const DegreeStats s = degree_stats(g);
    r.d_max = s.d_max;
    r.d_max_in = s.d_max_in;
    r.d_max_out = s.d_max_out;
    r.z = s.z;
    r.z_in = s.z_in;
    r.z_out = s.z_out;
    r.z_total = s.z_total;
    r.c_d_max = s.d_max;
  });
  r.h_d = h_index(g, HIndexMode::DirectedIn);
  r.h_u = h_index(g, HIndexMode::UndirectedTotal);

  try_measure([&] {
    const PageRankResult pr = pagerank(g, options.pagerank);
    r.pr_max = pr.max_score;
    r.pr_max_vertex = g.vertex_hash(pr.max_vertex);
    r.pagerank_converged = pr.converged;
  });
  try_measure([&] { r.c_d = centralization(g); });
  try_measure([&] {
    const Fill f = fill(g);
    r.p = f.p;
    r.p_u = f.p_u;
  });
  try_measure([&] {
    const Reciprocity rc = reciprocity(g);
    r.y = rc.y;
    r.m_bi = rc.m_bi;
  });
  try_measure([&] { r.delta = pseudo_diameter(g); });

  const auto in_degrees = degree_sequence(g, DegreeMode::In);
  const auto out_degrees = degree_sequence(g, DegreeMode::Out);
  try_measure([&] {
    const Dispersion d = dispersion(make_histogram(in_degrees, DegreeMode::In));
    r.var_in = d.variance;
    r.sd_in = d.stddev;
    r.cv_in = d.cv;
  });
  try_measure([&] {
    const Dispersion d = dispersion(make_histogram(out_degrees, DegreeMode::Out));
    r.var_out = d.variance;
    r.sd_out = d.stddev;
    r.cv_out = d.cv;
  });

  if (auto fit = fit_powerlaw(degree_sequence(g, DegreeMode::Total), options.powerlaw)) {
    r.alpha = fit->alpha;
    r.d_min = fit->d_min;
  }
  if (auto fit = fit_powerlaw(in_degrees, options.powerlaw)) {
    r.alpha_in = fit->alpha;
    r.d_min_in = fit->d_min;
  }
  return r;
}

}  // namespace lodgraph
