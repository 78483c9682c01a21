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

#include <gtest/gtest.h>

#include <random>

#include "checks.hpp"
#include "lodgraph/error.hpp"
#include "lodgraph/graph.hpp"
#include "lodgraph/measures.hpp"

using namespace lodgraph;

namespace {

using Pairs = std::vector<std::pair<VertexId, VertexId>>;

Graph make(std::size_t n, const Pairs& e) { return Graph::from_pairs(n, e); }

Graph cycle(std::size_t k) {
  Pairs e;
  for (VertexId i = 0; i < k; ++i) e.emplace_back(i, static_cast<VertexId>((i + 1) % k));
  return make(k, e);
}

Graph path(std::size_t k) {
  Pairs e;
  for (VertexId i = 0; i < k; ++i) e.emplace_back(i, i + 1);
  return make(k + 1, e);
}

Graph out_star(std::size_t leaves) {
  Pairs e;
  for (VertexId i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return make(leaves + 1, e);
}

const Pairs kTriangleish = {{0, 1}, {1, 0}, {0, 2}};  // a->b, b->a, a->c

}  // namespace

TEST(BasicCounts, Examples) {
  auto c = basic_counts(make(2, {{0, 1}, {0, 1}}));
  EXPECT_EQ(c.n, 2u);
  EXPECT_EQ(c.m, 2u);
  EXPECT_EQ(c.m_u, 1u);
  EXPECT_EQ(c.m_p, 1u);
  c = basic_counts(Graph{});
  EXPECT_EQ(c.n + c.m + c.m_u + c.m_p, 0u);
  c = basic_counts(make(3, kTriangleish));
  EXPECT_EQ(c.m_u, 3u);
  EXPECT_EQ(c.m_p, 0u);
}

TEST(DegreeStats, Examples) {
  auto d = degree_stats(make(3, kTriangleish));
  EXPECT_EQ(d.d_max, 3u);
  EXPECT_EQ(d.d_max_in, 1u);
  EXPECT_EQ(d.d_max_out, 2u);
  EXPECT_DOUBLE_EQ(d.z, 1.0);
  EXPECT_DOUBLE_EQ(d.z_total, 2.0);
  d = degree_stats(make(1, {{0, 0}}));
  EXPECT_EQ(d.d_max, 2u);
  EXPECT_EQ(d.d_max_in, 1u);
  EXPECT_EQ(d.d_max_out, 1u);
  EXPECT_DOUBLE_EQ(d.z, 1.0);
  d = degree_stats(cycle(7));
  EXPECT_EQ(d.d_max, 2u);
  EXPECT_DOUBLE_EQ(d.z, 1.0);
  EXPECT_THROW(degree_stats(Graph{}), UndefinedMeasure);
}

TEST(HIndex, Examples) {
  const std::vector<std::uint64_t> d = {5, 4, 3, 2, 1};
  EXPECT_EQ(h_index(d), 3u);
  EXPECT_EQ(h_index(std::vector<std::uint64_t>(6, 6)), 6u);
  EXPECT_EQ(h_index(std::vector<std::uint64_t>{}), 0u);
  EXPECT_EQ(h_index(Graph{}, HIndexMode::UndirectedTotal), 0u);
  const Graph g = make(3, kTriangleish);
  EXPECT_LE(h_index(g, HIndexMode::DirectedIn), h_index(g, HIndexMode::UndirectedTotal));
}

TEST(PageRank, Examples) {
  auto r = pagerank(make(2, {{0, 1}, {1, 0}}));
  EXPECT_NEAR(r.scores[0], 0.5, 1e-9);
  EXPECT_NEAR(r.scores[1], 0.5, 1e-9);
  EXPECT_TRUE(r.converged);
  r = pagerank(make(1, {}));
  EXPECT_NEAR(r.scores[0], 1.0, 1e-12);

  const oracle::EdgeList chain{3, {{0, 1}, {1, 2}}};
  r = pagerank(make(3, {{0, 1}, {1, 2}}));
  const auto want = oracle::dense_pagerank(chain, 0.85);
  for (int v = 0; v < 3; ++v) EXPECT_NEAR(r.scores[v], want[v], 1e-6);
  EXPECT_EQ(r.max_vertex, 2u);
}

TEST(PageRank, ParallelEdgesWeightTransitions) {
  // 0 -> 1 twice, 0 -> 2 once: vertex 1 receives twice the flow of vertex 2.
  const oracle::EdgeList e{3, {{0, 1}, {0, 1}, {0, 2}}};
  const auto r = pagerank(make(3, e.edges));
  const auto want = oracle::dense_pagerank(e, 0.85);
  for (int v = 0; v < 3; ++v) EXPECT_NEAR(r.scores[v], want[v], 1e-6);
  EXPECT_GT(r.scores[1], r.scores[2]);
}

TEST(PageRank, InvalidInputs) {
  EXPECT_THROW(pagerank(Graph{}), UndefinedMeasure);
  EXPECT_THROW(pagerank(cycle(3), PageRankOptions{1.0, 1e-8, 100}), Error);
  EXPECT_THROW(pagerank(cycle(3), PageRankOptions{0.0, 1e-8, 100}), Error);
}

TEST(PageRank, NonConvergenceIsFlagged) {
  std::mt19937_64 rng(3);
  const auto e = oracle::random_multigraph(rng, 50, 300);
  const auto r = pagerank(make(e.n, e.edges), PageRankOptions{0.85, 1e-15, 1});
  EXPECT_FALSE(r.converged);
  EXPECT_EQ(r.iterations, 1u);
}

TEST(Centralization, ClosedForms) {
  EXPECT_NEAR(centralization(out_star(9)), 1.0, 1e-12);
  EXPECT_NEAR(centralization(cycle(5)), 0.0, 1e-12);
  EXPECT_NEAR(centralization(make(3, kTriangleish)), 1.5, 1e-12);
  EXPECT_THROW(centralization(make(2, {{0, 1}})), UndefinedMeasure);
  // Parallel edges are collapsed first.
  EXPECT_NEAR(centralization(make(3, {{0, 1}, {0, 1}, {0, 2}, {0, 2}, {0, 2}})), 1.0, 1e-12);
}

TEST(Fill, Examples) {
  Pairs complete;
  for (VertexId i = 0; i < 4; ++i)
    for (VertexId j = 0; j < 4; ++j) complete.emplace_back(i, j);
  EXPECT_DOUBLE_EQ(fill(make(4, complete)).p, 1.0);
  const auto f = fill(make(2, {{0, 1}, {0, 1}}));
  EXPECT_DOUBLE_EQ(f.p, 0.5);
  EXPECT_DOUBLE_EQ(f.p_u, 0.25);
  EXPECT_DOUBLE_EQ(fill(make(1, {})).p, 0.0);
  EXPECT_THROW(fill(Graph{}), UndefinedMeasure);
}

TEST(Reciprocity, Examples) {
  EXPECT_DOUBLE_EQ(reciprocity(make(2, {{0, 1}, {1, 0}})).y, 1.0);
  EXPECT_DOUBLE_EQ(reciprocity(make(3, {{0, 1}, {0, 2}})).y, 0.0);
  const auto r = reciprocity(make(2, {{0, 1}, {0, 1}, {1, 0}}));
  EXPECT_EQ(r.m_bi, 3u);
  EXPECT_DOUBLE_EQ(r.y, 1.0);
  EXPECT_DOUBLE_EQ(reciprocity(make(1, {{0, 0}})).y, 1.0);
  EXPECT_THROW(reciprocity(make(3, {})), UndefinedMeasure);
}

TEST(PseudoDiameter, ClosedForms) {
  for (std::size_t k : {1, 2, 5, 17}) EXPECT_EQ(pseudo_diameter(path(k)), k);
  EXPECT_EQ(pseudo_diameter(out_star(6)), 2u);
  EXPECT_EQ(pseudo_diameter(make(1, {})), 0u);
  EXPECT_EQ(pseudo_diameter(cycle(8)), 4u);
  // The largest weak component decides: a 3-path beats a 1-edge component.
  EXPECT_EQ(pseudo_diameter(make(6, {{0, 1}, {2, 3}, {3, 4}, {4, 5}})), 3u);
}

TEST(ComputeMeasures, ExampleGraphReport) {
  const auto r = compute_measures(make(2, {{0, 1}, {0, 1}}), {}, "ex", "test");
  EXPECT_EQ(r.dataset, "ex");
  EXPECT_EQ(r.domain, "test");
  EXPECT_EQ(*r.n, 2u);
  EXPECT_EQ(*r.m, 2u);
  EXPECT_FALSE(r.c_d);  // n < 3
  EXPECT_EQ(*r.c_d_max, *r.d_max);
  EXPECT_EQ(*r.m_u + *r.m_p, *r.m);
}

TEST(ComputeMeasures, EmptyGraphMarksUndefined) {
  const auto r = compute_measures(Graph{});
  EXPECT_EQ(*r.n, 0u);
  EXPECT_EQ(*r.m, 0u);
  EXPECT_FALSE(r.z);
  EXPECT_FALSE(r.p);
  EXPECT_FALSE(r.y);
  EXPECT_FALSE(r.pr_max);
  EXPECT_FALSE(r.delta);
  EXPECT_FALSE(r.cv_in);
  EXPECT_FALSE(r.alpha);
}

TEST(ComputeMeasures, MeasureLookupByName) {
  const auto r = compute_measures(cycle(4));
  EXPECT_EQ(measure_value(r, "n"), 4.0);
  EXPECT_EQ(measure_value(r, "delta"), 2.0);
  EXPECT_FALSE(measure_value(r, "alpha"));
  EXPECT_THROW(measure_value(r, "no_such_measure"), Error);
  EXPECT_GE(measure_fields().size(), 29u);
}

TEST(ComputeMeasures, MatchesBruteForceOnRandomMultigraphs) {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 30; ++i) {
    const auto e = oracle::random_multigraph(rng, 50, 300);
    EXPECT_EQ(oracle::compare_measures(e), "") << "graph " << i;
  }
}

TEST(ComputeMeasures, ScaleAndIsolationProperties) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 20; ++i) {
    auto e = oracle::random_multigraph(rng, 30, 120);
    const auto base = compute_measures(make(e.n, e.edges));

    auto doubled = e;
    doubled.edges.insert(doubled.edges.end(), e.edges.begin(), e.edges.end());
    const auto d = compute_measures(make(doubled.n, doubled.edges));
    EXPECT_EQ(d.m_u, base.m_u);
    EXPECT_EQ(d.p_u, base.p_u);
    EXPECT_EQ(d.delta, base.delta);
    if (base.c_d) EXPECT_NEAR(*d.c_d, *base.c_d, 1e-12);

    auto isolated = e;
    ++isolated.n;
    const auto s = compute_measures(make(isolated.n, isolated.edges));
    EXPECT_EQ(s.m, base.m);
    EXPECT_EQ(s.m_u, base.m_u);
    EXPECT_EQ(s.m_p, base.m_p);
    EXPECT_EQ(s.m_bi, base.m_bi);
    EXPECT_EQ(s.delta, base.delta);
    EXPECT_LE(*s.p, *base.p);
    EXPECT_LE(*s.z, *base.z);
  }
}
