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

#include <fstream>
#include <random>
#include <sstream>

#include "lodgraph/error.hpp"
#include "lodgraph/graph.hpp"
#include "lodgraph/measures.hpp"
#include "lodgraph/report.hpp"
#include "oracles.hpp"

using namespace lodgraph;

namespace {

std::string line(std::uint64_t s, std::uint64_t o, std::uint64_t p) {
  return TermHash{s}.hex() + " " + TermHash{o}.hex() + " " + TermHash{p}.hex() + "\n";
}

Graph from_text(const std::string& text) {
  std::istringstream in(text);
  return build_graph(in);
}

std::string saved_bytes(const Graph& g) {
  std::ostringstream out(std::ios::binary);
  save_binary(g, out);
  return out.str();
}

Graph loaded(const std::string& bytes) {
  std::istringstream in(bytes, std::ios::binary);
  return load_binary(in);
}

}  // namespace

TEST(BuildGraph, TwoParallelStatements) {
  const Graph g = from_text(line(1, 2, 10) + line(1, 2, 11));
  EXPECT_EQ(g.num_vertices(), 2u);
  EXPECT_EQ(g.num_edges(), 2u);
  EXPECT_EQ(g.attributes()[0], TermHash{10});
  EXPECT_EQ(g.attributes()[1], TermHash{11});
}

TEST(BuildGraph, Empty) {
  const Graph g = from_text("");
  EXPECT_EQ(g.num_vertices(), 0u);
  EXPECT_EQ(g.num_edges(), 0u);
}

TEST(BuildGraph, FirstAppearanceIndexingAndDegrees) {
  // a->b, b->a, a->c
  const Graph g = from_text(line(0xa, 0xb, 1) + line(0xb, 0xa, 1) + line(0xa, 0xc, 1));
  ASSERT_EQ(g.num_vertices(), 3u);
  EXPECT_EQ(g.num_edges(), 3u);
  EXPECT_EQ(g.vertex_hash(0), TermHash{0xa});
  EXPECT_EQ(g.vertex_hash(1), TermHash{0xb});
  EXPECT_EQ(g.vertex_hash(2), TermHash{0xc});
  EXPECT_EQ(g.out_degree(0), 2u);
  EXPECT_EQ(g.in_degree(0), 1u);
  EXPECT_EQ(g.degree(0), 3u);
  EXPECT_EQ(std::vector<VertexId>(g.out_neighbors(0).begin(), g.out_neighbors(0).end()),
            (std::vector<VertexId>{1, 2}));
}

TEST(BuildGraph, PredicateBecomesVertexOnlyWhenUsedAsNode) {
  const Graph g = from_text(line(1, 2, 3) + line(3, 1, 4));
  EXPECT_EQ(g.num_vertices(), 3u);
  const Graph h = from_text(line(1, 2, 3));
  EXPECT_EQ(h.num_vertices(), 2u);
}

TEST(BuildGraph, SelfLoopCountsInAndOut) {
  const Graph g = from_text(line(5, 5, 1));
  EXPECT_EQ(g.num_vertices(), 1u);
  EXPECT_EQ(g.in_degree(0), 1u);
  EXPECT_EQ(g.out_degree(0), 1u);
}

TEST(BuildGraph, MalformedLineNamesLineNumber) {
  try {
    from_text(line(1, 2, 3) + "0000000000000001 zz 0000000000000003\n");
    FAIL() << "expected parse error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Parse);
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
  }
  EXPECT_THROW(from_text("0000000000000001 0000000000000002\n"), Error);
  EXPECT_THROW(from_text(line(1, 2, 3).substr(0, 40) + " extra\n"), Error);
}

TEST(BuildGraph, HandshakeOnRandomGraphs) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 20; ++i) {
    const auto e = oracle::random_multigraph(rng, 40, 200);
    const Graph g = Graph::from_pairs(e.n, e.edges);
    std::uint64_t in = 0, out = 0, total = 0;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      in += g.in_degree(v);
      out += g.out_degree(v);
      total += g.degree(v);
      EXPECT_EQ(g.degree(v), g.in_degree(v) + g.out_degree(v));
    }
    EXPECT_EQ(in, g.num_edges());
    EXPECT_EQ(out, g.num_edges());
    EXPECT_EQ(total, 2 * g.num_edges());
  }
}

TEST(BinaryGraph, RoundTripSmallAndEmpty) {
  const Graph g = from_text(line(0xa, 0xb, 1) + line(0xb, 0xa, 2) + line(0xa, 0xc, 3));
  const Graph back = loaded(saved_bytes(g));
  EXPECT_EQ(back, g);
  for (VertexId v = 0; v < 3; ++v) {
    EXPECT_EQ(back.in_degree(v), g.in_degree(v));
    EXPECT_EQ(back.out_degree(v), g.out_degree(v));
  }
  const Graph empty;
  const Graph e2 = loaded(saved_bytes(empty));
  EXPECT_EQ(e2.num_vertices(), 0u);
  EXPECT_EQ(e2.num_edges(), 0u);
}

TEST(BinaryGraph, HeaderLayout) {
  const std::string bytes = saved_bytes(from_text(line(1, 2, 3)));
  ASSERT_GE(bytes.size(), 56u);
  EXPECT_EQ(bytes.substr(0, 8), "LODGRAPH");
  auto word = [&](int i) {
    std::uint64_t v = 0;
    for (int b = 7; b >= 0; --b) v = (v << 8) | static_cast<unsigned char>(bytes[8 + 8 * i + b]);
    return v;
  };
  EXPECT_EQ(word(0), 1u);   // version
  EXPECT_EQ(word(1), 2u);   // n
  EXPECT_EQ(word(2), 1u);   // m
  EXPECT_EQ(word(3), 1u);   // zlib
  EXPECT_EQ(word(4), 8u * (2 + 3));
  EXPECT_EQ(word(5), bytes.size() - 56);
}

TEST(BinaryGraph, LargeRandomRoundTripKeepsMeasures) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<VertexId> vertex(0, 19999);
  std::vector<std::pair<VertexId, VertexId>> edges(100000);
  for (auto& e : edges) e = {vertex(rng), vertex(rng)};
  const Graph g = Graph::from_pairs(20000, edges);
  oracle::TempDir tmp;
  save_binary(g, tmp / "g.bin");
  EXPECT_TRUE(is_binary_graph(tmp / "g.bin"));
  const Graph back = load_binary(tmp / "g.bin");
  EXPECT_EQ(back, g);
  EXPECT_EQ(report_to_json(compute_measures(back)), report_to_json(compute_measures(g)));
}

TEST(BinaryGraph, DeterministicBytes) {
  const std::string text = line(1, 2, 3) + line(2, 3, 4) + line(1, 2, 3);
  EXPECT_EQ(saved_bytes(from_text(text)), saved_bytes(from_text(text)));
}

TEST(BinaryGraph, RejectsDamagedFiles) {
  const std::string good = saved_bytes(from_text(line(1, 2, 3) + line(2, 3, 4)));
  auto code_of = [](const std::string& bytes) {
    try {
      loaded(bytes);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Internal;
  };
  EXPECT_EQ(code_of(good.substr(0, 20)), ErrorCode::Format);
  EXPECT_EQ(code_of(good.substr(0, good.size() - 3)), ErrorCode::Format);
  EXPECT_EQ(code_of(good + "x"), ErrorCode::Format);
  std::string bad_magic = good;
  bad_magic[0] = 'X';
  EXPECT_EQ(code_of(bad_magic), ErrorCode::Format);
  std::string bad_version = good;
  bad_version[8] = 2;
  EXPECT_EQ(code_of(bad_version), ErrorCode::Format);
  std::string bad_payload = good;
  bad_payload[60] ^= 0x5a;
  EXPECT_EQ(code_of(bad_payload), ErrorCode::Format);
}

TEST(BinaryGraph, SniffsEdgelistAsNotBinary) {
  oracle::TempDir tmp;
  oracle::write_file(tmp / "e.txt", line(1, 2, 3));
  EXPECT_FALSE(is_binary_graph(tmp / "e.txt"));
  EXPECT_EQ(build_graph_file(tmp / "e.txt").num_edges(), 1u);
}
