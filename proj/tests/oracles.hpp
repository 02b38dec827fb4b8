#pragma once

// Brute-force oracles and fixtures shared by the test binaries. Nothing here
// reuses the library's transversal engine.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "wtd/graph.hpp"
#include "wtd/vertex_set.hpp"

namespace oracle {

using wtd::Graph;
using wtd::Vertex;
using wtd::VertexSet;

inline VertexSet from_mask(std::size_t n, std::uint32_t mask) {
  VertexSet s(n);
  for (Vertex v = 0; v < n; ++v)
    if (mask >> v & 1U) s.insert(v);
  return s;
}

// D dominates S in the open sense, checked edge by edge.
inline bool dominates(const Graph& g, std::uint32_t d, std::uint32_t s) {
  for (Vertex v = 0; v < g.size(); ++v) {
    if (!(s >> v & 1U)) continue;
    bool hit = false;
    for (Vertex u : g.neighbors(v))
      if (d >> u & 1U) hit = true;
    if (!hit) return false;
  }
  return true;
}

// All inclusion-minimal S-TD-sets by scanning the 2^n subsets.
inline std::vector<VertexSet> minimal_s_td_sets(const Graph& g, std::uint32_t s) {
  const std::size_t n = g.size();
  std::vector<VertexSet> out;
  for (std::uint32_t d = 0; d < (1U << n); ++d) {
    if (!dominates(g, d, s)) continue;
    bool minimal = true;
    for (Vertex v = 0; v < n && minimal; ++v)
      if ((d >> v & 1U) && dominates(g, d & ~(1U << v), s)) minimal = false;
    if (minimal) out.push_back(from_mask(n, d));
  }
  wtd::sort_canonical(out);
  return out;
}
inline std::vector<VertexSet> minimal_td_sets(const Graph& g) {
  return minimal_s_td_sets(g, static_cast<std::uint32_t>((1ULL << g.size()) - 1));
}

inline bool unmixed(const Graph& g) {
  auto sets = minimal_td_sets(g);
  for (const auto& s : sets)
    if (s.size() != sets.front().size()) return false;
  return true;
}

// Open neighborhood of D as a mask.
inline std::uint32_t neighborhood(const Graph& g, std::uint32_t d) {
  std::uint32_t out = 0;
  for (Vertex v = 0; v < g.size(); ++v)
    if (d >> v & 1U)
      for (Vertex u : g.neighbors(v)) out |= 1U << u;
  return out;
}

// Minimal in the sense that no proper subset has the same open neighborhood.
inline bool minimal_by_subsets(const Graph& g, std::uint32_t d) {
  std::uint32_t nd = neighborhood(g, d);
  for (std::uint32_t sub = (d - 1) & d;; sub = (sub - 1) & d) {
    if (sub != d && neighborhood(g, sub) == nd) return false;
    if (sub == 0) break;
  }
  return true;
}

// Isomorphism by trying every bijection (n <= 8).
inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.size() != b.size() || a.edge_count() != b.edge_count()) return false;
  std::vector<Vertex> perm(a.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (auto [u, v] : a.edges())
      if (!b.adjacent(perm[u], perm[v])) {
        ok = false;
        break;
      }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline std::vector<std::string> labels(const Graph& g, const VertexSet& s) { return g.labels_of(s); }

}  // namespace oracle

namespace fixture {

using wtd::Graph;
using wtd::LabeledEdge;

inline Graph p4() { return wtd::parse_graph("l1 s1\ns1 u\nu s2\ns2 l2\n"); }
inline Graph p5() { return wtd::parse_graph("v1 v2\nv2 v3\nv3 v4\nv4 v5\nv5 v6\n"); }
inline Graph p6() { return wtd::path_graph(6); }

inline Graph star(std::size_t k) {
  std::vector<LabeledEdge> e;
  for (std::size_t i = 1; i <= k; ++i) e.emplace_back("s", "l" + std::to_string(i));
  return Graph::from_edges(e);
}

inline Graph single_vertex() { return Graph({"v"}, {}); }

// Spider: center c with k legs of length 2 (balanced, height 2).
inline Graph spider2(std::size_t k) {
  std::vector<LabeledEdge> e;
  for (std::size_t i = 1; i <= k; ++i) {
    e.emplace_back("c", "a" + std::to_string(i));
    e.emplace_back("a" + std::to_string(i), "b" + std::to_string(i));
  }
  return Graph::from_edges(e);
}

// Height-3 unmixed balanced tree whose reduced ideal is
// <u1^4, u2^2, u3^3, u1u2, u2u3>: s1 carries three leaves, s2 one, s3 two.
inline Graph reduction_example() {
  return Graph::from_edges({{"s1", "l11"}, {"s1", "l12"}, {"s1", "l13"}, {"s1", "u1"},
                            {"s2", "l21"}, {"s2", "u2"},
                            {"s3", "l31"}, {"s3", "l32"}, {"s3", "u3"},
                            {"r1", "u1"}, {"r1", "u2"}, {"r2", "u2"}, {"r2", "u3"}});
}

// 18-vertex unmixed tree whose two interior graphs each have type 2.
inline Graph type4_tree() {
  std::vector<LabeledEdge> e;
  for (int i = 1; i <= 5; ++i) {
    std::string s = "s" + std::to_string(i);
    e.emplace_back(s, "l" + std::to_string(i));
    e.emplace_back(s, "u" + std::to_string(i));
  }
  for (auto [a, b] : std::vector<std::pair<const char*, const char*>>{
           {"u1", "r1"}, {"u2", "r1"}, {"u2", "u3"}, {"u3", "r2"}, {"u4", "r2"}, {"u4", "r3"}, {"u5", "r3"}})
    e.emplace_back(a, b);
  return Graph::from_edges(e);
}

// The 8-vertex tree with the reconstructed example open neighborhood ideal.
inline Graph eight_vertex_example() {
  return Graph::from_edges({{"v4", "v1"}, {"v4", "v2"}, {"v4", "v6"}, {"v5", "v3"},
                            {"v5", "v7"}, {"v6", "v8"}, {"v7", "v8"}});
}

}  // namespace fixture
