#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "wtd/graph.hpp"
#include "wtd/prng.hpp"

namespace wtd {

// Tree on labels "0".."n-1" from a parent array (parent[0] ignored).
inline Tree tree_from_parents(const std::vector<std::size_t>& parent) {
  std::vector<std::string> labels;
  std::vector<LabeledEdge> edges;
  for (std::size_t i = 0; i < parent.size(); ++i) labels.push_back(std::to_string(i));
  for (std::size_t i = 1; i < parent.size(); ++i) edges.emplace_back(labels[i], labels[parent[i]]);
  return Tree(Graph(labels, edges));
}

// One representative of every isomorphism class of trees on exactly n
// vertices (n >= 1). Grown by leaf extension from the classes on n-1
// vertices, deduplicated by canonical form. Labels are "0".."n-1".
inline std::vector<Tree> all_trees(std::size_t n) {
  if (n == 0) return {};
  std::vector<std::vector<std::size_t>> layer{{0}};
  for (std::size_t size = 2; size <= n; ++size) {
    std::vector<std::vector<std::size_t>> next;
    std::unordered_set<std::string> seen;
    for (const auto& parent : layer)
      for (std::size_t attach = 0; attach < parent.size(); ++attach) {
        auto grown = parent;
        grown.push_back(attach);
        if (seen.insert(canonical_form(tree_from_parents(grown))).second) next.push_back(std::move(grown));
      }
    layer = std::move(next);
  }
  std::vector<Tree> out;
  for (const auto& p : layer) out.push_back(tree_from_parents(p));
  return out;
}

// Uniform labeled tree on n vertices via a random Pruefer sequence.
inline Tree random_tree(std::size_t n, Lcg& rng) {
  if (n == 1) return tree_from_parents({0});
  if (n == 2) return tree_from_parents({0, 0});
  std::vector<std::size_t> code(n - 2);
  for (auto& c : code) c = rng.below(n);
  std::vector<std::size_t> degree(n, 1);
  for (auto c : code) ++degree[c];
  std::set<std::size_t> leaves;
  for (std::size_t v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.insert(v);
  std::vector<LabeledEdge> edges;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  for (auto c : code) {
    std::size_t leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.emplace_back(labels[leaf], labels[c]);
    if (--degree[c] == 1) leaves.insert(c);
  }
  std::size_t a = *leaves.begin(), b = *std::next(leaves.begin());
  edges.emplace_back(labels[a], labels[b]);
  return Tree(Graph(labels, edges));
}

// Makes a tree balanced: every leaf whose color differs from the smallest
// leaf gets one fresh pendant leaf ("b0", "b1", ...). Afterwards all leaves
// share a color, which is the balanced condition.
inline Tree balanced_closure(const Tree& t) {
  const Graph& g = t.graph();
  if (g.size() <= 1) return t;
  Coloring c = two_coloring(t, ColoringRule::leaves_blue);
  std::vector<std::string> fresh;
  std::vector<LabeledEdge> edges;
  std::size_t k = 0;
  for (Vertex v = 0; v < g.size(); ++v)
    if (g.degree(v) == 1 && c[v] == Color::red) {
      std::string label;
      do label = "b" + std::to_string(k++);
      while (g.find(label));
      fresh.push_back(label);
      edges.emplace_back(g.label(v), label);
    }
  return Tree(g.with_added(fresh, edges));
}

}  // namespace wtd
