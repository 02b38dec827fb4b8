#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wtd/error.hpp"
#include "wtd/vertex_set.hpp"

namespace wtd {

using LabeledEdge = std::pair<std::string, std::string>;

// Finite simple undirected graph with string-labeled vertices.
//
// Vertex indices follow the lexicographic order of the labels, so every
// index-ordered output is also label-ordered. Adjacency lists are sorted and
// duplicate free; a per-vertex neighborhood bitset is kept alongside.
class Graph {
 public:
  Graph() = default;

  Graph(std::vector<std::string> labels, const std::vector<LabeledEdge>& edges) {
    std::sort(labels.begin(), labels.end());
    if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
      throw PreconditionError("duplicate vertex label '" + *std::adjacent_find(labels.begin(), labels.end()) + "'");
    labels_ = std::move(labels);
    adjacency_.assign(labels_.size(), {});
    for (const auto& [a, b] : edges) {
      if (a == b) throw PreconditionError("self-loop on '" + a + "'");
      Vertex u = vertex(a), v = vertex(b);
      adjacency_[u].push_back(v);
      adjacency_[v].push_back(u);
    }
    finish();
  }

  // Vertex set is the union of the edge endpoints.
  static Graph from_edges(const std::vector<LabeledEdge>& edges) {
    std::vector<std::string> labels;
    for (const auto& [a, b] : edges) {
      labels.push_back(a);
      labels.push_back(b);
    }
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    return Graph(std::move(labels), edges);
  }

  std::size_t size() const { return labels_.size(); }
  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (const auto& a : adjacency_) twice += a.size();
    return twice / 2;
  }

  const std::string& label(Vertex v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const { return labels_; }

  std::optional<Vertex> find(std::string_view label) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label) return std::nullopt;
    return static_cast<Vertex>(it - labels_.begin());
  }
  Vertex vertex(std::string_view label) const {
    if (auto v = find(label)) return *v;
    throw PreconditionError("unknown vertex '" + std::string(label) + "'");
  }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  const VertexSet& neighbor_set(Vertex v) const { return neighbor_sets_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  bool adjacent(Vertex u, Vertex v) const { return neighbor_sets_[u].contains(v); }

  // Edges as (u, v) with u < v, sorted.
  std::vector<std::pair<Vertex, Vertex>> edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 0; u < size(); ++u)
      for (Vertex v : adjacency_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }
  std::vector<LabeledEdge> labeled_edges() const {
    std::vector<LabeledEdge> out;
    for (auto [u, v] : edges()) out.emplace_back(labels_[u], labels_[v]);
    return out;
  }

  VertexSet empty_set() const { return VertexSet(size()); }
  VertexSet all() const { return VertexSet::full(size()); }

  VertexSet set_of(std::initializer_list<std::string_view> labels) const {
    VertexSet s(size());
    for (auto l : labels) s.insert(vertex(l));
    return s;
  }
  template <typename Range>
  VertexSet set_of_labels(const Range& labels) const {
    VertexSet s(size());
    for (const auto& l : labels) s.insert(vertex(l));
    return s;
  }
  std::vector<std::string> labels_of(const VertexSet& s) const {
    std::vector<std::string> out;
    s.for_each([&](Vertex v) { out.push_back(labels_[v]); });
    return out;
  }

  // Subgraph induced by `keep`, labels preserved.
  Graph induced(const VertexSet& keep) const {
    std::vector<std::string> labels = labels_of(keep);
    std::vector<LabeledEdge> edges;
    for (auto [u, v] : this->edges())
      if (keep.contains(u) && keep.contains(v)) edges.emplace_back(labels_[u], labels_[v]);
    return Graph(std::move(labels), edges);
  }

  // Adds fresh vertices/edges; returns the new graph (values are immutable).
  Graph with_added(const std::vector<std::string>& new_labels, const std::vector<LabeledEdge>& new_edges) const {
    std::vector<std::string> labels = labels_;
    labels.insert(labels.end(), new_labels.begin(), new_labels.end());
    std::vector<LabeledEdge> edges = labeled_edges();
    edges.insert(edges.end(), new_edges.begin(), new_edges.end());
    return Graph(std::move(labels), edges);
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.labels_ == b.labels_ && a.adjacency_ == b.adjacency_;
  }

 private:
  void finish() {
    neighbor_sets_.assign(labels_.size(), VertexSet(labels_.size()));
    for (Vertex v = 0; v < labels_.size(); ++v) {
      auto& adj = adjacency_[v];
      std::sort(adj.begin(), adj.end());
      adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
      for (Vertex u : adj) neighbor_sets_[v].insert(u);
    }
  }

  std::vector<std::string> labels_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<VertexSet> neighbor_sets_;
};

// Edge-list text: one edge "a b" per line, '#' starts a comment, blank lines
// are ignored. Duplicate edges (in either orientation) collapse.
inline Graph parse_graph(std::string_view text) {
  std::vector<LabeledEdge> edges;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::istringstream in{std::string(line)};
    std::vector<std::string> tokens;
    for (std::string tok; in >> tok;) tokens.push_back(tok);
    if (tokens.empty()) continue;
    if (tokens.size() != 2)
      throw ParseError("line " + std::to_string(line_no) + ": expected 2 labels, got " + std::to_string(tokens.size()));
    if (tokens[0] == tokens[1]) throw ParseError("line " + std::to_string(line_no) + ": self-loop on '" + tokens[0] + "'");
    edges.emplace_back(tokens[0], tokens[1]);
    if (end == text.size()) break;
  }
  return Graph::from_edges(edges);
}

// Canonical edge-list text: edges sorted by label, smaller label first.
// Isolated vertices cannot be represented and are dropped.
inline std::string to_edge_list(const Graph& g) {
  std::string out;
  for (auto [u, v] : g.edges()) out += g.label(u) + " " + g.label(v) + "\n";
  return out;
}

// The paper-style path P_n: vertices "0".."n", edges (i, i+1).
inline Graph path_graph(std::size_t n, const std::string& prefix = "") {
  std::vector<std::string> labels;
  std::vector<LabeledEdge> edges;
  for (std::size_t i = 0; i <= n; ++i) labels.push_back(prefix + std::to_string(i));
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(labels[i], labels[i + 1]);
  return Graph(labels, edges);
}

// ---------------------------------------------------------------------------
// Forests and trees

class Forest {
 public:
  Forest() = default;
  explicit Forest(Graph g) : graph_(std::move(g)) {
    const std::size_t n = graph_.size();
    component_.assign(n, kUnset);
    std::size_t c = 0;
    for (Vertex s = 0; s < n; ++s) {
      if (component_[s] != kUnset) continue;
      VertexSet members(n);
      std::deque<Vertex> queue{s};
      component_[s] = c;
      while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        members.insert(v);
        for (Vertex u : graph_.neighbors(v))
          if (component_[u] == kUnset) {
            component_[u] = c;
            queue.push_back(u);
          }
      }
      components_.push_back(std::move(members));
      ++c;
    }
    if (graph_.edge_count() + components_.size() != n)
      throw PreconditionError("graph is not a forest (contains a cycle)");
  }

  const Graph& graph() const { return graph_; }
  std::size_t size() const { return graph_.size(); }
  std::size_t component_of(Vertex v) const { return component_[v]; }
  std::size_t component_count() const { return components_.size(); }
  // Ordered by smallest member (hence smallest label).
  const std::vector<VertexSet>& components() const { return components_; }
  bool is_tree() const { return components_.size() == 1; }

 private:
  static constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  Graph graph_;
  std::vector<std::size_t> component_;
  std::vector<VertexSet> components_;
};

class Tree : public Forest {
 public:
  Tree() = default;
  explicit Tree(Graph g) : Forest(std::move(g)) {
    if (!is_tree()) throw PreconditionError("graph is not a tree (it is empty or disconnected)");
  }
};

// Splits a forest into its component trees, in component order.
inline std::vector<Tree> component_trees(const Forest& f) {
  std::vector<Tree> out;
  for (const auto& c : f.components()) out.emplace_back(f.graph().induced(c));
  return out;
}

// ---------------------------------------------------------------------------
// Heights

// height(v) = distance to the nearest leaf; isolated vertices have height 0.
class HeightMap {
 public:
  HeightMap() = default;
  explicit HeightMap(std::vector<int> h) : height_(std::move(h)) {}

  int operator[](Vertex v) const { return height_[v]; }
  std::size_t size() const { return height_.size(); }
  const std::vector<int>& values() const { return height_; }

  // Maximum over all vertices; 0 for the empty graph.
  int height() const { return height_.empty() ? 0 : *std::max_element(height_.begin(), height_.end()); }
  int height_of(const VertexSet& component) const {
    int h = 0;
    component.for_each([&](Vertex v) { h = std::max(h, height_[v]); });
    return h;
  }

  VertexSet level(int k) const {
    VertexSet s(height_.size());
    for (Vertex v = 0; v < height_.size(); ++v)
      if (height_[v] == k) s.insert(v);
    return s;
  }
  VertexSet even() const { return parity(0); }
  VertexSet odd() const { return parity(1); }

 private:
  VertexSet parity(int p) const {
    VertexSet s(height_.size());
    for (Vertex v = 0; v < height_.size(); ++v)
      if (height_[v] % 2 == p) s.insert(v);
    return s;
  }
  std::vector<int> height_;
};

// Multi-source BFS from every leaf. Components without a leaf (isolated
// vertices, for forests) get height 0.
inline HeightMap heights(const Graph& g) {
  const std::size_t n = g.size();
  std::vector<int> h(n, -1);
  std::deque<Vertex> queue;
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) == 1) {
      h[v] = 0;
      queue.push_back(v);
    }
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex u : g.neighbors(v))
      if (h[u] < 0) {
        h[u] = h[v] + 1;
        queue.push_back(u);
      }
  }
  for (auto& x : h)
    if (x < 0) x = 0;
  return HeightMap(std::move(h));
}
inline HeightMap heights(const Forest& f) { return heights(f.graph()); }

struct VertexClasses {
  VertexSet leaves;     // degree 1
  VertexSet supports;   // adjacent to a leaf
  VertexSet supported;  // adjacent to a support vertex
  VertexSet isolated;   // degree 0
};

inline VertexClasses classify_vertices(const Graph& g) {
  const std::size_t n = g.size();
  VertexClasses c{VertexSet(n), VertexSet(n), VertexSet(n), VertexSet(n)};
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) == 0) c.isolated.insert(v);
    if (g.degree(v) == 1) c.leaves.insert(v);
  }
  for (Vertex v = 0; v < n; ++v)
    if (g.neighbor_set(v).intersects(c.leaves)) c.supports.insert(v);
  for (Vertex v = 0; v < n; ++v)
    if (g.neighbor_set(v).intersects(c.supports)) c.supported.insert(v);
  return c;
}
inline VertexSet support_vertices(const Graph& g) { return classify_vertices(g).supports; }

// ---------------------------------------------------------------------------
// 2-colorings

enum class Color { red, blue };

inline const char* to_string(Color c) { return c == Color::blue ? "blue" : "red"; }

struct Coloring {
  std::vector<Color> color;

  Color operator[](Vertex v) const { return color[v]; }
  VertexSet of(Color c) const {
    VertexSet s(color.size());
    for (Vertex v = 0; v < color.size(); ++v)
      if (color[v] == c) s.insert(v);
    return s;
  }
  VertexSet blue() const { return of(Color::blue); }
  VertexSet red() const { return of(Color::red); }
  // Restriction to an induced subgraph, matched by label.
  Coloring restricted_to(const Graph& host, const Graph& sub) const {
    Coloring out;
    for (Vertex v = 0; v < sub.size(); ++v) out.color.push_back(color[host.vertex(sub.label(v))]);
    return out;
  }
  bool is_proper(const Graph& g) const {
    for (auto [u, v] : g.edges())
      if (color[u] == color[v]) return false;
    return true;
  }
};

enum class ColoringRule {
  smallest_label_blue,  // the smallest label of each component is blue
  leaves_blue,          // the smallest leaf of each component is blue (even heights blue on balanced trees)
};

// Deterministic proper 2-coloring, component by component. `swap` inverts
// every component.
inline Coloring two_coloring(const Forest& f, ColoringRule rule = ColoringRule::smallest_label_blue,
                             bool swap = false) {
  const Graph& g = f.graph();
  Coloring c{std::vector<Color>(g.size(), Color::blue)};
  std::vector<bool> seen(g.size(), false);
  for (const auto& comp : f.components()) {
    Vertex anchor = comp.first();
    if (rule == ColoringRule::leaves_blue)
      comp.for_each([&](Vertex v) {
        if (g.degree(v) == 1 && (g.degree(anchor) != 1 || v < anchor)) anchor = v;
      });
    const Color first = swap ? Color::red : Color::blue;
    const Color second = swap ? Color::blue : Color::red;
    std::deque<std::pair<Vertex, bool>> queue{{anchor, true}};
    seen[anchor] = true;
    while (!queue.empty()) {
      auto [v, even] = queue.front();
      queue.pop_front();
      c.color[v] = even ? first : second;
      for (Vertex u : g.neighbors(v))
        if (!seen[u]) {
          seen[u] = true;
          queue.emplace_back(u, !even);
        }
    }
  }
  return c;
}

// ---------------------------------------------------------------------------
// Distances, radar, branch

// BFS distances from x; -1 for unreachable vertices.
inline std::vector<int> distances_from(const Graph& g, Vertex x) {
  std::vector<int> d(g.size(), -1);
  std::deque<Vertex> queue{x};
  d[x] = 0;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex u : g.neighbors(v))
      if (d[u] < 0) {
        d[u] = d[v] + 1;
        queue.push_back(u);
      }
  }
  return d;
}

// {y : dist(x, y) = d}
inline VertexSet radar(const Graph& g, Vertex x, int d) {
  auto dist = distances_from(g, x);
  VertexSet s(g.size());
  for (Vertex y = 0; y < g.size(); ++y)
    if (dist[y] == d) s.insert(y);
  return s;
}

// {y : x lies on path(y, r)}: the part of the tree hanging off x when rooted at r.
inline VertexSet branch(const Forest& t, Vertex r, Vertex x) {
  const Graph& g = t.graph();
  if (t.component_of(r) != t.component_of(x)) throw PreconditionError("branch: r and x lie in different components");
  if (r == x) return t.components()[t.component_of(r)];
  auto dist = distances_from(g, r);
  // x's parent toward r is its unique neighbor closer to r; everything else
  // reachable from x without crossing that edge is the branch.
  Vertex toward_r = x;
  for (Vertex u : g.neighbors(x))
    if (dist[u] == dist[x] - 1) toward_r = u;
  VertexSet out(g.size());
  std::deque<Vertex> queue{x};
  out.insert(x);
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex u : g.neighbors(v))
      if (u != toward_r && !out.contains(u)) {
        out.insert(u);
        queue.push_back(u);
      }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Canonical forms (AHU encoding)

namespace detail {

inline std::string rooted_code(const Graph& g, Vertex v, Vertex parent) {
  std::vector<std::string> children;
  for (Vertex u : g.neighbors(v))
    if (u != parent) children.push_back(rooted_code(g, u, v));
  std::sort(children.begin(), children.end());
  std::string out = "(";
  for (const auto& c : children) out += c;
  out += ")";
  return out;
}

// One or two centers of a tree component, via repeated leaf stripping.
inline std::vector<Vertex> centers(const Graph& g, const VertexSet& comp) {
  std::vector<std::size_t> deg(g.size(), 0);
  std::vector<Vertex> layer;
  std::size_t remaining = comp.size();
  comp.for_each([&](Vertex v) {
    deg[v] = g.degree(v);
    if (deg[v] <= 1) layer.push_back(v);
  });
  while (remaining > 2) {
    std::vector<Vertex> next;
    remaining -= layer.size();
    for (Vertex v : layer)
      for (Vertex u : g.neighbors(v))
        if (--deg[u] == 1) next.push_back(u);
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

}  // namespace detail

// Each component is encoded as the AHU string of the tree rooted at its
// center: "(" + sorted child codes + ")". With two centers the smaller of the
// two rooted codes is used. Component codes are sorted and concatenated.
// Two forests are isomorphic iff their canonical forms are equal.
inline std::string canonical_form(const Forest& f) {
  const Graph& g = f.graph();
  std::vector<std::string> codes;
  for (const auto& comp : f.components()) {
    std::string best;
    for (Vertex c : detail::centers(g, comp)) {
      std::string code = detail::rooted_code(g, c, c);
      if (best.empty() || code < best) best = code;
    }
    codes.push_back(best);
  }
  std::sort(codes.begin(), codes.end());
  std::string out;
  for (const auto& c : codes) out += c;
  return out;
}

inline bool is_isomorphic(const Forest& a, const Forest& b) {
  return a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

}  // namespace wtd
