#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "wtd/error.hpp"
#include "wtd/graph.hpp"
#include "wtd/prng.hpp"
#include "wtd/unmixed.hpp"

namespace wtd {

// What O attaches, by the height of the attach vertex.
enum class OKind { leaf1, whisker4, whisker3 };

inline std::string to_string(OKind k) {
  switch (k) {
    case OKind::leaf1: return "height1-leaf";
    case OKind::whisker4: return "height2-whisker4";
    case OKind::whisker3: return "height3-whisker3";
  }
  return "";
}

inline OKind parse_okind(const std::string& s) {
  if (s == "height1-leaf") return OKind::leaf1;
  if (s == "height2-whisker4") return OKind::whisker4;
  if (s == "height3-whisker3") return OKind::whisker3;
  throw ParseError("unknown step kind '" + s + "'");
}

inline OKind okind_for_height(int h) {
  switch (h) {
    case 1: return OKind::leaf1;
    case 2: return OKind::whisker4;
    case 3: return OKind::whisker3;
    default: throw PreconditionError("O: attach vertex must have height 1, 2 or 3, got " + std::to_string(h));
  }
}

// Number of vertices a step adds.
inline std::size_t okind_size(OKind k) { return k == OKind::leaf1 ? 1 : k == OKind::whisker4 ? 4 : 3; }

// Smallest unused labels of the form w0, w1, ...
inline std::vector<std::string> fresh_labels(const Graph& g, std::size_t count) {
  std::vector<std::string> out;
  for (std::size_t n = 0; out.size() < count; ++n) {
    std::string l = "w" + std::to_string(n);
    if (!g.find(l)) out.push_back(std::move(l));
  }
  return out;
}

// O(T, v): attach a fresh path with vertices 0..k (k = 0, 3, 2 for heights
// 1, 2, 3) joining vertex k to v. Fresh labels are handed out in path order,
// so the new leaf gets the first one.
inline Tree apply_o(const Tree& t, const std::string& v, std::vector<std::string>* added = nullptr) {
  const Graph& g = t.graph();
  OKind kind = okind_for_height(heights(t)[g.vertex(v)]);
  auto fresh = fresh_labels(g, okind_size(kind));
  std::vector<LabeledEdge> edges;
  for (std::size_t i = 0; i + 1 < fresh.size(); ++i) edges.emplace_back(fresh[i], fresh[i + 1]);
  edges.emplace_back(fresh.back(), v);
  if (added) *added = fresh;
  return Tree(g.with_added(fresh, edges));
}

struct ConstructionStep {
  std::string attach_label;
  OKind kind;
  friend bool operator==(const ConstructionStep&, const ConstructionStep&) = default;
};

// Steps applied to P_6 labeled "0".."6"; new vertices are named by fresh_labels.
struct ConstructionTrace {
  std::vector<ConstructionStep> steps;

  std::size_t size() const { return steps.size(); }
  bool empty() const { return steps.empty(); }
  friend bool operator==(const ConstructionTrace&, const ConstructionTrace&) = default;

  nlohmann::json to_json() const {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& s : steps) out.push_back({{"attach_label", s.attach_label}, {"kind", to_string(s.kind)}});
    return out;
  }
  static ConstructionTrace from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw ParseError("trace must be a JSON list");
    ConstructionTrace t;
    for (const auto& s : j) {
      if (!s.is_object() || !s.contains("attach_label") || !s.contains("kind") || !s["attach_label"].is_string() ||
          !s["kind"].is_string())
        throw ParseError("trace step needs string fields attach_label and kind");
      t.steps.push_back({s["attach_label"].get<std::string>(), parse_okind(s["kind"].get<std::string>())});
    }
    return t;
  }
};

inline Tree base_p6() { return Tree(path_graph(6)); }

// Applies the steps in order, checking that each recorded kind matches the
// attach vertex's height at that point.
inline Tree replay(const ConstructionTrace& trace) {
  Tree t = base_p6();
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const auto& s = trace.steps[i];
    auto v = t.graph().find(s.attach_label);
    if (!v) throw PreconditionError("replay step " + std::to_string(i) + ": no vertex '" + s.attach_label + "'");
    if (okind_for_height(heights(t)[*v]) != s.kind)
      throw PreconditionError("replay step " + std::to_string(i) + ": '" + s.attach_label + "' has the wrong height for " +
                              to_string(s.kind));
    t = apply_o(t, s.attach_label);
  }
  return t;
}

// Random O-sequence from P_6: each step picks uniformly among the vertices of
// height 1, 2 or 3 (in label order) with Lcg::below.
inline std::pair<Tree, ConstructionTrace> generate(std::uint64_t seed, std::size_t steps) {
  Lcg rng(seed);
  Tree t = base_p6();
  ConstructionTrace trace;
  for (std::size_t i = 0; i < steps; ++i) {
    HeightMap h = heights(t);
    std::vector<Vertex> eligible;
    for (Vertex v = 0; v < t.size(); ++v)
      if (h[v] >= 1 && h[v] <= 3) eligible.push_back(v);
    Vertex v = eligible[rng.below(eligible.size())];
    std::string label = t.graph().label(v);
    trace.steps.push_back({label, okind_for_height(h[v])});
    t = apply_o(t, label);
  }
  return {std::move(t), std::move(trace)};
}

struct LeafNormalization {
  Tree tree;
  std::map<std::string, std::size_t> removed;                      // support -> number of leaves dropped
  std::map<std::string, std::vector<std::string>> removed_leaves;  // support -> dropped leaf labels
};

// Keeps the smallest-label leaf at every support and drops the rest.
inline LeafNormalization leaf_normalize(const Tree& t) {
  const Graph& g = t.graph();
  VertexClasses cls = classify_vertices(g);
  if (cls.leaves.empty()) throw PreconditionError("leaf_normalize: tree has no leaf");
  LeafNormalization out;
  VertexSet keep = g.all();
  if (g.size() > 2) {
    cls.supports.for_each([&](Vertex s) {
      bool first = true;
      for (Vertex x : g.neighbors(s)) {  // neighbors are in label order
        if (!cls.leaves.contains(x)) continue;
        if (first) {
          first = false;
          continue;
        }
        keep.erase(x);
        ++out.removed[g.label(s)];
        out.removed_leaves[g.label(s)].push_back(g.label(x));
      }
    });
  }
  out.tree = Tree(g.induced(keep));
  return out;
}

namespace detail {

struct Peel {
  OKind kind;
  std::string attach;
  std::vector<std::string> piece;  // path order: new leaf first, attach neighbor last
};

inline bool is_unmixed_balanced_height3(const Tree& t) {
  return is_balanced(t) && heights(t).height() == 3 && characterize_balanced_unmixed(t).unmixed;
}

}  // namespace detail

// Inverse of the construction. Returns nullopt when t is not an unmixed
// balanced tree of height 3; throws TheoremViolation if no peelable vertex
// exists in such a tree.
inline std::optional<ConstructionTrace> deconstruct(const Tree& t) {
  if (!detail::is_unmixed_balanced_height3(t)) return std::nullopt;
  LeafNormalization norm = leaf_normalize(t);
  Tree cur = norm.tree;
  std::vector<detail::Peel> peels;

  for (;;) {
    const Graph& g = cur.graph();
    HeightMap h = heights(cur);
    VertexSet v3 = h.level(3);
    // Smallest-label u in V_2 with exactly one V_3 neighbor.
    std::optional<Vertex> pick, root;
    h.level(2).for_each([&](Vertex u) {
      if (pick) return;
      std::vector<Vertex> up;
      for (Vertex x : g.neighbors(u))
        if (h[x] == 3) up.push_back(x);
      if (up.size() == 1) {
        pick = u;
        root = up[0];
      }
    });
    if (!pick) throw TheoremViolation("deconstruct: no height-2 vertex with a unique height-3 neighbor");
    const Vertex u = *pick, r = *root;
    if (g.degree(r) == 2 && v3.size() == 1) break;  // leaf-normalized with one V_3 vertex: P_6

    auto path_from = [&](Vertex top, Vertex skip) {
      // top, then down to its support and the support's single leaf
      std::vector<std::string> down{g.label(top)};
      Vertex s = top;
      for (Vertex x : g.neighbors(top))
        if (x != skip && h[x] == 1) s = x;
      down.push_back(g.label(s));
      for (Vertex x : g.neighbors(s))
        if (h[x] == 0) down.push_back(g.label(x));
      return down;
    };

    detail::Peel p;
    VertexSet remove(g.size());
    if (g.degree(r) > 2) {
      p.kind = OKind::whisker3;
      p.attach = g.label(r);
      remove = branch(cur, r, u);
      p.piece = path_from(u, r);
    } else {
      Vertex other = g.neighbors(r)[0] == u ? g.neighbors(r)[1] : g.neighbors(r)[0];
      p.kind = OKind::whisker4;
      p.attach = g.label(other);
      remove = branch(cur, other, r);
      p.piece = path_from(u, r);
      p.piece.insert(p.piece.begin(), g.label(r));
    }
    std::reverse(p.piece.begin(), p.piece.end());
    if (p.piece.size() != okind_size(p.kind) || remove.size() != p.piece.size())
      throw TheoremViolation("deconstruct: peeled branch is not a path of the expected length");
    peels.push_back(std::move(p));
    cur = Tree(g.induced(g.all() - remove));
    if (!detail::is_unmixed_balanced_height3(cur))
      throw TheoremViolation("deconstruct: remainder is not an unmixed balanced tree of height 3");
  }

  // Relabel by replay: map the remaining P_6 onto 0..6 starting from its
  // smaller leaf, then rebuild forwards.
  std::map<std::string, std::string> name;
  {
    const Graph& g = cur.graph();
    Vertex end = classify_vertices(g).leaves.first();
    Vertex prev = end, at = end;
    for (int i = 0; i <= 6; ++i) {
      name[g.label(at)] = std::to_string(i);
      for (Vertex x : g.neighbors(at))
        if (x != prev) {
          prev = at;
          at = x;
          break;
        }
    }
  }
  ConstructionTrace trace;
  Tree built = base_p6();
  auto step = [&](OKind kind, const std::string& attach, const std::vector<std::string>& piece) {
    std::vector<std::string> added;
    trace.steps.push_back({name.at(attach), kind});
    built = apply_o(built, name.at(attach), &added);
    for (std::size_t i = 0; i < piece.size(); ++i) name[piece[i]] = added[i];
  };
  for (auto it = peels.rbegin(); it != peels.rend(); ++it) step(it->kind, it->attach, it->piece);
  for (const auto& [support, leaves] : norm.removed_leaves)
    for (const auto& l : leaves) step(OKind::leaf1, support, {l});
  return trace;
}

// Adds one fresh leaf to every vertex (in label order).
inline Graph suspension(const Graph& g) {
  auto fresh = fresh_labels(g, g.size());
  std::vector<LabeledEdge> edges;
  for (Vertex v = 0; v < g.size(); ++v) edges.emplace_back(g.label(v), fresh[v]);
  return g.with_added(fresh, edges);
}
inline Tree suspension(const Tree& t) { return Tree(suspension(t.graph())); }

// Replaces every edge xy by a path x - w - y with a fresh w (edges in order).
inline Graph edge_subdivision(const Graph& g) {
  auto edges = g.labeled_edges();
  auto fresh = fresh_labels(g, edges.size());
  std::vector<LabeledEdge> out;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    out.emplace_back(edges[i].first, fresh[i]);
    out.emplace_back(fresh[i], edges[i].second);
  }
  return Graph(g.labels(), {}).with_added(fresh, out);
}

}  // namespace wtd
