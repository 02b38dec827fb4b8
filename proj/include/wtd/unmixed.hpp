#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wtd/domination.hpp"
#include "wtd/error.hpp"
#include "wtd/graph.hpp"

namespace wtd {

// The three equivalent forms of balancedness:
//   [0] no edge joins two vertices of equal height
//   [1] within a component, equal height implies equal color
//   [2] within a component, all leaves have one color
inline std::array<bool, 3> balanced_criteria(const Forest& f, const Coloring& c) {
  const Graph& g = f.graph();
  HeightMap h = heights(f);
  std::array<bool, 3> out{true, true, true};
  for (auto [u, v] : g.edges())
    if (h[u] == h[v]) out[0] = false;
  std::map<std::pair<std::size_t, int>, Color> seen_height;
  std::map<std::size_t, Color> seen_leaf;
  for (Vertex v = 0; v < g.size(); ++v) {
    auto key = std::make_pair(f.component_of(v), h[v]);
    auto [it, fresh] = seen_height.emplace(key, c[v]);
    if (!fresh && it->second != c[v]) out[1] = false;
    if (g.degree(v) == 1) {
      auto [jt, first] = seen_leaf.emplace(f.component_of(v), c[v]);
      if (!first && jt->second != c[v]) out[2] = false;
    }
  }
  return out;
}

// Balanced: no two adjacent vertices share a height. All three criteria are
// evaluated; a disagreement throws TheoremViolation.
inline bool is_balanced(const Forest& f, const Coloring& c) {
  auto crit = balanced_criteria(f, c);
  if (crit[0] != crit[1] || crit[0] != crit[2]) throw TheoremViolation("balanced criteria disagree");
  return crit[0];
}
inline bool is_balanced(const Forest& f) { return is_balanced(f, two_coloring(f)); }

// ---------------------------------------------------------------------------
// Interior graphs

struct InteriorGraphs {
  Forest blue;          // T minus N[blue supports]
  Forest red;           // T minus N[red supports]
  VertexSet blue_deleted;  // host indices removed for the blue side
  VertexSet red_deleted;
  Coloring coloring;    // host coloring used

  const Forest& side(Color c) const { return c == Color::blue ? blue : red; }
};

inline InteriorGraphs interior_graphs(const Tree& t, const Coloring& c) {
  const Graph& g = t.graph();
  VertexSet supports = support_vertices(g);
  auto closed = [&](const VertexSet& centers) {
    VertexSet out = centers;
    centers.for_each([&](Vertex v) { out |= g.neighbor_set(v); });
    return out;
  };
  InteriorGraphs ig;
  ig.coloring = c;
  ig.blue_deleted = closed(supports & c.blue());
  ig.red_deleted = closed(supports & c.red());
  ig.blue = Forest(g.induced(g.all() - ig.blue_deleted));
  ig.red = Forest(g.induced(g.all() - ig.red_deleted));
  for (const Forest* side : {&ig.blue, &ig.red})
    if (!is_balanced(*side)) throw TheoremViolation("an interior graph has an unbalanced component");
  return ig;
}
inline InteriorGraphs interior_graphs(const Tree& t) { return interior_graphs(t, two_coloring(t)); }

// ---------------------------------------------------------------------------
// Characterization

struct CharacterizationOptions {
  bool skip_condition3 = false;  // deliberately broken variant for mutation testing
};

struct ComponentCheck {
  std::string side;                 // "blue", "red", or "" for a direct check
  std::vector<std::string> vertices;
  int height = 0;
  bool height_ok = true;            // (1) height <= 3
  bool v2_ok = true;                // (2) every V_2 vertex has exactly one V_1 neighbor
  bool v1_ok = true;                // (3) every V_1 vertex has at most one V_2 neighbor
  std::optional<std::string> offending;  // first violating vertex, if any

  bool ok() const { return height_ok && v2_ok && v1_ok; }
};

struct UnmixedCertificate {
  bool unmixed = true;
  std::vector<ComponentCheck> components;
  // Two minimal TD-sets of different sizes, when one was searched for.
  std::optional<std::pair<VertexSet, VertexSet>> witness;
};

namespace detail {

inline ComponentCheck check_component(const Forest& f, const HeightMap& h, const VertexSet& comp,
                                      const CharacterizationOptions& opt) {
  const Graph& g = f.graph();
  ComponentCheck cc;
  cc.vertices = g.labels_of(comp);
  cc.height = h.height_of(comp);
  cc.height_ok = cc.height <= 3;
  if (!cc.height_ok) {
    comp.for_each([&](Vertex v) {
      if (!cc.offending && h[v] >= 4) cc.offending = g.label(v);
    });
  }
  comp.for_each([&](Vertex v) {
    std::size_t v1 = 0, v2 = 0;
    for (Vertex u : g.neighbors(v)) {
      if (h[u] == 1) ++v1;
      if (h[u] == 2) ++v2;
    }
    if (h[v] == 2 && v1 != 1) {
      if (cc.v2_ok && !cc.offending) cc.offending = g.label(v);
      cc.v2_ok = false;
    }
    if (h[v] == 1 && v2 > 1 && !opt.skip_condition3) {
      if (cc.v1_ok && !cc.offending) cc.offending = g.label(v);
      cc.v1_ok = false;
    }
  });
  return cc;
}

}  // namespace detail

// Checks conditions (1)-(3) on each component of a balanced forest.
inline UnmixedCertificate characterize_balanced_unmixed(const Forest& f, const CharacterizationOptions& opt = {}) {
  if (!is_balanced(f)) throw PreconditionError("characterize_balanced_unmixed: input is not balanced");
  HeightMap h = heights(f);
  UnmixedCertificate cert;
  for (const auto& comp : f.components()) {
    cert.components.push_back(detail::check_component(f, h, comp, opt));
    if (!cert.components.back().ok()) cert.unmixed = false;
  }
  return cert;
}

// A tree is unmixed iff every component of both interior graphs passes the
// balanced characterization. The single-vertex tree is unmixed (no TD-sets).
inline UnmixedCertificate is_unmixed_fast(const Tree& t, const CharacterizationOptions& opt = {}) {
  InteriorGraphs ig = interior_graphs(t);
  UnmixedCertificate cert;
  for (Color side : {Color::blue, Color::red}) {
    auto part = characterize_balanced_unmixed(ig.side(side), opt);
    for (auto& cc : part.components) {
      cc.side = to_string(side);
      cert.components.push_back(std::move(cc));
    }
    if (!part.unmixed) cert.unmixed = false;
  }
  return cert;
}

// Two minimal TD-sets of different sizes (smallest and largest, first in
// canonical order), or nothing when the tree is unmixed.
inline std::optional<std::pair<VertexSet, VertexSet>> mixedness_witness(const Graph& g,
                                                                        std::size_t max_sets = kDefaultMaxSets) {
  auto fam = minimal_td_sets(g, max_sets);
  if (fam.sizes().size() <= 1) return std::nullopt;
  const VertexSet* small = &fam[0];
  const VertexSet* large = &fam[0];
  for (const auto& s : fam) {
    if (s.size() < small->size()) small = &s;
    if (s.size() > large->size()) large = &s;
  }
  return std::make_pair(*small, *large);
}

// RD-sets dominate the red vertices, BD-sets the blue ones.
inline MinimalSetFamily minimal_rd_sets(const Forest& f, const Coloring& c, std::size_t max_sets = kDefaultMaxSets) {
  return minimal_s_td_sets(f.graph(), c.red(), max_sets);
}
inline MinimalSetFamily minimal_bd_sets(const Forest& f, const Coloring& c, std::size_t max_sets = kDefaultMaxSets) {
  return minimal_s_td_sets(f.graph(), c.blue(), max_sets);
}

}  // namespace wtd
