#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wtd/error.hpp"
#include "wtd/graph.hpp"
#include "wtd/vertex_set.hpp"

namespace wtd {

inline constexpr std::size_t kDefaultMaxSets = std::size_t{1} << 20;

// N(S): union of open neighborhoods.
inline VertexSet open_neighborhood(const Graph& g, const VertexSet& s) {
  VertexSet out(g.size());
  s.for_each([&](Vertex v) { out |= g.neighbor_set(v); });
  return out;
}

// D is an S-TD-set iff D meets N(v) for every v in S.
inline bool is_s_td_set(const Graph& g, const VertexSet& d, const VertexSet& s) {
  bool ok = true;
  s.for_each([&](Vertex v) {
    if (ok && !g.neighbor_set(v).intersects(d)) ok = false;
  });
  return ok;
}
inline bool is_td_set(const Graph& g, const VertexSet& d) { return is_s_td_set(g, d, g.all()); }

struct DominationSelector {
  // (v, selected private neighbor), ascending in v.
  std::vector<std::pair<Vertex, Vertex>> pairs;

  std::optional<Vertex> operator()(Vertex v) const {
    for (auto [a, b] : pairs)
      if (a == v) return b;
    return std::nullopt;
  }
};

// Smallest u in N(v) whose neighborhood meets D only in v.
inline std::optional<Vertex> private_neighbor(const Graph& g, const VertexSet& d, Vertex v) {
  for (Vertex u : g.neighbors(v)) {
    const VertexSet& nu = g.neighbor_set(u);
    if (nu.intersection_size(d) == 1) return u;  // v is in N(u) and in D
  }
  return std::nullopt;
}

// Returns a selector iff D is minimal (no proper subset has the same open
// neighborhood).
inline std::optional<DominationSelector> domination_selector(const Graph& g, const VertexSet& d) {
  DominationSelector sel;
  bool ok = true;
  d.for_each([&](Vertex v) {
    if (!ok) return;
    if (auto u = private_neighbor(g, d, v))
      sel.pairs.emplace_back(v, *u);
    else
      ok = false;
  });
  if (!ok) return std::nullopt;
  return sel;
}

inline bool is_minimal_set(const Graph& g, const VertexSet& d) { return domination_selector(g, d).has_value(); }

// ---------------------------------------------------------------------------
// Hypergraphs and transversals

struct Hypergraph {
  std::size_t universe = 0;
  std::vector<VertexSet> edges;
};

// {N(v) : v in S}, deduplicated. witnesses[i] lists the v in S with N(v) = edges[i].
struct NeighborhoodHypergraph : Hypergraph {
  VertexSet target;
  std::vector<std::vector<Vertex>> witnesses;
};

inline NeighborhoodHypergraph neighborhood_hypergraph(const Graph& g, const VertexSet& s) {
  NeighborhoodHypergraph h;
  h.universe = g.size();
  h.target = s;
  s.for_each([&](Vertex v) {
    const VertexSet& nv = g.neighbor_set(v);
    auto it = std::find(h.edges.begin(), h.edges.end(), nv);
    if (it == h.edges.end()) {
      h.edges.push_back(nv);
      h.witnesses.push_back({v});
    } else {
      h.witnesses[static_cast<std::size_t>(it - h.edges.begin())].push_back(v);
    }
  });
  return h;
}

// Drops duplicate edges and edges that contain another edge. Both have the
// same minimal transversals.
inline std::vector<VertexSet> minimal_edges(std::vector<VertexSet> edges) {
  sort_canonical(edges);
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  std::vector<VertexSet> out;
  for (const auto& e : edges) {
    bool redundant = false;
    for (const auto& f : out)
      if (f.is_subset_of(e)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(e);
  }
  return out;
}

// All inclusion-minimal hitting sets, canonically sorted.
//
// Berge multiplication, edges smallest first. When X misses the new edge E,
// X + e is kept only if every x in X still has a private processed edge (one
// meeting X + e in x alone); E is automatically private for e. This keeps the
// family minimal at every step and never produces duplicates.
inline std::vector<VertexSet> minimal_transversals(const Hypergraph& h, std::size_t max_sets = kDefaultMaxSets) {
  for (const auto& e : h.edges)
    if (e.empty()) return {};
  std::vector<VertexSet> edges = minimal_edges(h.edges);
  std::vector<VertexSet> family{VertexSet(h.universe)};
  for (std::size_t j = 0; j < edges.size(); ++j) {
    const VertexSet& e = edges[j];
    std::vector<VertexSet> next;
    next.reserve(family.size());
    for (const auto& x : family) {
      if (x.intersects(e)) {
        next.push_back(x);
        continue;
      }
      e.for_each([&](Vertex add) {
        VertexSet y = x;
        y.insert(add);
        bool minimal = true;
        x.for_each([&](Vertex keep) {
          if (!minimal) return;
          bool has_private = false;
          for (std::size_t k = 0; k < j && !has_private; ++k) {
            const VertexSet& f = edges[k];
            if (f.contains(keep) && !f.contains(add) && f.intersection_size(y) == 1) has_private = true;
          }
          if (!has_private) minimal = false;
        });
        if (minimal) next.push_back(std::move(y));
      });
      if (next.size() > max_sets)
        throw CapExceeded("minimal transversal family exceeds " + std::to_string(max_sets) + " sets");
    }
    family = std::move(next);
  }
  sort_canonical(family);
  return family;
}

struct MinimalSetFamily {
  VertexSet target;
  std::vector<VertexSet> sets;

  std::size_t size() const { return sets.size(); }
  bool empty() const { return sets.empty(); }
  auto begin() const { return sets.begin(); }
  auto end() const { return sets.end(); }
  const VertexSet& operator[](std::size_t i) const { return sets[i]; }

  // Distinct cardinalities, ascending.
  std::vector<std::size_t> sizes() const {
    std::vector<std::size_t> out;
    for (const auto& s : sets) out.push_back(s.size());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
};

// An isolated vertex in S gives the empty family.
inline MinimalSetFamily minimal_s_td_sets(const Graph& g, const VertexSet& s, std::size_t max_sets = kDefaultMaxSets) {
  return MinimalSetFamily{s, minimal_transversals(neighborhood_hypergraph(g, s), max_sets)};
}

inline MinimalSetFamily minimal_td_sets(const Graph& g, std::size_t max_sets = kDefaultMaxSets) {
  return minimal_s_td_sets(g, g.all(), max_sets);
}

// All minimal TD-sets have one size (vacuously true for an empty family).
inline bool is_unmixed_bruteforce(const Graph& g, std::size_t max_sets = kDefaultMaxSets) {
  return minimal_td_sets(g, max_sets).sizes().size() <= 1;
}

}  // namespace wtd
