#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "wtd/domination.hpp"
#include "wtd/error.hpp"
#include "wtd/graph.hpp"
#include "wtd/ideal.hpp"
#include "wtd/unmixed.hpp"

namespace wtd {

// Simplicial complex given by its facets over a sorted ground set of labels.
// No facets at all is the void complex; a single empty facet is <{}>.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  SimplicialComplex(std::vector<std::string> ground, std::vector<VertexSet> facets) : ground_(std::move(ground)) {
    if (!std::is_sorted(ground_.begin(), ground_.end()) ||
        std::adjacent_find(ground_.begin(), ground_.end()) != ground_.end())
      throw PreconditionError("ground set must be sorted and duplicate free");
    for (const auto& f : facets)
      if (f.universe() != ground_.size()) throw PreconditionError("facet over the wrong ground set");
    // Keep the inclusion-maximal sets only.
    std::sort(facets.begin(), facets.end(), [](const VertexSet& a, const VertexSet& b) { return canonical_less(b, a); });
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    for (auto& f : facets) {
      bool covered = std::any_of(facets_.begin(), facets_.end(), [&](const VertexSet& g) { return f.is_subset_of(g); });
      if (!covered) facets_.push_back(std::move(f));
    }
    sort_canonical(facets_);
  }

  static SimplicialComplex from_labels(std::vector<std::string> ground, const std::vector<std::vector<std::string>>& facets) {
    std::sort(ground.begin(), ground.end());
    ground.erase(std::unique(ground.begin(), ground.end()), ground.end());
    std::vector<VertexSet> fs;
    for (const auto& f : facets) fs.push_back(set_in(ground, f));
    return SimplicialComplex(std::move(ground), std::move(fs));
  }

  // Labels -> VertexSet over a sorted ground.
  template <typename Range>
  static VertexSet set_in(const std::vector<std::string>& ground, const Range& labels) {
    VertexSet s(ground.size());
    for (const auto& l : labels) {
      auto it = std::lower_bound(ground.begin(), ground.end(), l);
      if (it == ground.end() || *it != l) throw PreconditionError("label '" + std::string(l) + "' not in the ground set");
      s.insert(static_cast<Vertex>(it - ground.begin()));
    }
    return s;
  }

  const std::vector<std::string>& ground() const { return ground_; }
  const std::vector<VertexSet>& facets() const { return facets_; }
  std::size_t facet_count() const { return facets_.size(); }
  bool is_void() const { return facets_.empty(); }

  // max |F| - 1; nullopt for the void complex.
  std::optional<int> dimension() const {
    if (facets_.empty()) return std::nullopt;
    std::size_t m = 0;
    for (const auto& f : facets_) m = std::max(m, f.size());
    return static_cast<int>(m) - 1;
  }
  bool is_pure() const {
    return std::all_of(facets_.begin(), facets_.end(), [&](const VertexSet& f) { return f.size() == facets_[0].size(); });
  }
  bool contains_face(const VertexSet& s) const {
    return std::any_of(facets_.begin(), facets_.end(), [&](const VertexSet& f) { return s.is_subset_of(f); });
  }

  std::vector<std::string> labels_of(const VertexSet& s) const {
    std::vector<std::string> out;
    s.for_each([&](Vertex v) { out.push_back(ground_[v]); });
    return out;
  }
  // Facets as sorted label lists, sorted.
  std::vector<std::vector<std::string>> facet_labels() const {
    std::vector<std::vector<std::string>> out;
    for (const auto& f : facets_) out.push_back(labels_of(f));
    std::sort(out.begin(), out.end());
    return out;
  }

  // "ground: a b c" then one facet per line ("{}" for the empty facet).
  std::string to_string() const {
    std::string out = "ground:";
    for (const auto& g : ground_) out += " " + g;
    out += "\n";
    for (const auto& f : facet_labels()) {
      std::string line;
      for (const auto& v : f) line += (line.empty() ? "" : " ") + v;
      out += (line.empty() ? "{}" : line) + "\n";
    }
    return out;
  }

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  std::vector<std::string> ground_;
  std::vector<VertexSet> facets_;
};

// Facet sets agree as label sets (ground sets may differ).
inline bool same_facets(const SimplicialComplex& a, const SimplicialComplex& b) {
  return a.facet_labels() == b.facet_labels();
}

// Facets are the complements of the minimal TD-sets.
inline SimplicialComplex stable_complex(const Graph& g, std::size_t max_sets = kDefaultMaxSets) {
  std::vector<VertexSet> facets;
  for (const auto& d : minimal_td_sets(g, max_sets)) facets.push_back(g.all() - d);
  return SimplicialComplex(g.labels(), std::move(facets));
}

// Over V_even: complements of the minimal odd-TD-sets.
inline SimplicialComplex even_stable_complex(const Forest& f, std::size_t max_sets = kDefaultMaxSets) {
  if (!is_balanced(f)) throw PreconditionError("even_stable_complex: input is not balanced");
  const Graph& g = f.graph();
  HeightMap h = heights(f);
  VertexSet even = h.even();
  std::vector<std::string> ground = g.labels_of(even);
  std::vector<VertexSet> facets;
  for (const auto& d : minimal_s_td_sets(g, h.odd(), max_sets)) facets.push_back(SimplicialComplex::set_in(ground, g.labels_of(even - d)));
  return SimplicialComplex(std::move(ground), std::move(facets));
}

inline SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
  std::vector<std::string> ground = a.ground();
  for (const auto& v : b.ground()) {
    if (std::binary_search(a.ground().begin(), a.ground().end(), v))
      throw PreconditionError("join: ground sets overlap at '" + v + "'");
    ground.push_back(v);
  }
  std::sort(ground.begin(), ground.end());
  std::vector<VertexSet> fa, fb, facets;
  for (const auto& f : a.facets()) fa.push_back(SimplicialComplex::set_in(ground, a.labels_of(f)));
  for (const auto& f : b.facets()) fb.push_back(SimplicialComplex::set_in(ground, b.labels_of(f)));
  for (const auto& x : fa)
    for (const auto& y : fb) facets.push_back(x | y);
  return SimplicialComplex(std::move(ground), std::move(facets));
}

// ---------------------------------------------------------------------------
// Stanley-Reisner correspondence

// Minimal non-faces: the minimal transversals of the facet complements.
inline MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& d, std::size_t max_sets = kDefaultMaxSets) {
  Hypergraph h{d.ground().size(), {}};
  const VertexSet all = VertexSet::full(d.ground().size());
  for (const auto& f : d.facets()) h.edges.push_back(all - f);
  std::vector<Monomial> gens;
  for (const auto& t : minimal_transversals(h, max_sets)) gens.push_back(Monomial::product(d.labels_of(t)));
  return MonomialIdeal(d.ground(), std::move(gens));
}

// Faces are the squarefree monomials outside I; facets are the complements of
// the minimal transversals of the generator supports.
inline SimplicialComplex stanley_reisner_complex(const MonomialIdeal& i, std::size_t max_sets = kDefaultMaxSets) {
  if (!i.is_squarefree()) throw PreconditionError("stanley_reisner_complex: ideal is not square-free");
  const auto& ground = i.ambient();
  Hypergraph h{ground.size(), {}};
  for (const auto& g : i.generators()) h.edges.push_back(SimplicialComplex::set_in(ground, g.support()));
  const VertexSet all = VertexSet::full(ground.size());
  std::vector<VertexSet> facets;
  for (const auto& t : minimal_transversals(h, max_sets)) facets.push_back(all - t);
  return SimplicialComplex(ground, std::move(facets));
}

// ---------------------------------------------------------------------------
// Shellings

// For each position j, the vertices v with F_j - F_k = {v} for some earlier k,
// with the smallest such k.
struct ShellingStep {
  std::vector<std::pair<Vertex, std::size_t>> restriction;  // (v, k)
};

struct ShellingCheck {
  bool pure = false;
  bool condition_ii = false;   // every earlier F_i misses some v of W_j
  bool reformulation = false;  // F_i n F_j lies in some codimension-one F_k n F_j, k < j
  std::optional<std::pair<std::size_t, std::size_t>> failure;  // first failing (i, j), by j then i
  std::vector<ShellingStep> witnesses;                          // filled on request

  bool valid() const { return pure && condition_ii && reformulation; }
};

namespace detail {

struct FacetIndex {
  std::unordered_map<VertexSet, std::size_t, VertexSetHash> position;
};

// W_j from earlier facets differing in exactly one vertex, found by hashing
// F_j - v + w over the whole ground set.
inline std::vector<std::pair<Vertex, std::size_t>> restriction_of(const std::vector<VertexSet>& order, std::size_t j,
                                                                 const FacetIndex& index) {
  const VertexSet& fj = order[j];
  const VertexSet outside = fj.complement();
  std::vector<std::pair<Vertex, std::size_t>> out;
  fj.for_each([&](Vertex v) {
    std::size_t best = j;
    outside.for_each([&](Vertex w) {
      VertexSet g = fj;
      g.erase(v);
      g.insert(w);
      auto it = index.position.find(g);
      if (it != index.position.end() && it->second < best) best = it->second;
    });
    if (best < j) out.emplace_back(v, best);
  });
  return out;
}

template <typename F>
void parallel_for(std::size_t n, F&& body) {
  std::size_t threads = std::max<std::size_t>(1, std::thread::hardware_concurrency());
  if (n < 512 || threads == 1) {
    for (std::size_t j = 0; j < n; ++j) body(j);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (std::size_t j; (j = next.fetch_add(64)) < n;)
        for (std::size_t k = j; k < std::min(n, j + 64); ++k) body(k);
    });
  for (auto& th : pool) th.join();
}

}  // namespace detail

// Checks that `order` (a permutation of the facets of d) is a shelling, both
// by the restriction-set form and by the codimension-one reformulation.
inline ShellingCheck verify_shelling(const SimplicialComplex& d, const std::vector<VertexSet>& order,
                                     bool collect_witnesses = false) {
  ShellingCheck out;
  {
    std::vector<VertexSet> a = order, b = d.facets();
    sort_canonical(a);
    if (a != b) throw PreconditionError("verify_shelling: order is not a permutation of the facets");
  }
  out.pure = d.is_pure();
  if (!out.pure) return out;
  const std::size_t m = order.size();
  detail::FacetIndex index;
  for (std::size_t j = 0; j < m; ++j) index.position.emplace(order[j], j);
  const std::size_t dim_size = m ? order[0].size() : 0;

  std::vector<std::size_t> first_bad_ii(m, m), first_bad_ref(m, m);
  std::vector<ShellingStep> steps(collect_witnesses ? m : 0);
  detail::parallel_for(m, [&](std::size_t j) {
    const VertexSet& fj = order[j];
    auto restriction = detail::restriction_of(order, j, index);
    VertexSet w(fj.universe());
    for (auto [v, k] : restriction) w.insert(v);
    // (ii): every earlier F_i misses some vertex of W_j.
    for (std::size_t i = 0; i < j; ++i)
      if (w.is_subset_of(order[i])) {
        first_bad_ii[j] = i;
        break;
      }
    // Reformulation, literally: K_j = {k < j : |F_k n F_j| = |F_j| - 1}.
    std::vector<VertexSet> k_faces;
    for (std::size_t k = 0; k < j; ++k)
      if (order[k].intersection_size(fj) + 1 == dim_size) k_faces.push_back(order[k] & fj);
    for (std::size_t i = 0; i < j; ++i) {
      VertexSet meet = order[i] & fj;
      bool covered = std::any_of(k_faces.begin(), k_faces.end(), [&](const VertexSet& kf) { return meet.is_subset_of(kf); });
      if (!covered) {
        first_bad_ref[j] = i;
        break;
      }
    }
    if (collect_witnesses) steps[j].restriction = std::move(restriction);
  });
  out.condition_ii = true;
  out.reformulation = true;
  for (std::size_t j = 0; j < m; ++j) {
    bool bad_ii = first_bad_ii[j] < m, bad_ref = first_bad_ref[j] < m;
    if (bad_ii) out.condition_ii = false;
    if (bad_ref) out.reformulation = false;
    if ((bad_ii || bad_ref) && !out.failure)
      out.failure = std::make_pair(std::min(first_bad_ii[j], first_bad_ref[j]), j);
  }
  if (out.condition_ii != out.reformulation)
    throw TheoremViolation("shelling condition and its reformulation disagree");
  out.witnesses = std::move(steps);
  return out;
}

// Searches all facet orders (dynamic programming over subsets of facets).
// Appending F to a prefix is valid or not depending only on the prefix's set.
inline std::optional<std::vector<VertexSet>> brute_force_shellable(const SimplicialComplex& d,
                                                                   std::size_t max_facets = 12) {
  const auto& fs = d.facets();
  const std::size_t m = fs.size();
  if (m > max_facets) throw CapExceeded("brute_force_shellable: more than " + std::to_string(max_facets) + " facets");
  if (!d.is_pure()) return std::nullopt;
  if (m == 0) return std::vector<VertexSet>{};
  auto can_append = [&](std::uint32_t prefix, std::size_t j) {
    VertexSet w(fs[j].universe());
    for (std::size_t k = 0; k < m; ++k)
      if ((prefix >> k & 1U) && fs[j].difference_size(fs[k]) == 1) w |= fs[j] - fs[k];
    for (std::size_t i = 0; i < m; ++i)
      if ((prefix >> i & 1U) && w.is_subset_of(fs[i])) return false;
    return true;
  };
  const std::uint32_t full = (1U << m) - 1;
  std::vector<int> parent(std::size_t{1} << m, -2);  // -2 unreachable, else last facet added
  parent[0] = -1;
  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    if (parent[mask] == -2) continue;
    for (std::size_t j = 0; j < m; ++j)
      if (!(mask >> j & 1U) && parent[mask | (1U << j)] == -2 && can_append(mask, j))
        parent[mask | (1U << j)] = static_cast<int>(j);
  }
  if (parent[full] == -2) return std::nullopt;
  std::vector<VertexSet> order;
  for (std::uint32_t mask = full; mask != 0; mask &= ~(1U << parent[mask])) order.push_back(fs[parent[mask]]);
  std::reverse(order.begin(), order.end());
  return order;
}

// ---------------------------------------------------------------------------
// Facet vectors and explicit shelling orders

using FacetVector = std::vector<int>;

inline int ones(const FacetVector& a) { return static_cast<int>(std::count(a.begin(), a.end(), 1)); }

// More 1-entries first, then lexicographically smaller first.
inline bool facet_vector_less(const FacetVector& a, const FacetVector& b) {
  int la = ones(a), lb = ones(b);
  if (la != lb) return la > lb;
  return a < b;
}

// Vertex labeling used by facet vectors: supports s_1..s_p by label; for each,
// u_{i,1} is its height-2 neighbor and u_{i,2..k_i} its leaves by label.
struct SupportLabeling {
  std::vector<Vertex> supports;
  std::vector<std::vector<Vertex>> u;  // u[i][a-1]
};

inline SupportLabeling support_labeling(const Tree& t) {
  const Graph& g = t.graph();
  HeightMap h = heights(t);
  SupportLabeling lab;
  h.level(1).for_each([&](Vertex s) {
    std::vector<Vertex> row;
    for (Vertex u : g.neighbors(s))
      if (h[u] == 2) row.push_back(u);
    if (row.size() != 1) throw PreconditionError("support '" + g.label(s) + "' does not have exactly one height-2 neighbor");
    for (Vertex u : g.neighbors(s))
      if (h[u] == 0) row.push_back(u);
    lab.supports.push_back(s);
    lab.u.push_back(std::move(row));
  });
  return lab;
}

struct ShellingOrder {
  std::vector<std::string> ground;
  std::vector<VertexSet> facets;     // in shelling order
  std::vector<FacetVector> vectors;  // parallel to facets when known

  SimplicialComplex complex() const { return SimplicialComplex(ground, facets); }
  std::vector<std::vector<std::string>> facet_labels() const {
    std::vector<std::vector<std::string>> out;
    for (const auto& f : facets) {
      std::vector<std::string> row;
      f.for_each([&](Vertex v) { row.push_back(ground[v]); });
      out.push_back(std::move(row));
    }
    return out;
  }
};

inline ShellingCheck verify_shelling(const ShellingOrder& s, bool collect_witnesses = false) {
  return verify_shelling(s.complex(), s.facets, collect_witnesses);
}

// Facets of S_even for an unmixed balanced height-3 tree, in the <_T order.
inline ShellingOrder shelling_order(const Tree& t, std::size_t max_facets = kDefaultMaxSets) {
  if (!is_balanced(t) || heights(t).height() != 3 || !characterize_balanced_unmixed(t).unmixed)
    throw PreconditionError("shelling_order: needs an unmixed balanced tree of height 3");
  const Graph& g = t.graph();
  HeightMap h = heights(t);
  SupportLabeling lab = support_labeling(t);
  const VertexSet even = h.even();
  const VertexSet v3 = h.level(3);
  ShellingOrder out;
  out.ground = g.labels_of(even);
  const std::size_t p = lab.supports.size();

  std::vector<FacetVector> vectors;
  FacetVector a(p, 1);
  VertexSet chosen(g.size());
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == p) {
      if (v3.is_subset_of(open_neighborhood(g, chosen))) {
        vectors.push_back(a);
        if (vectors.size() > max_facets) throw CapExceeded("shelling_order: too many facets");
      }
      return;
    }
    for (std::size_t k = 0; k < lab.u[i].size(); ++k) {
      a[i] = static_cast<int>(k + 1);
      chosen.insert(lab.u[i][k]);
      rec(i + 1);
      chosen.erase(lab.u[i][k]);
    }
  };
  rec(0);
  std::sort(vectors.begin(), vectors.end(), facet_vector_less);
  for (const auto& v : vectors) {
    VertexSet d(g.size());
    for (std::size_t i = 0; i < p; ++i) d.insert(lab.u[i][static_cast<std::size_t>(v[i] - 1)]);
    out.facets.push_back(SimplicialComplex::set_in(out.ground, g.labels_of(even - d)));
  }
  out.vectors = std::move(vectors);
  return out;
}

namespace detail {

// Lexicographic product: earlier parts vary slowest.
inline ShellingOrder product_order(const std::vector<ShellingOrder>& parts) {
  ShellingOrder out;
  for (const auto& p : parts) out.ground.insert(out.ground.end(), p.ground.begin(), p.ground.end());
  std::sort(out.ground.begin(), out.ground.end());
  if (std::adjacent_find(out.ground.begin(), out.ground.end()) != out.ground.end())
    throw PreconditionError("product order: ground sets overlap");
  std::vector<std::vector<VertexSet>> lifted;
  for (const auto& p : parts) {
    std::vector<VertexSet> fs;
    for (const auto& row : p.facet_labels()) fs.push_back(SimplicialComplex::set_in(out.ground, row));
    lifted.push_back(std::move(fs));
  }
  std::vector<VertexSet> acc{VertexSet(out.ground.size())};
  for (const auto& fs : lifted) {
    std::vector<VertexSet> next;
    next.reserve(acc.size() * fs.size());
    for (const auto& a : acc)
      for (const auto& f : fs) next.push_back(a | f);
    acc = std::move(next);
  }
  out.facets = std::move(acc);
  return out;
}

}  // namespace detail

// Shelling of S_even for an unmixed balanced forest: per component, the
// single facet (height 0), the (k-1)-subsets of the leaves in canonical order
// (height 1), or the <_T order (height 3); components combined as a
// lexicographic product in component order.
inline ShellingOrder forest_shelling(const Forest& f, std::size_t max_facets = kDefaultMaxSets) {
  if (!characterize_balanced_unmixed(f).unmixed) throw PreconditionError("forest_shelling: forest is not unmixed");
  std::vector<ShellingOrder> parts;
  for (const Tree& comp : component_trees(f)) {
    int height = heights(comp).height();
    if (height == 3) {
      parts.push_back(shelling_order(comp, max_facets));
      continue;
    }
    SimplicialComplex c = even_stable_complex(comp);
    ShellingOrder part;
    part.ground = c.ground();
    part.facets = c.facets();  // canonical order is lexicographic on equal-size sets
    parts.push_back(std::move(part));
  }
  if (parts.size() == 1) return parts[0];
  return detail::product_order(parts);
}

// Shelling of S(T) for an unmixed tree: blue interior order times red
// interior order, expressed over V(T).
inline ShellingOrder stable_shelling(const Tree& t, std::size_t max_facets = kDefaultMaxSets) {
  if (!is_unmixed_fast(t).unmixed) throw PreconditionError("stable_shelling: tree is mixed");
  const Graph& g = t.graph();
  if (g.size() == 1) return ShellingOrder{g.labels(), {}, {}};  // no TD-set: the void complex
  InteriorGraphs ig = interior_graphs(t);
  ShellingOrder prod = detail::product_order({forest_shelling(ig.blue, max_facets), forest_shelling(ig.red, max_facets)});
  ShellingOrder out;
  out.ground = g.labels();
  for (const auto& f : prod.facets) {
    std::vector<std::string> row;
    f.for_each([&](Vertex v) { row.push_back(prod.ground[v]); });
    out.facets.push_back(SimplicialComplex::set_in(out.ground, row));
  }
  return out;
}

}  // namespace wtd
