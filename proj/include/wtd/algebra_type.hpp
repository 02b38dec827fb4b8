#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wtd/domination.hpp"
#include "wtd/error.hpp"
#include "wtd/graph.hpp"
#include "wtd/ideal.hpp"
#include "wtd/unmixed.hpp"

namespace wtd {

inline constexpr std::uint64_t kDefaultMaxStandardMonomials = 10'000'000;

// Quotient of the odd open neighborhood ideal of an unmixed balanced tree by
// the linear forms identifying variables, kept as a substitution map.
//   height 0: no variables left, ideal <0> (the quotient is the field)
//   height 1: every leaf -> l, ideal <l^n0>
//   height 3: leaves of s_i and its height-2 neighbor -> u_i, ideal
//             <u_i^|N(s_i)|> + <substituted X_N(r)> over r in V_3
struct ArtinianReduction {
  int height = 0;
  std::vector<std::string> variables;               // u1..up in support label order, or l
  std::map<std::string, std::string> substitution;  // V_even label -> variable
  std::vector<std::string> supports;                // s_i, parallel to variables (height 3)
  std::vector<std::string> tops;                    // V_3 labels (height 3)
  MonomialIdeal ideal;                              // the reduced ideal
  MonomialIdeal pure_powers;                        // U
};

inline ArtinianReduction artinian_reduction(const Tree& t, const std::string& prefix = "") {
  if (!is_balanced(t)) throw PreconditionError("artinian_reduction: tree is not balanced");
  if (!characterize_balanced_unmixed(t).unmixed) throw PreconditionError("artinian_reduction: tree is mixed");
  const Graph& g = t.graph();
  HeightMap h = heights(t);
  ArtinianReduction a;
  a.height = h.height();
  if (a.height == 0) {
    a.substitution[g.label(0)] = "";
    a.ideal = MonomialIdeal::zero({});
    a.pure_powers = a.ideal;
    return a;
  }
  if (a.height == 1) {
    std::string l = prefix + "l";
    a.variables = {l};
    unsigned n0 = 0;
    h.level(0).for_each([&](Vertex v) {
      a.substitution[g.label(v)] = l;
      ++n0;
    });
    a.ideal = MonomialIdeal({l}, {Monomial::power(l, n0)});
    a.pure_powers = a.ideal;
    return a;
  }
  // height 3
  std::vector<Monomial> gens, pure;
  std::size_t i = 0;
  h.level(1).for_each([&](Vertex s) {
    std::string u = prefix + "u" + std::to_string(++i);
    a.variables.push_back(u);
    a.supports.push_back(g.label(s));
    for (Vertex x : g.neighbors(s)) a.substitution[g.label(x)] = u;
    pure.push_back(Monomial::power(u, static_cast<unsigned>(g.degree(s))));
  });
  gens = pure;
  h.level(3).for_each([&](Vertex r) {
    a.tops.push_back(g.label(r));
    Monomial m;
    for (Vertex x : g.neighbors(r)) m = m * Monomial::power(a.substitution.at(g.label(x)), 1);
    gens.push_back(m);
  });
  a.ideal = MonomialIdeal(a.variables, gens);
  a.pure_powers = MonomialIdeal(a.variables, pure);
  return a;
}

// Concatenated reduction of a forest; variables of component k carry the
// prefix "c{k}_" when there is more than one component.
inline ArtinianReduction artinian_reduction(const Forest& f) {
  auto comps = component_trees(f);
  if (comps.size() == 1) return artinian_reduction(comps[0]);
  ArtinianReduction out;
  std::vector<Monomial> gens, pure;
  for (std::size_t k = 0; k < comps.size(); ++k) {
    ArtinianReduction a = artinian_reduction(comps[k], "c" + std::to_string(k) + "_");
    out.height = std::max(out.height, a.height);
    out.variables.insert(out.variables.end(), a.variables.begin(), a.variables.end());
    out.substitution.insert(a.substitution.begin(), a.substitution.end());
    out.supports.insert(out.supports.end(), a.supports.begin(), a.supports.end());
    out.tops.insert(out.tops.end(), a.tops.begin(), a.tops.end());
    gens.insert(gens.end(), a.ideal.generators().begin(), a.ideal.generators().end());
    pure.insert(pure.end(), a.pure_powers.generators().begin(), a.pure_powers.generators().end());
  }
  out.ideal = MonomialIdeal(out.variables, gens);
  out.pure_powers = MonomialIdeal(out.variables, pure);
  return out;
}

// Number of standard monomials m (m not in I) with x*m in I for every
// variable x. Walks the order ideal of standard monomials depth first.
inline std::uint64_t socle_dimension(const MonomialIdeal& ideal,
                                     std::uint64_t max_standard = kDefaultMaxStandardMonomials) {
  const auto& vars = ideal.ambient();
  const std::size_t n = vars.size();
  if (ideal.is_unit()) return 0;
  std::vector<std::vector<unsigned>> gens;
  std::vector<unsigned> bound(n, 0);
  for (const auto& m : ideal.generators()) {
    std::vector<unsigned> e(n);
    std::size_t used = 0, last = 0;
    for (std::size_t i = 0; i < n; ++i) {
      e[i] = m.exponent(vars[i]);
      if (e[i]) ++used, last = i;
    }
    if (used == 1) bound[last] = bound[last] ? std::min(bound[last], e[last]) : e[last];
    gens.push_back(std::move(e));
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!bound[i]) throw PreconditionError("socle_dimension: no pure power of '" + vars[i] + "' in the ideal");
  auto in_ideal = [&](const std::vector<unsigned>& e) {
    for (const auto& g : gens) {
      bool div = true;
      for (std::size_t i = 0; i < n && div; ++i) div = g[i] <= e[i];
      if (div) return true;
    }
    return false;
  };
  std::vector<unsigned> e(n, 0);
  std::uint64_t visited = 0, socle = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      if (++visited > max_standard) throw CapExceeded("socle_dimension: more than " + std::to_string(max_standard) + " standard monomials");
      bool top = true;
      for (std::size_t x = 0; x < n && top; ++x) {
        ++e[x];
        top = in_ideal(e);
        --e[x];
      }
      socle += top;
      return;
    }
    for (e[i] = 0; e[i] < bound[i]; ++e[i]) {
      // Raising e[i] only adds multiples; once in I, stop.
      if (in_ideal(e)) break;
      rec(i + 1);
    }
    e[i] = 0;
  };
  rec(0);
  return socle;
}

inline std::uint64_t socle_dimension(const ArtinianReduction& a,
                                     std::uint64_t max_standard = kDefaultMaxStandardMonomials) {
  return socle_dimension(a.ideal, max_standard);
}

// The reduced ideal as an intersection of (<D> + U) over the minimal
// transversals D of the substituted top neighborhoods; re-expanded and
// checked against the ideal itself.
inline PrimeDecomposition parametric_decomposition(const ArtinianReduction& a, bool verify = true) {
  PrimeDecomposition out;
  out.ambient = a.ideal.ambient();
  out.shared = a.pure_powers;
  const auto& vars = out.ambient;
  Hypergraph h{vars.size(), {}};
  for (const auto& g : a.ideal.generators()) {
    if (g.support().size() == 1 && a.pure_powers.contains(g)) continue;
    h.edges.push_back(VertexSet(vars.size()));
    for (const auto& v : g.support())
      h.edges.back().insert(static_cast<Vertex>(std::lower_bound(vars.begin(), vars.end(), v) - vars.begin()));
  }
  for (const auto& t : minimal_transversals(h)) {
    std::vector<std::string> comp;
    t.for_each([&](Vertex v) { comp.push_back(vars[v]); });
    out.components.push_back(std::move(comp));
  }
  if (verify && !equals(out.to_ideal(), a.ideal))
    throw TheoremViolation("parametric decomposition does not re-expand to the reduced ideal");
  return out;
}

// Minimal S-TD-sets with S = V_3 of a balanced forest.
inline MinimalSetFamily minimal_v3_td_sets(const Forest& f, std::size_t max_sets = kDefaultMaxSets) {
  if (!is_balanced(f)) throw PreconditionError("minimal_v3_td_sets: forest is not balanced");
  return minimal_s_td_sets(f.graph(), heights(f).level(3), max_sets);
}

struct InteriorType {
  std::size_t m = 1;                                // number of minimal V_3-TD-sets
  std::vector<std::vector<std::string>> v3_sets;    // as labels
  std::vector<std::uint64_t> component_socles;      // per component, in component order
  int depth = 0;
};

struct TypeReport {
  std::uint64_t type = 0;
  InteriorType blue, red;
  std::uint64_t socle = 0;  // product of the component socle dimensions
  int depth = 0;
  int dim = 0;
};

namespace detail {

inline InteriorType interior_type(const Forest& side, std::size_t max_sets) {
  InteriorType out;
  const Graph& g = side.graph();
  auto fam = minimal_v3_td_sets(side, max_sets);
  out.m = fam.size();
  for (const auto& s : fam) out.v3_sets.push_back(g.labels_of(s));
  for (const Tree& comp : component_trees(side)) {
    HeightMap h = heights(comp);
    out.component_socles.push_back(socle_dimension(artinian_reduction(comp)));
    switch (h.height()) {
      case 0: out.depth += 1; break;
      case 1: out.depth += static_cast<int>(h.level(0).size()) - 1; break;
      default: out.depth += static_cast<int>(h.level(0).size()); break;
    }
  }
  return out;
}

}  // namespace detail

// Type, depth and dimension of the quotient by N(T) for an unmixed tree.
// The type counts minimal V_3-TD-sets on the two interior graphs; the socle
// dimensions of the per-component reductions must multiply to the same number.
inline TypeReport cm_type(const Tree& t, std::size_t max_sets = kDefaultMaxSets) {
  if (t.size() == 1) throw PreconditionError("cm_type: a single vertex has no total dominating set");
  if (!is_unmixed_fast(t).unmixed) throw PreconditionError("cm_type: tree is mixed");
  InteriorGraphs ig = interior_graphs(t);
  TypeReport r;
  r.blue = detail::interior_type(ig.blue, max_sets);
  r.red = detail::interior_type(ig.red, max_sets);
  r.type = static_cast<std::uint64_t>(r.blue.m) * r.red.m;
  r.socle = 1;
  for (const auto* side : {&r.blue, &r.red})
    for (auto s : side->component_socles) r.socle *= s;
  if (r.socle != r.type)
    throw TheoremViolation("type " + std::to_string(r.type) + " disagrees with socle dimension " + std::to_string(r.socle));
  r.depth = r.blue.depth + r.red.depth;
  // Any minimal TD-set has the same size; shrink V greedily to one.
  const Graph& g = t.graph();
  VertexSet d = g.all();
  for (Vertex v = 0; v < g.size(); ++v) {
    d.erase(v);
    if (!is_td_set(g, d)) d.insert(v);
  }
  r.dim = static_cast<int>(t.size() - d.size());
  if (r.depth != r.dim) throw TheoremViolation("depth and dimension differ on an unmixed tree");
  return r;
}

}  // namespace wtd
