#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wtd/domination.hpp"
#include "wtd/error.hpp"
#include "wtd/graph.hpp"
#include "wtd/vertex_set.hpp"

namespace wtd {

// Sparse monomial: variable name -> positive exponent. The empty monomial is 1.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::map<std::string, unsigned> exps) : exp_(std::move(exps)) {
    std::erase_if(exp_, [](const auto& kv) { return kv.second == 0; });
  }
  // Square-free product of the given variables.
  template <typename Range>
  static Monomial product(const Range& vars) {
    Monomial m;
    for (const auto& v : vars) m.exp_[std::string(v)] = 1;
    return m;
  }
  static Monomial power(const std::string& var, unsigned k) { return Monomial({{var, k}}); }

  const std::map<std::string, unsigned>& exponents() const { return exp_; }
  unsigned exponent(const std::string& var) const {
    auto it = exp_.find(var);
    return it == exp_.end() ? 0 : it->second;
  }
  unsigned degree() const {
    unsigned d = 0;
    for (const auto& [v, e] : exp_) d += e;
    return d;
  }
  bool is_one() const { return exp_.empty(); }
  bool is_squarefree() const {
    return std::all_of(exp_.begin(), exp_.end(), [](const auto& kv) { return kv.second == 1; });
  }
  std::vector<std::string> support() const {
    std::vector<std::string> out;
    for (const auto& [v, e] : exp_) out.push_back(v);
    return out;
  }

  bool divides(const Monomial& m) const {
    for (const auto& [v, e] : exp_)
      if (m.exponent(v) < e) return false;
    return true;
  }
  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial out = a;
    for (const auto& [v, e] : b.exp_) out.exp_[v] = std::max(out.exponent(v), e);
    return out;
  }
  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial out = a;
    for (const auto& [v, e] : b.exp_) out.exp_[v] += e;
    return out;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  // "a*b^2", or "1".
  std::string to_string() const {
    if (exp_.empty()) return "1";
    std::string out;
    for (const auto& [v, e] : exp_) {
      if (!out.empty()) out += "*";
      out += v;
      if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
  }

 private:
  std::map<std::string, unsigned> exp_;
};

// Graded lex over the ambient variable order: lower degree first; at equal
// degree the larger exponent on the earliest differing variable comes first.
inline bool monomial_less(const Monomial& a, const Monomial& b, const std::vector<std::string>& ambient) {
  unsigned da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  for (const auto& v : ambient) {
    unsigned ea = a.exponent(v), eb = b.exponent(v);
    if (ea != eb) return ea > eb;
  }
  return false;
}

// Ideal given by its minimal generating set over an ambient variable list.
// The zero ideal has no generators; the unit ideal has the single generator 1.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  MonomialIdeal(std::vector<std::string> ambient, std::vector<Monomial> gens) : ambient_(std::move(ambient)) {
    std::sort(ambient_.begin(), ambient_.end());
    ambient_.erase(std::unique(ambient_.begin(), ambient_.end()), ambient_.end());
    for (const auto& m : gens)
      for (const auto& [v, e] : m.exponents())
        if (!std::binary_search(ambient_.begin(), ambient_.end(), v))
          throw PreconditionError("variable '" + v + "' not in the ambient ring");
    gens_ = minimal_generators(std::move(gens));
  }

  static MonomialIdeal zero(std::vector<std::string> ambient) { return MonomialIdeal(std::move(ambient), {}); }
  static MonomialIdeal unit(std::vector<std::string> ambient) { return MonomialIdeal(std::move(ambient), {Monomial()}); }

  const std::vector<std::string>& ambient() const { return ambient_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }
  bool is_squarefree() const {
    return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& m) { return m.is_squarefree(); });
  }

  bool contains(const Monomial& m) const {
    return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
  }
  bool contains(const MonomialIdeal& j) const {
    return std::all_of(j.gens_.begin(), j.gens_.end(), [&](const Monomial& g) { return contains(g); });
  }

  // Same ambient ring, re-tagged with a larger variable list.
  MonomialIdeal with_ambient(std::vector<std::string> ambient) const { return MonomialIdeal(std::move(ambient), gens_); }

  std::string to_string() const {
    std::string out = "R=[";
    for (std::size_t i = 0; i < ambient_.size(); ++i) out += (i ? "," : "") + ambient_[i];
    out += "] <";
    if (gens_.empty()) out += "0";
    for (std::size_t i = 0; i < gens_.size(); ++i) out += (i ? ", " : "") + gens_[i].to_string();
    return out + ">";
  }
  // Generators only: "<a*b, c^2>".
  std::string generators_string() const {
    std::string s = to_string();
    return s.substr(s.find('<'));
  }

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  std::vector<Monomial> minimal_generators(std::vector<Monomial> gens) const {
    std::sort(gens.begin(), gens.end(), [&](const Monomial& a, const Monomial& b) { return monomial_less(a, b, ambient_); });
    std::vector<Monomial> out;
    for (auto& m : gens) {
      bool divisible = std::any_of(out.begin(), out.end(), [&](const Monomial& g) { return g.divides(m); });
      if (!divisible) out.push_back(std::move(m));
    }
    return out;
  }

  std::vector<std::string> ambient_;
  std::vector<Monomial> gens_;
};

inline MonomialIdeal minimalize(std::vector<std::string> ambient, std::vector<Monomial> gens) {
  return MonomialIdeal(std::move(ambient), std::move(gens));
}

namespace detail {
inline void require_same_ambient(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.ambient() != b.ambient()) throw PreconditionError("ambient variable sets differ");
}
}  // namespace detail

inline bool contains(const MonomialIdeal& i, const Monomial& m) { return i.contains(m); }

inline bool equals(const MonomialIdeal& i, const MonomialIdeal& j) {
  detail::require_same_ambient(i, j);
  return i.contains(j) && j.contains(i);
}

inline MonomialIdeal ideal_sum(const MonomialIdeal& i, const MonomialIdeal& j) {
  detail::require_same_ambient(i, j);
  std::vector<Monomial> gens = i.generators();
  gens.insert(gens.end(), j.generators().begin(), j.generators().end());
  return MonomialIdeal(i.ambient(), std::move(gens));
}

inline MonomialIdeal ideal_intersection(const MonomialIdeal& i, const MonomialIdeal& j) {
  detail::require_same_ambient(i, j);
  std::vector<Monomial> gens;
  for (const auto& a : i.generators())
    for (const auto& b : j.generators()) gens.push_back(lcm(a, b));
  return MonomialIdeal(i.ambient(), std::move(gens));
}

// Prime generated by a set of variables.
inline MonomialIdeal prime_ideal(const std::vector<std::string>& ambient, const std::vector<std::string>& vars) {
  std::vector<Monomial> gens;
  for (const auto& v : vars) gens.push_back(Monomial::power(v, 1));
  return MonomialIdeal(ambient, std::move(gens));
}

// Parses "R=[a,b,c] <a*b, c^2>". "<1>" is the unit ideal and "<0>" or "<>"
// the zero ideal. Variable names may not contain whitespace or any of "[],<>*^=".
inline MonomialIdeal parse_ideal(std::string_view text) {
  auto fail = [](const std::string& why) -> MonomialIdeal { throw ParseError("ideal: " + why); };
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  auto split = [&](std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i)
      if (i == s.size() || s[i] == sep) {
        parts.push_back(trim(s.substr(start, i - start)));
        start = i + 1;
      }
    return parts;
  };
  text = trim(text);
  if (text.substr(0, 3) != "R=[") return fail("expected 'R=['");
  auto close = text.find(']');
  if (close == std::string_view::npos) return fail("missing ']'");
  std::vector<std::string> ambient;
  if (auto inner = trim(text.substr(3, close - 3)); !inner.empty())
    for (auto v : split(inner, ',')) {
      if (v.empty()) return fail("empty variable name");
      ambient.emplace_back(v);
    }
  auto rest = trim(text.substr(close + 1));
  if (rest.size() < 2 || rest.front() != '<' || rest.back() != '>') return fail("expected '<...>'");
  auto body = trim(rest.substr(1, rest.size() - 2));
  std::vector<Monomial> gens;
  if (!body.empty() && body != "0") {
    for (auto term : split(body, ',')) {
      if (term.empty()) return fail("empty generator");
      if (term == "1") {
        gens.emplace_back();
        continue;
      }
      std::map<std::string, unsigned> exps;
      for (auto factor : split(term, '*')) {
        if (factor.empty()) return fail("empty factor in '" + std::string(term) + "'");
        std::string var(factor);
        unsigned e = 1;
        if (auto caret = factor.find('^'); caret != std::string_view::npos) {
          var = std::string(trim(factor.substr(0, caret)));
          auto digits = trim(factor.substr(caret + 1));
          if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
            return fail("bad exponent in '" + std::string(factor) + "'");
          e = static_cast<unsigned>(std::stoul(std::string(digits)));
        }
        if (e == 0) return fail("zero exponent in '" + std::string(factor) + "'");
        exps[var] += e;
      }
      gens.emplace_back(std::move(exps));
    }
  }
  try {
    return MonomialIdeal(std::move(ambient), std::move(gens));
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("ideal: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// Decompositions

// I = intersection over components of (prime on the component + shared).
// An absent shared ideal means plain primes. `unit` marks the unit ideal,
// which has no components.
struct PrimeDecomposition {
  std::vector<std::string> ambient;
  std::vector<std::vector<std::string>> components;
  std::optional<MonomialIdeal> shared;
  bool unit = false;

  std::size_t size() const { return components.size(); }

  MonomialIdeal component_ideal(std::size_t i) const {
    MonomialIdeal p = prime_ideal(ambient, components[i]);
    return shared ? ideal_sum(p, *shared) : p;
  }

  // Re-expands the intersection.
  MonomialIdeal to_ideal() const {
    if (unit) return MonomialIdeal::unit(ambient);
    MonomialIdeal acc = MonomialIdeal::unit(ambient);
    for (std::size_t i = 0; i < components.size(); ++i) acc = ideal_intersection(acc, component_ideal(i));
    return acc;
  }
};

// Irredundant decomposition of a square-free ideal into monomial primes: the
// components are the minimal transversals of the generator supports.
// `verify` re-expands the intersection and compares.
inline PrimeDecomposition decompose_squarefree(const MonomialIdeal& i, std::size_t max_sets = kDefaultMaxSets,
                                               bool verify = true) {
  if (!i.is_squarefree()) throw PreconditionError("decompose_squarefree: ideal is not square-free");
  PrimeDecomposition out;
  out.ambient = i.ambient();
  if (i.is_unit()) {
    out.unit = true;
    return out;
  }
  const auto& vars = i.ambient();
  Hypergraph h;
  h.universe = vars.size();
  for (const auto& g : i.generators()) {
    VertexSet e(vars.size());
    for (const auto& v : g.support())
      e.insert(static_cast<Vertex>(std::lower_bound(vars.begin(), vars.end(), v) - vars.begin()));
    h.edges.push_back(std::move(e));
  }
  for (const auto& t : minimal_transversals(h, max_sets)) {
    std::vector<std::string> comp;
    t.for_each([&](Vertex v) { comp.push_back(vars[v]); });
    out.components.push_back(std::move(comp));
  }
  if (verify && !equals(out.to_ideal(), i)) throw TheoremViolation("prime decomposition does not re-expand to the ideal");
  return out;
}

// ---------------------------------------------------------------------------
// Ideals of graphs (variables are the vertex labels)

// <X_N(v) : v in S>. An isolated v in S contributes the generator 1.
inline MonomialIdeal open_neighborhood_ideal(const Graph& g, const VertexSet& s,
                                             std::optional<std::vector<std::string>> ambient = std::nullopt) {
  std::vector<Monomial> gens;
  s.for_each([&](Vertex v) { gens.push_back(Monomial::product(g.labels_of(g.neighbor_set(v)))); });
  return MonomialIdeal(ambient ? *ambient : g.labels(), std::move(gens));
}
inline MonomialIdeal open_neighborhood_ideal(const Graph& g) { return open_neighborhood_ideal(g, g.all()); }

inline MonomialIdeal edge_ideal(const Graph& g) {
  std::vector<Monomial> gens;
  for (auto [u, v] : g.edges()) gens.push_back(Monomial::product(std::vector<std::string>{g.label(u), g.label(v)}));
  return MonomialIdeal(g.labels(), std::move(gens));
}

}  // namespace wtd
