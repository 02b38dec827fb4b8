#pragma once

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "wtd/algebra_type.hpp"
#include "wtd/complex.hpp"
#include "wtd/construct.hpp"
#include "wtd/domination.hpp"
#include "wtd/graph.hpp"
#include "wtd/ideal.hpp"
#include "wtd/unmixed.hpp"

namespace wtd {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "wtd-report/1";

// 64-bit FNV-1a.
inline std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Digest of the normalized edge list, so formatting differences in the
// input file do not change it.
inline std::string input_digest(const Graph& g) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(to_edge_list(g))));
  return std::string("fnv1a64:") + buf;
}

struct ReportOptions {
  std::size_t max_sets = kDefaultMaxSets;
  bool timings = false;
  bool witnesses = false;
};

class Stopwatch {
 public:
  explicit Stopwatch(bool on) : on_(on) {}
  template <typename F>
  auto time(const char* name, F&& f) {
    auto start = std::chrono::steady_clock::now();
    auto stop = [&] {
      if (on_)
        json_[name] = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start).count();
    };
    if constexpr (std::is_void_v<decltype(f())>) {
      f();
      stop();
    } else {
      auto r = f();
      stop();
      return r;
    }
  }
  const Json& json() const { return json_; }

 private:
  bool on_;
  Json json_ = Json::object();
};

inline Json labels_json(const Graph& g, const VertexSet& s) { return g.labels_of(s); }

inline Json family_json(const Graph& g, const MinimalSetFamily& f) {
  Json out = Json::array();
  for (const auto& s : f) out.push_back(g.labels_of(s));
  return out;
}

inline Json graph_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& [a, b] : g.labeled_edges()) edges.push_back({a, b});
  return Json{{"vertices", g.labels()}, {"edges", edges}};
}

inline Json ideal_json(const MonomialIdeal& i) {
  Json gens = Json::array();
  for (const auto& m : i.generators()) gens.push_back(m.to_string());
  return Json{{"ring", i.ambient()}, {"generators", gens}, {"text", i.to_string()}};
}

inline Json decomposition_json(const PrimeDecomposition& d) {
  Json out{{"unit", d.unit}, {"components", d.components}};
  if (d.shared) out["shared"] = ideal_json(*d.shared);
  return out;
}

inline Json check_json(const ShellingCheck& c, const std::vector<std::string>& ground, bool witnesses) {
  Json out{{"valid", c.valid()}, {"pure", c.pure}, {"condition_ii", c.condition_ii}, {"reformulation", c.reformulation}};
  if (c.failure) out["failure"] = {c.failure->first, c.failure->second};
  if (witnesses) {
    Json w = Json::array();
    for (const auto& step : c.witnesses) {
      Json row = Json::array();
      for (auto [v, k] : step.restriction) row.push_back({{"vertex", ground[v]}, {"earlier", k}});
      w.push_back(row);
    }
    out["witnesses"] = w;
  }
  return out;
}

inline Json shelling_json(const ShellingOrder& s, const ShellingCheck& c, bool witnesses) {
  Json out{{"applicable", true}, {"facets", s.facets.size()}, {"order", s.facet_labels()}};
  if (!s.vectors.empty()) out["vectors"] = s.vectors;
  out["verification"] = check_json(c, s.ground, witnesses);
  return out;
}

inline Json interior_type_json(const InteriorType& t) {
  return Json{{"m", t.m}, {"v3_sets", t.v3_sets}, {"component_socles", t.component_socles}, {"depth", t.depth}};
}

inline Json type_json(const TypeReport& r) {
  return Json{{"applicable", true},     {"type", r.type},   {"m_blue", r.blue.m},
              {"m_red", r.red.m},       {"socle", r.socle}, {"depth", r.depth},
              {"dim", r.dim},           {"blue", interior_type_json(r.blue)},
              {"red", interior_type_json(r.red)}};
}

inline Json inapplicable(const std::string& reason) { return Json{{"applicable", false}, {"reason", reason}}; }

inline Json certificate_json(const UnmixedCertificate& c) {
  Json comps = Json::array();
  for (const auto& k : c.components) {
    Json row{{"side", k.side},         {"vertices", k.vertices}, {"height", k.height},
             {"height_ok", k.height_ok}, {"v2_ok", k.v2_ok},       {"v1_ok", k.v1_ok}};
    if (k.offending) row["offending"] = *k.offending;
    comps.push_back(row);
  }
  return Json{{"unmixed", c.unmixed}, {"components", comps}};
}

// Everything the library computes for one input graph.
inline Json analyze_json(const Graph& g, const ReportOptions& opt = {}) {
  Stopwatch clock(opt.timings);
  Json r;
  r["schema"] = kReportSchema;
  const bool forest = [&] {
    try {
      Forest f(g);
      return true;
    } catch (const PreconditionError&) {
      return false;
    }
  }();
  const bool tree = forest && g.size() > 0 && Forest(g).component_count() == 1;
  r["input"] = {{"digest", input_digest(g)}, {"vertices", g.size()}, {"edges", g.edge_count()}, {"forest", forest}, {"tree", tree}};
  r["graph"] = graph_json(g);

  std::optional<Forest> f;
  if (forest) {
    f.emplace(g);
    HeightMap h = heights(*f);
    Json hj = Json::object();
    for (Vertex v = 0; v < g.size(); ++v) hj[g.label(v)] = h[v];
    r["heights"] = hj;
    r["height"] = g.size() ? h.height() : 0;
    r["balanced"] = is_balanced(*f);
    Coloring c = two_coloring(*f);
    r["coloring"] = {{"blue", labels_json(g, c.blue())}, {"red", labels_json(g, c.red())}};
  }
  VertexClasses cls = classify_vertices(g);
  r["classes"] = {{"leaves", labels_json(g, cls.leaves)},
                  {"supports", labels_json(g, cls.supports)},
                  {"isolated", labels_json(g, cls.isolated)}};

  // Minimal TD-sets and the ideal.
  std::optional<MinimalSetFamily> td;
  try {
    td = clock.time("td_sets", [&] { return minimal_td_sets(g, opt.max_sets); });
    r["td_sets"] = {{"status", "complete"}, {"count", td->size()}, {"sizes", td->sizes()}, {"sets", family_json(g, *td)}};
  } catch (const CapExceeded& e) {
    r["td_sets"] = {{"status", "cap_exceeded"}, {"max_sets", opt.max_sets}, {"message", e.what()}};
  }
  MonomialIdeal n = open_neighborhood_ideal(g);
  Json ij = ideal_json(n);
  if (td) {
    try {
      ij["decomposition"] = decomposition_json(clock.time("decomposition", [&] { return decompose_squarefree(n, opt.max_sets); }));
    } catch (const CapExceeded& e) {
      ij["decomposition"] = {{"status", "cap_exceeded"}, {"message", e.what()}};
    }
  }
  r["ideal"] = ij;

  // Verdict: the characterization on trees, enumeration otherwise; both when
  // both are available, and they must agree.
  std::optional<bool> unmixed;
  if (td && !td->empty()) unmixed = td->sizes().size() == 1;
  if (tree && g.size() > 1) {
    Tree t(g);
    InteriorGraphs ig = interior_graphs(t);
    r["interiors"] = {{"blue", graph_json(ig.blue.graph())}, {"red", graph_json(ig.red.graph())}};
    UnmixedCertificate cert = clock.time("characterization", [&] { return is_unmixed_fast(t); });
    r["certificate"] = certificate_json(cert);
    if (unmixed && *unmixed != cert.unmixed) throw TheoremViolation("characterization disagrees with enumeration");
    unmixed = cert.unmixed;
  }
  if (td && td->sizes().size() > 1) {
    auto lo = std::min_element(td->begin(), td->end(), [](auto& a, auto& b) { return a.size() < b.size(); });
    auto hi = std::max_element(td->begin(), td->end(), [](auto& a, auto& b) { return a.size() < b.size(); });
    r["witness"] = {{"smallest", g.labels_of(*lo)}, {"largest", g.labels_of(*hi)}};
  }
  r["verdict"] = !unmixed ? (td && td->empty() ? "no-td-set" : "unknown") : (*unmixed ? "unmixed" : "mixed");

  if (tree && g.size() > 1 && unmixed && *unmixed) {
    Tree t(g);
    try {
      auto s = clock.time("shelling", [&] { return stable_shelling(t, opt.max_sets); });
      auto c = clock.time("shelling_check", [&] { return verify_shelling(s, opt.witnesses); });
      r["shelling"] = shelling_json(s, c, opt.witnesses);
    } catch (const CapExceeded& e) {
      r["shelling"] = inapplicable(std::string("cap exceeded: ") + e.what());
    }
    try {
      r["type"] = type_json(clock.time("type", [&] { return cm_type(t, opt.max_sets); }));
    } catch (const CapExceeded& e) {
      r["type"] = inapplicable(std::string("cap exceeded: ") + e.what());
    }
  } else {
    std::string why = !tree ? "input is not a tree" : g.size() == 1 ? "no total dominating set" : "tree is mixed";
    if (tree && g.size() > 1 && !unmixed) why = "verdict unknown";
    r["shelling"] = inapplicable(why);
    r["type"] = inapplicable(why);
  }
  if (opt.timings) r["timings_us"] = clock.json();
  return r;
}

}  // namespace wtd
