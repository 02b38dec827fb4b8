// wtd: command-line front end for the library.

#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <mutex>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wtd/wtd.hpp"

namespace {

using wtd::Json;

enum Exit { ok = 0, failed = 1, bad_input = 2, precondition = 3, theorem = 4, cap = 5 };

std::string read_input(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path);
  if (!in) throw wtd::ParseError("cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

wtd::Graph read_graph(const std::string& path) { return wtd::parse_graph(read_input(path)); }

wtd::Tree read_tree(const std::string& path) { return wtd::Tree(read_graph(path)); }

std::string join(const std::vector<std::string>& xs, const std::string& sep = ", ") {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : sep) + x;
  return out;
}

std::string braces(const Json& labels) { return "{" + join(labels.get<std::vector<std::string>>()) + "}"; }

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

// ---------------------------------------------------------------------------
// human-readable renderings

void print_decomposition(const Json& d) {
  if (d.contains("status")) {
    std::cout << "decomposition: " << d["status"].get<std::string>() << "\n";
    return;
  }
  if (d["unit"].get<bool>()) {
    std::cout << "decomposition: unit ideal\n";
    return;
  }
  std::vector<std::string> parts;
  for (const auto& c : d["components"]) parts.push_back("<" + join(c.get<std::vector<std::string>>()) + ">");
  std::cout << "decomposition: " << join(parts, " & ") << "\n";
}

void print_type(const Json& t) {
  if (!t["applicable"].get<bool>()) {
    std::cout << "type: n/a (" << t["reason"].get<std::string>() << ")\n";
    return;
  }
  std::cout << "type: " << t["type"] << " = " << t["m_blue"] << " * " << t["m_red"] << " (socle " << t["socle"]
            << ")  depth: " << t["depth"] << "  dim: " << t["dim"] << "\n";
}

void print_shelling(const Json& s, bool full) {
  if (!s["applicable"].get<bool>()) {
    std::cout << "shelling: n/a (" << s["reason"].get<std::string>() << ")\n";
    return;
  }
  const Json& v = s["verification"];
  std::cout << "shelling: " << s["facets"] << " facets, " << (v["valid"].get<bool>() ? "valid" : "INVALID") << "\n";
  if (!full) return;
  for (std::size_t i = 0; i < s["order"].size(); ++i) {
    std::cout << "  " << i << ": " << braces(s["order"][i]);
    if (s.contains("vectors")) {
      std::vector<std::string> a;
      for (const auto& x : s["vectors"][i]) a.push_back(std::to_string(x.get<int>()));
      std::cout << "  (" << join(a) << ")";
    }
    std::cout << "\n";
  }
}

void print_analysis(const Json& r) {
  const Json& in = r["input"];
  std::cout << "digest: " << in["digest"].get<std::string>() << "\n";
  std::cout << "vertices: " << in["vertices"] << "  edges: " << in["edges"] << "  tree: " << (in["tree"].get<bool>() ? "yes" : "no");
  if (r.contains("balanced"))
    std::cout << "  height: " << r["height"] << "  balanced: " << (r["balanced"].get<bool>() ? "yes" : "no");
  std::cout << "\n";
  const Json& td = r["td_sets"];
  if (td["status"] == "complete") {
    std::vector<std::string> sizes;
    for (const auto& s : td["sizes"]) sizes.push_back(std::to_string(s.get<std::size_t>()));
    std::cout << "minimal TD-sets: " << td["count"] << " (sizes " << join(sizes, " ") << ")\n";
    for (const auto& s : td["sets"]) std::cout << "  " << braces(s) << "\n";
  } else {
    std::cout << "minimal TD-sets: cap of " << td["max_sets"] << " exceeded\n";
  }
  std::cout << "N(G) = " << r["ideal"]["text"].get<std::string>() << "\n";
  if (r["ideal"].contains("decomposition")) print_decomposition(r["ideal"]["decomposition"]);
  std::cout << "verdict: " << r["verdict"].get<std::string>();
  if (r.contains("witness"))
    std::cout << " (witness " << braces(r["witness"]["smallest"]) << " and " << braces(r["witness"]["largest"]) << ")";
  std::cout << "\n";
  if (r.contains("certificate"))
    for (const auto& c : r["certificate"]["components"])
      if (c.contains("offending"))
        std::cout << "  " << c["side"].get<std::string>() << " component fails at " << c["offending"].get<std::string>()
                  << " (height " << (c["height_ok"].get<bool>() ? "ok" : "bad") << ", V2 "
                  << (c["v2_ok"].get<bool>() ? "ok" : "bad") << ", V1 " << (c["v1_ok"].get<bool>() ? "ok" : "bad") << ")\n";
  print_shelling(r["shelling"], false);
  print_type(r["type"]);
  if (r.contains("timings_us"))
    for (const auto& [k, v] : r["timings_us"].items()) std::cout << "time " << k << ": " << v << " us\n";
}

// ---------------------------------------------------------------------------
// verify suite

struct Check {
  std::string name;
  std::size_t cases = 0;
  std::vector<std::string> failures;
};

template <typename F>
Check run_check(const std::string& name, std::size_t n, F&& body) {
  Check c{name, n, {}};
  std::vector<std::string> result(n);
  wtd::detail::parallel_for(n, [&](std::size_t i) {
    try {
      result[i] = body(i);
    } catch (const std::exception& e) {
      result[i] = std::string("exception: ") + e.what();
    }
  });
  for (std::size_t i = 0; i < n; ++i)
    if (!result[i].empty()) c.failures.push_back(result[i]);
  return c;
}

std::vector<wtd::Tree> exhaustive(std::size_t max_n) {
  std::vector<wtd::Tree> out;
  for (std::size_t n = 1; n <= max_n; ++n)
    for (auto& t : wtd::all_trees(n)) out.push_back(std::move(t));
  return out;
}

std::string where(const wtd::Graph& g) {
  std::string e = wtd::to_edge_list(g);
  for (auto& c : e)
    if (c == '\n') c = ';';
  return e;
}

std::vector<Check> verify_suite(std::size_t max_n, std::uint64_t seed, std::size_t samples, bool mutant) {
  using namespace wtd;
  CharacterizationOptions opt{mutant};
  std::vector<Check> out;
  auto all = exhaustive(max_n);

  out.push_back(run_check("characterization/exhaustive", all.size(), [&](std::size_t i) -> std::string {
    const Tree& t = all[i];
    bool fast = is_unmixed_fast(t, opt).unmixed, brute = is_unmixed_bruteforce(t.graph());
    return fast == brute ? "" : "fast=" + std::to_string(fast) + " brute=" + std::to_string(brute) + " on " + where(t.graph());
  }));
  out.push_back(run_check("decomposition/exhaustive", all.size(), [&](std::size_t i) -> std::string {
    const Graph& g = all[i].graph();
    if (g.size() > 10) return "";
    auto dec = decompose_squarefree(open_neighborhood_ideal(g));  // re-expansion is checked inside
    std::vector<std::vector<std::string>> want;
    for (const auto& s : minimal_td_sets(g)) want.push_back(g.labels_of(s));
    return dec.components == want ? "" : "components differ on " + where(g);
  }));
  out.push_back(run_check("stanley-reisner/exhaustive", all.size(), [&](std::size_t i) -> std::string {
    const Graph& g = all[i].graph();
    if (g.size() > 9) return "";
    auto d = stable_complex(g);
    auto n = open_neighborhood_ideal(g);
    if (!equals(stanley_reisner_ideal(d), n)) return "ideal differs on " + where(g);
    if (!(stanley_reisner_complex(n) == d)) return "complex differs on " + where(g);
    return "";
  }));
  out.push_back(run_check("shelling+type/exhaustive", all.size(), [&](std::size_t i) -> std::string {
    const Tree& t = all[i];
    if (t.size() < 2 || !is_unmixed_fast(t).unmixed) return "";
    auto s = stable_shelling(t);
    auto d = stable_complex(t.graph());
    if (!same_facets(s.complex(), d)) return "join facets differ on " + where(t.graph());
    if (!verify_shelling(d, s.facets).valid()) return "shelling fails on " + where(t.graph());
    cm_type(t);  // throws when the socle count disagrees
    return "";
  }));

  std::vector<Tree> random;
  Lcg rng(seed);
  for (std::size_t i = 0; i < samples; ++i) random.push_back(random_tree(11 + rng.below(6), rng));
  out.push_back(run_check("characterization/random", random.size(), [&](std::size_t i) -> std::string {
    const Tree& t = random[i];
    bool fast = is_unmixed_fast(t, opt).unmixed, brute = is_unmixed_bruteforce(t.graph());
    return fast == brute ? "" : "fast=" + std::to_string(fast) + " brute=" + std::to_string(brute) + " on " + where(t.graph());
  }));
  out.push_back(run_check("construct/generated", samples, [&](std::size_t i) -> std::string {
    auto [t, trace] = generate(seed + i, i % 12);
    auto back = deconstruct(t);
    if (!back || canonical_form(replay(*back)) != canonical_form(t)) return "round trip fails for seed " + std::to_string(seed + i);
    if (!verify_shelling(shelling_order(t)).valid()) return "order fails for seed " + std::to_string(seed + i);
    if (minimal_v3_td_sets(t).size() != socle_dimension(artinian_reduction(t)))
      return "socle differs for seed " + std::to_string(seed + i);
    return "";
  }));
  return out;
}

// ---------------------------------------------------------------------------

int run(int argc, char** argv) {
  CLI::App app{"Total domination, open neighborhood ideals and unmixed trees"};
  app.require_subcommand(1);
  bool json = false, timings = false, witnesses = false, even = false;
  std::size_t max_sets = wtd::kDefaultMaxSets;
  std::string path = "-";

  auto input_cmd = [&](const std::string& name, const std::string& help) {
    auto* c = app.add_subcommand(name, help);
    c->add_option("input", path, "edge-list file, or - for stdin")->required();
    c->add_flag("--json", json, "JSON output");
    c->add_option("--max-sets", max_sets, "cap on enumerated minimal sets")->check(CLI::PositiveNumber);
    return c;
  };
  auto* analyze = input_cmd("analyze", "full report for one graph");
  analyze->add_flag("--timings", timings, "include timings");
  analyze->add_flag("--witnesses", witnesses, "include shelling witnesses");
  auto* ideal = input_cmd("ideal", "open neighborhood ideal and its decomposition");
  auto* shelling = input_cmd("shelling", "shelling order of the stable complex");
  shelling->add_flag("--even", even, "order S_even of a balanced tree by facet vectors");
  shelling->add_flag("--witnesses", witnesses, "include per-facet witnesses");
  auto* type = input_cmd("type", "Cohen-Macaulay type, depth and dimension");
  auto* decon = input_cmd("deconstruct", "O-sequence from P6 that rebuilds the tree");

  std::uint64_t seed = 1;
  std::size_t steps = 5, count = 1, max_n = 12, samples = 200;
  std::string out_dir, mutant;
  auto* gen = app.add_subcommand("generate", "random unmixed balanced trees of height 3");
  gen->add_option("--seed", seed, "first seed (tree i uses seed + i)");
  gen->add_option("--steps", steps, "O-steps per tree");
  gen->add_option("--count", count, "number of trees");
  gen->add_option("--out", out_dir, "write tree-<i>.txt and tree-<i>.trace.json here");
  gen->add_flag("--json", json, "JSON output");
  auto* verify = app.add_subcommand("verify", "cross-check the library against enumeration");
  verify->add_option("--max-n", max_n, "exhaustive up to this many vertices")->check(CLI::Range(1, 14));
  verify->add_option("--seed", seed, "seed for sampled trees");
  verify->add_option("--samples", samples, "random and generated samples");
  verify->add_option("--mutant", mutant, "run with a deliberately broken check")->check(CLI::IsMember({"skip-cond3"}));
  verify->add_flag("--json", json, "JSON output");

  CLI11_PARSE(app, argc, argv);

  if (*analyze) {
    Json r = wtd::analyze_json(read_graph(path), {max_sets, timings, witnesses});
    json ? print_json(r) : print_analysis(r);
  } else if (*ideal) {
    wtd::Graph g = read_graph(path);
    auto n = wtd::open_neighborhood_ideal(g);
    Json r{{"schema", wtd::kReportSchema}, {"input", {{"digest", wtd::input_digest(g)}}}, {"ideal", wtd::ideal_json(n)}};
    r["ideal"]["decomposition"] = wtd::decomposition_json(wtd::decompose_squarefree(n, max_sets));
    if (json) {
      print_json(r);
    } else {
      std::cout << "N(G) = " << n.to_string() << "\n";
      print_decomposition(r["ideal"]["decomposition"]);
    }
  } else if (*shelling) {
    wtd::Tree t = read_tree(path);
    Json s;
    if (even) {
      auto o = wtd::shelling_order(t, max_sets);
      s = wtd::shelling_json(o, wtd::verify_shelling(o, witnesses), witnesses);
    } else {
      auto o = wtd::stable_shelling(t, max_sets);
      s = wtd::shelling_json(o, wtd::verify_shelling(o, witnesses), witnesses);
    }
    Json r{{"schema", wtd::kReportSchema}, {"input", {{"digest", wtd::input_digest(t.graph())}}}, {"shelling", s}};
    json ? print_json(r) : print_shelling(s, true);
    if (!s["verification"]["valid"].get<bool>()) return failed;
  } else if (*type) {
    wtd::Tree t = read_tree(path);
    Json r{{"schema", wtd::kReportSchema}, {"input", {{"digest", wtd::input_digest(t.graph())}}},
           {"type", wtd::type_json(wtd::cm_type(t, max_sets))}};
    json ? print_json(r) : print_type(r["type"]);
  } else if (*decon) {
    wtd::Tree t = read_tree(path);
    auto trace = wtd::deconstruct(t);
    if (!trace) {
      std::cerr << "wtd: not an unmixed balanced tree of height 3\n";
      return precondition;
    }
    if (json) {
      print_json(Json{{"schema", wtd::kReportSchema}, {"input", {{"digest", wtd::input_digest(t.graph())}}},
                      {"trace", trace->to_json()}});
    } else {
      std::cout << "P6 (0-1-2-3-4-5-6)\n";
      for (const auto& s : trace->steps) std::cout << "O at " << s.attach_label << " (" << wtd::to_string(s.kind) << ")\n";
    }
  } else if (*gen) {
    Json all = Json::array();
    if (!out_dir.empty()) std::filesystem::create_directories(out_dir);
    for (std::size_t i = 0; i < count; ++i) {
      auto [t, trace] = wtd::generate(seed + i, steps);
      std::string header = "# seed " + std::to_string(seed + i) + " steps " + std::to_string(steps) + "\n";
      if (!out_dir.empty()) {
        std::string base = out_dir + "/tree-" + std::to_string(i);
        std::ofstream(base + ".txt") << header << wtd::to_edge_list(t.graph());
        std::ofstream(base + ".trace.json") << trace.to_json().dump(2) << "\n";
      } else if (json) {
        all.push_back({{"seed", seed + i}, {"steps", steps}, {"digest", wtd::input_digest(t.graph())},
                       {"graph", wtd::graph_json(t.graph())}, {"trace", trace.to_json()}});
      } else {
        std::cout << header << "# trace " << trace.to_json().dump() << "\n" << wtd::to_edge_list(t.graph()) << "\n";
      }
    }
    if (json && out_dir.empty()) print_json(all);
  } else if (*verify) {
    auto checks = verify_suite(max_n, seed, samples, mutant == "skip-cond3");
    std::size_t failures = 0;
    Json r{{"schema", wtd::kReportSchema}, {"max_n", max_n}, {"seed", seed}, {"samples", samples}, {"mutant", mutant}};
    Json cj = Json::array();
    for (const auto& c : checks) {
      failures += c.failures.size();
      Json first = Json::array();
      for (std::size_t k = 0; k < c.failures.size() && k < 5; ++k) first.push_back(c.failures[k]);
      cj.push_back({{"name", c.name}, {"cases", c.cases}, {"failures", c.failures.size()}, {"first_failures", first}});
      if (!json) {
        std::cout << (c.failures.empty() ? "ok   " : "FAIL ") << c.name << ": " << c.cases << " cases, "
                  << c.failures.size() << " failures\n";
        for (std::size_t k = 0; k < c.failures.size() && k < 5; ++k) std::cout << "     " << c.failures[k] << "\n";
      }
    }
    r["checks"] = cj;
    r["passed"] = failures == 0;
    if (json) print_json(r);
    return failures == 0 ? ok : failed;
  }
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const wtd::ParseError& e) {
    std::cerr << "wtd: " << e.what() << "\n";
    return bad_input;
  } catch (const wtd::CapExceeded& e) {
    std::cerr << "wtd: " << e.what() << "\n";
    return cap;
  } catch (const wtd::PreconditionError& e) {
    std::cerr << "wtd: " << e.what() << "\n";
    return precondition;
  } catch (const wtd::TheoremViolation& e) {
    std::cerr << "wtd: theorem violation: " << e.what() << "\n";
    return theorem;
  }
}
