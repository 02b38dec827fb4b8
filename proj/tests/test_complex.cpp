#include <gtest/gtest.h>

#include "oracles.hpp"
#include "wtd/complex.hpp"
#include "wtd/tree_enum.hpp"

using namespace wtd;

namespace {

using Labels = std::vector<std::string>;
using Facets = std::vector<Labels>;

SimplicialComplex C(Labels ground, const Facets& facets) { return SimplicialComplex::from_labels(std::move(ground), facets); }

// Minimal non-faces by scanning every subset of the ground set.
std::vector<Labels> minimal_nonfaces(const SimplicialComplex& d) {
  const std::size_t n = d.ground().size();
  auto is_face = [&](std::uint32_t m) { return d.contains_face(oracle::from_mask(n, m)); };
  std::vector<Labels> out;
  for (std::uint32_t m = 0; m < (1U << n); ++m) {
    if (is_face(m)) continue;
    bool minimal = true;
    for (std::size_t v = 0; v < n; ++v)
      if ((m >> v & 1U) && !is_face(m & ~(1U << v))) minimal = false;
    if (minimal) out.push_back(d.labels_of(oracle::from_mask(n, m)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Labels> generator_supports(const MonomialIdeal& i) {
  std::vector<Labels> out;
  for (const auto& g : i.generators()) out.push_back(g.support());
  std::sort(out.begin(), out.end());
  return out;
}

SimplicialComplex random_complex(Lcg& rng, std::size_t n, std::size_t facets, bool pure_size = false) {
  Labels ground;
  for (std::size_t i = 0; i < n; ++i) ground.push_back("x" + std::to_string(i));
  std::vector<VertexSet> fs;
  std::size_t k = 1 + rng.below(n);
  for (std::size_t f = 0; f < facets; ++f) {
    VertexSet s(n);
    if (pure_size) {
      while (s.size() < k) s.insert(static_cast<Vertex>(rng.below(n)));
    } else {
      for (Vertex v = 0; v < n; ++v)
        if (rng.below(2)) s.insert(v);
    }
    fs.push_back(s);
  }
  return SimplicialComplex(ground, fs);
}

// Unmixed balanced trees of height 3 from the exhaustive lists and from
// balanced closures of random trees.
std::vector<Tree> height3_unmixed(std::size_t max_n, int random_count, std::uint64_t seed) {
  std::vector<Tree> out;
  auto keep = [&](const Tree& t) {
    if (is_balanced(t) && heights(t).height() == 3 && characterize_balanced_unmixed(t).unmixed) out.push_back(t);
  };
  for (std::size_t n = 7; n <= max_n; ++n)
    for (const auto& t : all_trees(n)) keep(t);
  Lcg rng(seed);
  for (int i = 0; i < random_count; ++i) keep(balanced_closure(random_tree(6 + rng.below(14), rng)));
  return out;
}

}  // namespace

TEST(Complex, FacetsAreMaximalAndCanonical) {
  auto d = C({"a", "b", "c"}, {{"a"}, {"a", "b"}, {"c"}, {"a", "b"}});
  EXPECT_EQ(d.facet_labels(), (Facets{{"a", "b"}, {"c"}}));
  EXPECT_FALSE(d.is_pure());
  EXPECT_EQ(d.dimension(), 1);
  EXPECT_TRUE(C({"a"}, {}).is_void());
  EXPECT_FALSE(C({"a"}, {}).dimension().has_value());
  auto empty_face = C({"a"}, {{}});
  EXPECT_FALSE(empty_face.is_void());
  EXPECT_EQ(empty_face.dimension(), -1);
  EXPECT_THROW(C({"a"}, {{"b"}}), PreconditionError);
}

TEST(StableComplex, P6) {
  auto d = stable_complex(fixture::p6());
  EXPECT_EQ(d.facet_count(), 3u);
  // Complements of {0,1,4,5}, {1,2,4,5}, {1,2,5,6}.
  EXPECT_EQ(d.facet_labels(), (Facets{{"0", "3", "4"}, {"0", "3", "6"}, {"2", "3", "6"}}));
  EXPECT_TRUE(d.is_pure());
  EXPECT_EQ(d.dimension(), 2);
}

TEST(StableComplex, P4NotPure) {
  auto d = stable_complex(fixture::p4());
  EXPECT_EQ(d.facet_labels(), (Facets{{"l1", "l2"}, {"u"}}));
  EXPECT_FALSE(d.is_pure());
}

TEST(StableComplex, MatchesOracleOnSmallTrees) {
  for (std::size_t n = 1; n <= 9; ++n)
    for (const auto& t : all_trees(n)) {
      const Graph& g = t.graph();
      std::vector<VertexSet> want;
      for (const auto& s : oracle::minimal_td_sets(g)) want.push_back(g.all() - s);
      sort_canonical(want);
      EXPECT_EQ(stable_complex(g).facets(), want);
    }
}

TEST(EvenStableComplex, P6AndErrors) {
  auto d = even_stable_complex(Tree(fixture::p6()));
  EXPECT_EQ(d.ground(), (Labels{"0", "2", "4", "6"}));
  EXPECT_EQ(d.facet_labels(), (Facets{{"0", "4"}, {"0", "6"}, {"2", "6"}}));
  EXPECT_THROW(even_stable_complex(Tree(fixture::p5())), PreconditionError);
  auto v = even_stable_complex(Tree(fixture::single_vertex()));
  EXPECT_EQ(v.facet_labels(), (Facets{{"v"}}));
  auto s = even_stable_complex(Tree(fixture::star(3)));
  EXPECT_EQ(s.facet_labels(), (Facets{{"l1", "l2"}, {"l1", "l3"}, {"l2", "l3"}}));
}

TEST(Join, Basics) {
  auto a = C({"a", "b"}, {{"a"}, {"b"}});
  auto b = C({"c"}, {{"c"}});
  EXPECT_EQ(join(a, b).facet_labels(), (Facets{{"a", "c"}, {"b", "c"}}));
  EXPECT_TRUE(join(a, C({"c"}, {})).is_void());
  EXPECT_EQ(join(a, C({}, {{}})).facet_labels(), a.facet_labels());
  EXPECT_THROW(join(a, C({"a"}, {{"a"}})), PreconditionError);
}

TEST(StanleyReisner, MatchesSubsetScan) {
  Lcg rng(17);
  for (int i = 0; i < 300; ++i) {
    auto d = random_complex(rng, 1 + rng.below(8), rng.below(6));
    auto ideal = stanley_reisner_ideal(d);
    if (d.is_void()) {
      EXPECT_TRUE(ideal.is_unit());
      continue;
    }
    EXPECT_EQ(generator_supports(ideal), minimal_nonfaces(d)) << d.to_string();
    EXPECT_EQ(stanley_reisner_complex(ideal), d);
  }
}

TEST(StanleyReisner, EdgeCases) {
  auto simplex = C({"a", "b"}, {{"a", "b"}});
  EXPECT_TRUE(stanley_reisner_ideal(simplex).is_zero());
  EXPECT_TRUE(stanley_reisner_complex(parse_ideal("R=[a,b] <1>")).is_void());
  EXPECT_EQ(stanley_reisner_complex(parse_ideal("R=[a,b] <0>")), simplex);
  EXPECT_THROW(stanley_reisner_complex(parse_ideal("R=[a] <a^2>")), PreconditionError);
  // The stable complex is the complex of the open neighborhood ideal.
  for (const auto& g : {fixture::p4(), fixture::p6(), fixture::type4_tree()})
    EXPECT_EQ(stanley_reisner_complex(open_neighborhood_ideal(g)), stable_complex(g));
}

TEST(VerifyShelling, SmallCases) {
  auto d = C({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}});
  auto set = [&](Labels l) { return SimplicialComplex::set_in(d.ground(), l); };
  auto good = verify_shelling(d, {set({"a", "b"}), set({"b", "c"}), set({"c", "d"})}, true);
  EXPECT_TRUE(good.valid());
  ASSERT_EQ(good.witnesses.size(), 3u);
  EXPECT_TRUE(good.witnesses[0].restriction.empty());
  ASSERT_EQ(good.witnesses[2].restriction.size(), 1u);
  EXPECT_EQ(d.ground()[good.witnesses[2].restriction[0].first], "d");
  EXPECT_EQ(good.witnesses[2].restriction[0].second, 1u);

  auto bad = verify_shelling(d, {set({"a", "b"}), set({"c", "d"}), set({"b", "c"})});
  EXPECT_FALSE(bad.valid());
  EXPECT_FALSE(bad.condition_ii);
  EXPECT_FALSE(bad.reformulation);
  EXPECT_EQ(bad.failure, std::make_pair(std::size_t{0}, std::size_t{1}));

  EXPECT_THROW(verify_shelling(d, {set({"a", "b"}), set({"b", "c"})}), PreconditionError);
  EXPECT_THROW(verify_shelling(d, {set({"a", "b"}), set({"b", "c"}), set({"a", "c"})}), PreconditionError);
  EXPECT_FALSE(verify_shelling(stable_complex(fixture::p4()), stable_complex(fixture::p4()).facets()).pure);
}

TEST(BruteForceShellable, Examples) {
  auto two_edges = C({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}});
  EXPECT_FALSE(brute_force_shellable(two_edges).has_value());
  auto path = C({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}, {"b", "c"}});
  auto order = brute_force_shellable(path);
  ASSERT_TRUE(order.has_value());
  EXPECT_TRUE(verify_shelling(path, *order).valid());
  EXPECT_FALSE(brute_force_shellable(stable_complex(fixture::p4())).has_value());
  EXPECT_TRUE(brute_force_shellable(C({"a"}, {})).has_value());
  Labels ground;
  Facets many;
  for (int i = 0; i < 13; ++i) {
    ground.push_back("x" + std::to_string(i));
    many.push_back({ground.back()});
  }
  EXPECT_THROW(brute_force_shellable(C(ground, many)), CapExceeded);
}

TEST(BruteForceShellable, AgreesWithOrderChecks) {
  // Whenever the search finds an order, the checker accepts it; whenever it
  // does not, no facet permutation tried at random passes either.
  Lcg rng(23);
  int shellable = 0, not_shellable = 0;
  for (int i = 0; i < 300; ++i) {
    auto d = random_complex(rng, 3 + rng.below(4), 1 + rng.below(7), true);
    auto order = brute_force_shellable(d);
    if (order) {
      ++shellable;
      EXPECT_TRUE(verify_shelling(d, *order).valid());
    } else {
      ++not_shellable;
      std::vector<VertexSet> perm = d.facets();
      for (int k = 0; k < 20; ++k) {
        for (std::size_t a = perm.size(); a > 1; --a) std::swap(perm[a - 1], perm[rng.below(a)]);
        EXPECT_FALSE(verify_shelling(d, perm).valid());
      }
    }
  }
  EXPECT_GT(shellable, 0);
  EXPECT_GT(not_shellable, 0);
}

TEST(FacetVectors, OrderExample) {
  EXPECT_TRUE(facet_vector_less({1, 2, 1, 2}, {3, 1, 2, 1}));
  EXPECT_FALSE(facet_vector_less({3, 1, 2, 1}, {1, 2, 1, 2}));
  EXPECT_TRUE(facet_vector_less({1, 1, 2}, {1, 2, 1}));
  EXPECT_TRUE(facet_vector_less({1, 1, 3}, {2, 1, 1}));
  EXPECT_TRUE(facet_vector_less({1, 1, 1}, {1, 1, 2}));
}

TEST(ShellingOrder, P6) {
  auto s = shelling_order(Tree(fixture::p6()));
  EXPECT_EQ(s.vectors, (std::vector<FacetVector>{{1, 1}, {1, 2}, {2, 1}}));
  EXPECT_EQ(s.facet_labels(), (Facets{{"0", "6"}, {"0", "4"}, {"2", "6"}}));
  EXPECT_TRUE(verify_shelling(s).valid());
  EXPECT_THROW(shelling_order(Tree(fixture::star(3))), PreconditionError);
  EXPECT_THROW(shelling_order(Tree(fixture::p4())), PreconditionError);
}

TEST(ShellingOrder, ReductionExample) {
  Tree t(fixture::reduction_example());
  auto s = shelling_order(t);
  EXPECT_TRUE(same_facets(s.complex(), even_stable_complex(t)));
  EXPECT_TRUE(verify_shelling(s).valid());
  // Vectors: (a1, a2, a3) with r1 and r2 dominated: a2 = 1, or a1 = a3 = 1.
  for (const auto& v : s.vectors) EXPECT_TRUE(v[1] == 1 || (v[0] == 1 && v[2] == 1));
}

TEST(ShellingOrder, ValidOnUnmixedBalancedTrees) {
  auto trees = height3_unmixed(13, 400, 41);
  ASSERT_GT(trees.size(), 10u);
  for (const auto& t : trees) {
    auto s = shelling_order(t);
    auto d = even_stable_complex(t);
    ASSERT_TRUE(same_facets(s.complex(), d)) << to_edge_list(t.graph());
    EXPECT_EQ(s.facets.size(), d.facet_count());
    auto check = verify_shelling(d, [&] {
      std::vector<VertexSet> o;
      for (const auto& f : s.facet_labels()) o.push_back(SimplicialComplex::set_in(d.ground(), f));
      return o;
    }());
    EXPECT_TRUE(check.valid()) << to_edge_list(t.graph());
    // |F n G| = dim + 1 - #{i : a_i != b_i}.
    const int size = static_cast<int>(s.facets[0].size());
    for (std::size_t a = 0; a < s.facets.size() && a < 40; ++a)
      for (std::size_t b = 0; b < s.facets.size() && b < 40; ++b) {
        int diff = 0;
        for (std::size_t i = 0; i < s.vectors[a].size(); ++i) diff += s.vectors[a][i] != s.vectors[b][i];
        EXPECT_EQ(static_cast<int>(s.facets[a].intersection_size(s.facets[b])), size - diff);
      }
  }
}

TEST(ForestShelling, Components) {
  Forest f(Graph({"a", "b", "c", "d", "z"}, {{"a", "b"}, {"a", "c"}, {"a", "d"}}));
  auto s = forest_shelling(f);
  EXPECT_EQ(s.facet_labels(), (Facets{{"b", "c", "z"}, {"b", "d", "z"}, {"c", "d", "z"}}));
  EXPECT_TRUE(verify_shelling(s).valid());
  EXPECT_THROW(forest_shelling(Forest(fixture::p4())), PreconditionError);
}

TEST(StableShelling, AllUnmixedTreesUpTo12) {
  int checked = 0;
  for (std::size_t n = 1; n <= 12; ++n)
    for (const auto& t : all_trees(n)) {
      if (!is_unmixed_fast(t).unmixed) continue;
      auto s = stable_shelling(t);
      auto d = stable_complex(t.graph());
      ASSERT_TRUE(same_facets(s.complex(), d)) << to_edge_list(t.graph());
      EXPECT_TRUE(verify_shelling(d, s.facets).valid()) << to_edge_list(t.graph());
      ++checked;
    }
  EXPECT_GT(checked, 20);
}

TEST(StableShelling, Type4Tree) {
  Tree t(fixture::type4_tree());
  auto s = stable_shelling(t);
  auto d = stable_complex(t.graph());
  EXPECT_TRUE(verify_shelling(d, s.facets).valid());
  EXPECT_THROW(stable_shelling(Tree(fixture::p4())), PreconditionError);
}
