#include <gtest/gtest.h>

#include "oracles.hpp"
#include "wtd/algebra_type.hpp"
#include "wtd/construct.hpp"
#include "wtd/tree_enum.hpp"

using namespace wtd;

namespace {

using Labels = std::vector<std::string>;

// Socle by scanning the full exponent box below the given bounds.
std::uint64_t socle_by_box(const MonomialIdeal& i, const std::vector<unsigned>& bounds) {
  const auto& vars = i.ambient();
  std::vector<unsigned> e(vars.size(), 0);
  auto mono = [&](const std::vector<unsigned>& x) {
    Monomial m;
    for (std::size_t k = 0; k < vars.size(); ++k)
      if (x[k]) m = m * Monomial::power(vars[k], x[k]);
    return m;
  };
  std::uint64_t count = 0;
  for (;;) {
    if (!i.contains(mono(e))) {
      bool top = true;
      for (std::size_t k = 0; k < vars.size(); ++k) {
        auto f = e;
        ++f[k];
        top = top && i.contains(mono(f));
      }
      count += top;
    }
    std::size_t k = 0;
    while (k < vars.size() && ++e[k] == bounds[k]) e[k++] = 0;
    if (k == vars.size()) break;
  }
  return count;
}

std::vector<Labels> sorted(std::vector<Labels> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Interior of the running example: a star on {v1, v2, v9}, a height-3 tree
// with tops joined through v19 and v20, and the isolated v24. Names of the
// unlabeled centers are placeholders.
Forest running_blue_interior() {
  return Forest(Graph({"o1", "v1", "v2", "v9", "o2", "o3", "o4", "v4", "v5", "v14", "v19", "v20", "v24"},
                      {{"o1", "v1"}, {"o1", "v2"}, {"o1", "v9"}, {"o2", "v4"}, {"o2", "v19"}, {"o3", "v5"},
                       {"o3", "v14"}, {"o3", "v20"}, {"o4", "v19"}, {"o4", "v20"}}));
}

}  // namespace

TEST(ArtinianReduction, ReductionExample) {
  auto a = artinian_reduction(Tree(fixture::reduction_example()));
  EXPECT_EQ(a.height, 3);
  EXPECT_EQ(a.variables, (Labels{"u1", "u2", "u3"}));
  EXPECT_TRUE(equals(a.ideal, parse_ideal("R=[u1,u2,u3] <u1^4, u2^2, u3^3, u1*u2, u2*u3>")));
  EXPECT_EQ(a.substitution.at("l12"), "u1");
  EXPECT_EQ(a.substitution.at("u3"), "u3");
  EXPECT_EQ(a.substitution.size(), 9u);  // exactly V_even
}

TEST(ArtinianReduction, P6StarAndSingleVertex) {
  auto p6 = artinian_reduction(Tree(fixture::p6()));
  EXPECT_TRUE(equals(p6.ideal, parse_ideal("R=[u1,u2] <u1^2, u2^2, u1*u2>")));
  auto star = artinian_reduction(Tree(fixture::star(3)));
  EXPECT_EQ(star.ideal.to_string(), "R=[l] <l^3>");
  auto v = artinian_reduction(Tree(fixture::single_vertex()));
  EXPECT_TRUE(v.ideal.is_zero());
  EXPECT_EQ(socle_dimension(v), 1u);
  EXPECT_THROW(artinian_reduction(Tree(fixture::p4())), PreconditionError);
  EXPECT_THROW(artinian_reduction(Tree(fixture::p5())), PreconditionError);
}

TEST(Socle, Examples) {
  EXPECT_EQ(socle_dimension(parse_ideal("R=[u1,u2,u3] <u1^4, u2^2, u3^3, u1*u2, u2*u3>")), 2u);
  EXPECT_EQ(socle_dimension(parse_ideal("R=[u1,u2] <u1^2, u2^2, u1*u2>")), 2u);
  EXPECT_EQ(socle_dimension(parse_ideal("R=[x] <x^5>")), 1u);
  EXPECT_THROW(socle_dimension(parse_ideal("R=[x,y] <x^2, x*y>")), PreconditionError);
  EXPECT_THROW(socle_dimension(parse_ideal("R=[x,y,z] <x^9, y^9, z^9>"), 100), CapExceeded);
}

TEST(Socle, MatchesBoxScan) {
  Lcg rng(13);
  for (int i = 0; i < 200; ++i) {
    std::size_t n = 1 + rng.below(3);
    Labels vars;
    std::vector<Monomial> gens;
    std::vector<unsigned> bounds;
    for (std::size_t k = 0; k < n; ++k) {
      vars.push_back("x" + std::to_string(k));
      bounds.push_back(1 + static_cast<unsigned>(rng.below(4)));
      gens.push_back(Monomial::power(vars.back(), bounds.back()));
    }
    for (std::size_t g = rng.below(4); g > 0; --g) {
      Monomial m;
      for (std::size_t k = 0; k < n; ++k)
        if (auto e = static_cast<unsigned>(rng.below(3))) m = m * Monomial::power(vars[k], e);
      gens.push_back(m);
    }
    MonomialIdeal ideal(vars, gens);
    if (ideal.is_unit()) continue;
    EXPECT_EQ(socle_dimension(ideal), socle_by_box(ideal, bounds)) << ideal.to_string();
  }
}

TEST(ParametricDecomposition, Examples) {
  auto a = artinian_reduction(Tree(fixture::reduction_example()));
  auto d = parametric_decomposition(a);
  EXPECT_EQ(sorted(d.components), (std::vector<Labels>{{"u1", "u3"}, {"u2"}}));
  ASSERT_TRUE(d.shared.has_value());
  EXPECT_TRUE(equals(*d.shared, parse_ideal("R=[u1,u2,u3] <u1^4, u2^2, u3^3>")));
  auto p6 = parametric_decomposition(artinian_reduction(Tree(fixture::p6())));
  EXPECT_EQ(sorted(p6.components), (std::vector<Labels>{{"u1"}, {"u2"}}));
  EXPECT_TRUE(equals(*p6.shared, parse_ideal("R=[u1,u2] <u1^2, u2^2>")));
  auto star = parametric_decomposition(artinian_reduction(Tree(fixture::star(4))));
  ASSERT_EQ(star.size(), 1u);
  EXPECT_TRUE(star.components[0].empty());
  EXPECT_TRUE(equals(star.to_ideal(), *star.shared));
}

TEST(MinimalV3Sets, Examples) {
  Graph p6 = fixture::p6();
  auto f = minimal_v3_td_sets(Forest(p6));
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(p6.labels_of(f[0]), (Labels{"2"}));
  EXPECT_EQ(p6.labels_of(f[1]), (Labels{"4"}));
  auto star = minimal_v3_td_sets(Forest(fixture::star(3)));
  ASSERT_EQ(star.size(), 1u);
  EXPECT_TRUE(star[0].empty());
  Forest blue = running_blue_interior();
  auto fam = minimal_v3_td_sets(blue);
  std::vector<Labels> got;
  for (const auto& s : fam) got.push_back(blue.graph().labels_of(s));
  EXPECT_EQ(sorted(got), (std::vector<Labels>{{"v19"}, {"v20"}}));
  EXPECT_THROW(minimal_v3_td_sets(Forest(fixture::p5())), PreconditionError);
}

TEST(ForestReduction, SocleMultiplies) {
  Forest blue = running_blue_interior();
  auto whole = artinian_reduction(blue);
  std::uint64_t product = 1;
  for (const auto& c : component_trees(blue)) product *= socle_dimension(artinian_reduction(c));
  EXPECT_EQ(socle_dimension(whole), product);
  EXPECT_EQ(product, 2u);
  // Two copies of the reduction example: 2 * 2.
  Graph g = fixture::reduction_example();
  std::vector<LabeledEdge> twice;
  for (const auto& [a, b] : g.labeled_edges()) {
    twice.emplace_back("a" + a, "a" + b);
    twice.emplace_back("b" + a, "b" + b);
  }
  EXPECT_EQ(socle_dimension(artinian_reduction(Forest(Graph::from_edges(twice)))), 4u);
}

TEST(CmType, Examples) {
  auto p6 = cm_type(Tree(fixture::p6()));
  EXPECT_EQ(p6.type, 2u);
  EXPECT_EQ(p6.blue.m * p6.red.m, 2u);
  EXPECT_EQ(std::max(p6.blue.m, p6.red.m), 2u);
  EXPECT_EQ(p6.dim, 3);  // facets of S(P_6) have 3 vertices
  EXPECT_EQ(p6.depth, 3);
  auto t4 = cm_type(Tree(fixture::type4_tree()));
  EXPECT_EQ(t4.type, 4u);
  EXPECT_EQ(t4.blue.m, 2u);
  EXPECT_EQ(t4.red.m, 2u);
  EXPECT_EQ(t4.socle, 4u);
  EXPECT_EQ(cm_type(Tree(fixture::star(3))).type, 1u);
  EXPECT_EQ(cm_type(Tree(parse_graph("a b"))).type, 1u);
  EXPECT_THROW(cm_type(Tree(fixture::p4())), PreconditionError);
  EXPECT_THROW(cm_type(Tree(fixture::single_vertex())), PreconditionError);
}

TEST(CmType, Type4TreeInteriorSets) {
  Tree t(fixture::type4_tree());
  auto r = cm_type(t);
  std::vector<std::vector<Labels>> sides{sorted(r.blue.v3_sets), sorted(r.red.v3_sets)};
  std::sort(sides.begin(), sides.end());
  EXPECT_EQ(sides[0], (std::vector<Labels>{{"u1"}, {"u2"}}));
  EXPECT_EQ(sides[1], (std::vector<Labels>{{"u3", "u5"}, {"u4"}}));
}

TEST(CmType, TypeEqualsSocleOnGeneratedTrees) {
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    auto [t, trace] = generate(seed, seed % 12);
    auto a = artinian_reduction(t);
    auto fam = minimal_v3_td_sets(t);
    EXPECT_EQ(fam.size(), socle_dimension(a));
    if (fam.size() <= 16) {
      auto d = parametric_decomposition(a);  // verifies the re-expansion
      EXPECT_EQ(d.size(), fam.size());
    }
    auto r = cm_type(t);
    EXPECT_EQ(r.type, fam.size());
  }
}

TEST(CmType, AllUnmixedTreesUpTo12) {
  for (std::size_t n = 2; n <= 12; ++n)
    for (const auto& t : all_trees(n)) {
      if (!is_unmixed_fast(t).unmixed) continue;
      auto r = cm_type(t);  // throws on disagreement
      EXPECT_EQ(r.type, r.socle);
      auto td = oracle::minimal_td_sets(t.graph());
      EXPECT_EQ(r.dim, static_cast<int>(t.size() - td[0].size()));
    }
}

TEST(Dimension, EvenVerticesMinusSupports) {
  // For an unmixed balanced height-3 tree: dim = |V_even| - |V_2| = |V_0|, and
  // every minimal TD-set is V_1 plus a minimal odd-TD-set.
  for (std::uint64_t seed = 200; seed < 240; ++seed) {
    Tree t = generate(seed, seed % 8).first;
    const Graph& g = t.graph();
    HeightMap h = heights(t);
    auto odd = minimal_s_td_sets(g, h.odd());
    for (const auto& d : odd) EXPECT_EQ(h.even().size() - d.size(), h.level(0).size());
    std::vector<VertexSet> want;
    for (const auto& d : odd) want.push_back(d | h.level(1));
    sort_canonical(want);
    EXPECT_EQ(minimal_td_sets(g).sets, want);
  }
}
