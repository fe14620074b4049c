#include <gtest/gtest.h>

#include "ivfg/complete.hpp"
#include "ivfg/fixtures.hpp"
#include "ivfg/graph_ops.hpp"
#include "support.hpp"

using namespace ivfg;
using fixtures::q;

namespace {

Interval iv(const char* lo, const char* hi) { return {q(lo), q(hi)}; }

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidArgument;
}

// Complement evaluated pair by pair from the case split.
std::map<Edge, reference::Pair> naive_complement_edges(const IVFuzzyGraph& g) {
  std::map<Edge, reference::Pair> out;
  for (std::size_t i = 0; i < g.order(); ++i) {
    for (std::size_t j = i + 1; j < g.order(); ++j) {
      const auto& x = g.vertices()[i];
      const auto& y = g.vertices()[j];
      const auto b = reference::naive_edge(g, x, y);
      const auto m = reference::pmin(reference::naive_vertex(g, x), reference::naive_vertex(g, y));
      const reference::Pair c{b.first > Rational(0) ? Rational(0) : m.first, b.second > Rational(0) ? Rational(0) : m.second};
      if (c.first != Rational(0) || c.second != Rational(0)) out.emplace(Edge(x, y), c);
    }
  }
  return out;
}

}  // namespace

TEST(IsComplete, ReferenceGraphs) {
  EXPECT_TRUE(is_complete(fixtures::complete_triangle_xyz()));
  EXPECT_FALSE(is_complete(fixtures::triangle_xyz()));
  EXPECT_TRUE(is_complete(fixtures::graph({{"a", "0.1", "0.2"}, {"b", "0.3", "0.4"}}, {})));
  EXPECT_TRUE(is_complete(IVFuzzyGraph{}));
}

TEST(Complement, PathAbc) {
  const auto g = fixtures::path_abc();
  const auto c = complement(g);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c.edge_membership("a", "c"), iv("0.1", "0.3"));
  EXPECT_EQ(c.vertex_memberships(), g.vertex_memberships());
  EXPECT_EQ(complement(c), g);
}

TEST(Complement, FullCompleteGraphGoesEdgeless) {
  const auto c = complement(fixtures::complete_triangle_xyz());
  EXPECT_EQ(c.size(), 0u);
  EXPECT_EQ(c.order(), 3u);
}

TEST(Complement, RequiresComplete) {
  EXPECT_EQ(code_of([] { (void)complement(fixtures::triangle_xyz()); }), ErrorCode::NotComplete);
  EXPECT_EQ(code_of([] { (void)is_self_complementary(fixtures::triangle_xyz()); }), ErrorCode::NotComplete);
}

TEST(Complement, MixedBoundsAreHandledSeparately) {
  // rmin(a,b) = [0,0.4]: the lower bound is zero while the upper one is positive.
  const auto g = fixtures::graph({{"a", "0", "0.4"}, {"b", "0.3", "0.5"}}, {{"a", "b", "0", "0.4"}});
  ASSERT_TRUE(is_complete(g));
  // lo: B.lo = 0 -> min lo = 0; hi: B.hi > 0 -> 0.
  EXPECT_EQ(complement(g).size(), 0u);
  // Absent pair with the same bounds: lo stays 0, hi is filled.
  const auto h = fixtures::graph({{"a", "0", "0.4"}, {"b", "0.3", "0.5"}}, {});
  EXPECT_EQ(complement(h).edge_membership("a", "b"), iv("0", "0.4"));
  EXPECT_TRUE(is_self_complementary(h));
}

TEST(SelfComplementary, ReferenceGraphs) {
  EXPECT_TRUE(is_self_complementary(fixtures::path_abc()));
  EXPECT_TRUE(is_self_complementary(fixtures::complete_triangle_xyz()));
  EXPECT_FALSE(is_strongly_self_complementary(fixtures::path_abc()));
  EXPECT_TRUE(is_strongly_self_complementary(fixtures::constant_path4()));
  EXPECT_TRUE(is_strongly_self_complementary(fixtures::graph({{"a", "0.2", "0.3"}}, {})));
}

TEST(SelfComplementary, TwoVertexExhaustive) {
  // Every complete 2-vertex graph on grid 4, compared against the naive case split.
  std::size_t checked = 0;
  for (std::size_t n : {0u, 1u, 2u, 3u}) {
    oracle::enumerate_graphs(n, n == 3 ? 2 : 4, [&](const IVFuzzyGraph& g) {
      if (!is_complete(g)) return;
      ++checked;
      const auto c = complement(g);
      std::map<Edge, reference::Pair> got;
      for (const auto& [e, mu] : c.edges()) got.emplace(e, reference::bounds(mu));
      EXPECT_EQ(got, naive_complement_edges(g));
      const auto cc = naive_complement_edges(c);
      std::map<Edge, reference::Pair> orig;
      for (const auto& [e, mu] : g.edges()) {
        if (!mu.is_zero()) orig.emplace(e, reference::bounds(mu));
      }
      EXPECT_EQ(is_self_complementary(g), cc == orig);
    });
  }
  EXPECT_GT(checked, 100u);
}

TEST(SumIdentity, ReferenceValues) {
  const auto p = sum_identity(fixtures::path_abc());
  EXPECT_EQ(p.lhs_lo, q("0.3"));
  EXPECT_EQ(p.lhs_hi, q("0.7"));
  EXPECT_EQ(p.rhs_lo, q("0.4"));
  EXPECT_EQ(p.rhs_hi, q("1.0"));
  EXPECT_FALSE(p.literal_holds);
  EXPECT_FALSE(p.halved_holds);

  const auto c = sum_identity(fixtures::constant_path4());
  EXPECT_EQ(c.lhs_lo, q("0.9"));
  EXPECT_EQ(c.rhs_lo, q("1.8"));
  EXPECT_EQ(c.lhs_hi, q("1.5"));
  EXPECT_EQ(c.rhs_hi, q("3"));
  EXPECT_TRUE(c.halved_holds);
  EXPECT_FALSE(c.literal_holds);

  const auto one = sum_identity(fixtures::graph({{"a", "0.2", "0.3"}}, {}));
  EXPECT_EQ(one.lhs_lo, Rational(0));
  EXPECT_EQ(one.rhs_hi, Rational(0));
  EXPECT_TRUE(one.literal_holds);
  EXPECT_TRUE(one.halved_holds);
}

TEST(AllPairsSelfComplementary, Hypothesis) {
  EXPECT_TRUE(check_all_pairs_self_complementary(fixtures::complete_triangle_xyz()));
  EXPECT_TRUE(check_all_pairs_self_complementary(
      fixtures::graph({{"a", "0.2", "0.4"}, {"b", "0.3", "0.3"}}, {{"a", "b", "0.2", "0.3"}})));
  EXPECT_EQ(code_of([] { (void)check_all_pairs_self_complementary(fixtures::path_abc()); }), ErrorCode::HypothesisNotMet);
  // A zero rmin pair may be absent.
  EXPECT_TRUE(check_all_pairs_self_complementary(fixtures::graph({{"a", "0", "0"}, {"b", "0.3", "0.3"}}, {})));
}

TEST(CompleteProperty, CompositionOfCompleteIsComplete) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const auto g = reference::random_graph(seed, 4, 10, "v", true);
    ASSERT_TRUE(is_complete(g));
    EXPECT_TRUE(is_complete(composition(g, g)));
  }
}

TEST(CompleteProperty, ComplementIsomorphism) {
  oracle::Rng rng(17);
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const auto g1 = reference::random_graph(seed, 5, 3, "v", true);
    const auto g2 = seed % 2 == 0 ? oracle::relabel(g1, oracle::random_permutation(rng, g1.order()), "u")
                                  : reference::random_graph(seed + 400, 5, 3, "u", true);
    EXPECT_EQ(are_isomorphic(g1, g2), are_isomorphic(complement(g1), complement(g2)));
  }
}

TEST(CompleteProperty, HalvedIdentityOnStronglySelfComplementary) {
  std::size_t hits = 0;
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    auto g = reference::random_graph(seed, 5, 2, "v", true);
    if (!is_strongly_self_complementary(g)) continue;
    ++hits;
    EXPECT_TRUE(sum_identity(g).halved_holds) << serialize(g);
  }
  EXPECT_GT(hits, 0u);
}
