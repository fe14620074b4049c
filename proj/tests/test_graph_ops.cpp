#include <gtest/gtest.h>

#include <set>

#include "ivfg/fixtures.hpp"
#include "ivfg/graph_ops.hpp"
#include "support.hpp"

using namespace ivfg;
using fixtures::q;

namespace {

Interval iv(const char* lo, const char* hi) { return {q(lo), q(hi)}; }

VertexId pv(const char* a, const char* b) { return PairVertexId::encode(a, b); }

using CrispEdges = std::set<Edge>;

// Crisp constructions spelled out over vertex pairs.
CrispEdges crisp_product(const CrispGraph& g1, const CrispGraph& g2, bool composition) {
  CrispEdges out;
  for (const auto& x1 : g1.vertices) {
    for (const auto& x2 : g2.vertices) {
      for (const auto& y1 : g1.vertices) {
        for (const auto& y2 : g2.vertices) {
          if (x1 == y1 && x2 == y2) continue;
          const bool e1 = x1 != y1 && g1.edges.count(Edge(x1, y1)) != 0;
          const bool e2 = x2 != y2 && g2.edges.count(Edge(x2, y2)) != 0;
          const bool cart = (x1 == y1 && e2) || (x2 == y2 && e1);
          const bool extra = composition && e1 && x2 != y2;
          if (cart || extra) out.insert(Edge(PairVertexId::encode(x1, x2), PairVertexId::encode(y1, y2)));
        }
      }
    }
  }
  return out;
}

CrispEdges crisp_union(const CrispGraph& g1, const CrispGraph& g2) {
  CrispEdges out = g1.edges;
  out.insert(g2.edges.begin(), g2.edges.end());
  return out;
}

CrispEdges crisp_join(const CrispGraph& g1, const CrispGraph& g2) {
  CrispEdges out = crisp_union(g1, g2);
  for (const auto& x : g1.vertices) {
    for (const auto& y : g2.vertices) out.insert(Edge(x, y));
  }
  return out;
}

}  // namespace

TEST(PairVertexId, EncodeDecode) {
  EXPECT_EQ(PairVertexId::encode("a", "c"), "a|c");
  EXPECT_EQ(PairVertexId::decode("a|c"), std::make_pair(VertexId("a"), VertexId("c")));
  EXPECT_EQ(PairVertexId::encode("a", "c", "::"), "a::c");
  EXPECT_THROW(PairVertexId::encode("a|b", "c"), Error);
  EXPECT_THROW(PairVertexId::decode("a|b|c"), Error);
  EXPECT_THROW(PairVertexId::encode("a", "c", ""), Error);
}

TEST(CartesianProduct, ReferenceValues) {
  const auto g = cartesian_product(fixtures::product_left(), fixtures::product_right());
  EXPECT_EQ(g.order(), 4u);
  EXPECT_EQ(g.size(), 4u);
  EXPECT_EQ(g.edge_membership(pv("a", "c"), pv("a", "d")), iv("0.1", "0.3"));
  EXPECT_EQ(g.edge_membership(pv("a", "c"), pv("b", "c")), iv("0.1", "0.2"));
  EXPECT_EQ(g.edge_membership(pv("a", "d"), pv("b", "d")), iv("0.1", "0.2"));
  EXPECT_EQ(g.edge_membership(pv("b", "c"), pv("b", "d")), iv("0.1", "0.3"));
  EXPECT_EQ(g.vertex_membership(pv("a", "c")), iv("0.1", "0.4"));
  EXPECT_EQ(g.vertex_membership(pv("a", "d")), iv("0.2", "0.4"));
  EXPECT_EQ(g.vertex_membership(pv("b", "c")), iv("0.1", "0.4"));
  EXPECT_EQ(g.vertex_membership(pv("b", "d")), iv("0.2", "0.5"));
  EXPECT_FALSE(g.has_edge(pv("a", "c"), pv("b", "d")));
  EXPECT_TRUE(validate(to_document(g)).ok());
}

TEST(CartesianProduct, UnitFactorKeepsMemberships) {
  const auto g1 = fixtures::triangle_xyz();
  const auto unit = fixtures::graph({{"o", "1", "1"}}, {});
  const auto p = cartesian_product(g1, unit);
  ASSERT_EQ(p.order(), g1.order());
  for (const auto& x : g1.vertices()) EXPECT_EQ(p.vertex_membership(x + "|o"), g1.vertex_membership(x));
  for (const auto& [e, mu] : g1.edges()) EXPECT_EQ(p.edge_membership(e.u() + "|o", e.v() + "|o"), mu);
  EXPECT_EQ(p.size(), g1.size());
}

TEST(CartesianProduct, SeparatorCollision) {
  const auto g1 = fixtures::graph({{"a|b", "0.1", "0.2"}}, {});
  try {
    (void)cartesian_product(g1, fixtures::product_right());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SeparatorCollision);
  }
  const auto p = cartesian_product(g1, fixtures::product_right(), {"#"});
  EXPECT_TRUE(p.has_vertex("a|b#c"));
}

TEST(Composition, ReferenceValues) {
  const auto g = composition(fixtures::composition_left(), fixtures::composition_right());
  EXPECT_EQ(g.size(), 6u);
  EXPECT_EQ(g.edge_membership(pv("a", "c"), pv("b", "c")), iv("0.1", "0.4"));
  EXPECT_EQ(g.edge_membership(pv("a", "d"), pv("b", "d")), iv("0.2", "0.4"));
  EXPECT_EQ(g.edge_membership(pv("a", "c"), pv("b", "d")), iv("0.1", "0.4"));
  EXPECT_EQ(g.edge_membership(pv("b", "c"), pv("a", "d")), iv("0.1", "0.4"));
  EXPECT_EQ(g.edge_membership(pv("b", "c"), pv("b", "d")), iv("0.1", "0.3"));
  // min(A1(a).lo = 0.2, B2(cd).lo = 0.1)
  EXPECT_EQ(g.edge_membership(pv("a", "c"), pv("a", "d")), iv("0.1", "0.3"));
  EXPECT_TRUE(validate(to_document(g)).ok());
}

TEST(Composition, NotCommutative) {
  // Read both results over coordinates (x1 in G1, x2 in G2) and compare.
  const auto g1 = fixtures::composition_left();
  const auto g2 = fixtures::composition_right();
  using Coord = std::pair<VertexId, VertexId>;
  auto as_coords = [](const IVFuzzyGraph& g, bool swap) {
    std::map<std::pair<Coord, Coord>, Interval> out;
    for (const auto& [e, mu] : g.edges()) {
      auto u = PairVertexId::decode(e.u());
      auto v = PairVertexId::decode(e.v());
      if (swap) {
        std::swap(u.first, u.second);
        std::swap(v.first, v.second);
      }
      out.emplace(std::minmax(u, v), mu);
    }
    return out;
  };
  const auto ab = as_coords(composition(g1, g2), false);
  const auto ba = as_coords(composition(g2, g1), true);
  EXPECT_NE(ab, ba);
  // (a,c)(b,d) is a cross edge in both orders, bounded by a different edge each time.
  EXPECT_EQ(ab.at(std::minmax(Coord{"a", "c"}, Coord{"b", "d"})), iv("0.1", "0.4"));
  EXPECT_EQ(ba.at(std::minmax(Coord{"a", "c"}, Coord{"b", "d"})), iv("0.1", "0.3"));
}

TEST(Union, ReferenceValues) {
  const auto g = graph_union(fixtures::union_left(), fixtures::union_right());
  EXPECT_EQ(g.edge_membership("a", "b"), iv("0.1", "0.3"));
  EXPECT_EQ(g.edge_membership("b", "d"), iv("0.2", "0.5"));
  EXPECT_EQ(g.vertex_membership("b"), iv("0.4", "0.5"));
  EXPECT_EQ(g.vertex_membership("e"), iv("0.2", "0.6"));
  EXPECT_EQ(g.vertex_membership("f"), iv("0.4", "0.6"));
  EXPECT_EQ(g.vertices(), (std::vector<VertexId>{"a", "b", "c", "d", "e", "f"}));
  EXPECT_TRUE(validate(to_document(g)).ok());
}

TEST(Union, IdempotentAndCommutative) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto g1 = reference::random_graph(seed, 5);
    const auto g2 = reference::random_graph(seed + 1000, 5);
    EXPECT_TRUE(semantically_equal(graph_union(g1, g1), g1));
    EXPECT_TRUE(semantically_equal(graph_union(g1, g2), graph_union(g2, g1)));
  }
}

TEST(Join, ReferenceValues) {
  const auto g = graph_join(fixtures::product_left(), fixtures::product_right());
  EXPECT_EQ(g.edge_membership("a", "c"), iv("0.1", "0.4"));
  EXPECT_EQ(g.edge_membership("b", "d"), iv("0.2", "0.5"));
  EXPECT_EQ(g.edge_membership("a", "b"), iv("0.1", "0.2"));
  EXPECT_EQ(g.size(), 6u);
}

TEST(Join, EmptyOperand) {
  const auto g1 = fixtures::triangle_xyz();
  EXPECT_EQ(graph_join(g1, IVFuzzyGraph{}), g1);
}

TEST(Join, RequiresDisjointVertexSets) {
  try {
    (void)graph_join(fixtures::union_left(), fixtures::union_right());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonDisjointVertexSets);
  }
}

TEST(GraphOpsProperty, ClosureAgainstNaiveValidity) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto g1 = reference::random_graph(seed, 4);
    const auto g2 = reference::random_graph(seed + 5000, 4);
    const auto h = reference::random_graph(seed + 9000, 4, 10, "w");
    EXPECT_TRUE(reference::naive_valid(cartesian_product(g1, g2)));
    EXPECT_TRUE(reference::naive_valid(composition(g1, g2)));
    EXPECT_TRUE(reference::naive_valid(graph_union(g1, g2)));
    EXPECT_TRUE(reference::naive_valid(graph_join(g1, h)));
  }
}

TEST(GraphOpsProperty, CrispShadowCommutes) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto g1 = reference::random_graph(seed, 4);
    const auto g2 = reference::random_graph(seed + 5000, 4, 10, "u");
    const auto c1 = crisp_skeleton(g1);
    const auto c2 = crisp_skeleton(g2);
    EXPECT_EQ(crisp_skeleton(cartesian_product(g1, g2)).edges, crisp_product(c1, c2, false));
    EXPECT_EQ(crisp_skeleton(composition(g1, g2)).edges, crisp_product(c1, c2, true));
    EXPECT_EQ(crisp_skeleton(graph_join(g1, g2)).edges, crisp_join(c1, c2));
    const auto g3 = reference::random_graph(seed + 7000, 4);
    EXPECT_EQ(crisp_skeleton(graph_union(g1, g3)).edges, crisp_union(c1, crisp_skeleton(g3)));
  }
}

TEST(GraphOpsProperty, ProductMembershipsSymmetricUnderSwap) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto g1 = reference::random_graph(seed, 4);
    const auto g2 = reference::random_graph(seed + 3000, 4, 10, "u");
    const auto p = cartesian_product(g1, g2);
    const auto s = cartesian_product(g2, g1);
    for (const auto& x : g1.vertices()) {
      for (const auto& y : g2.vertices()) {
        EXPECT_EQ(p.vertex_membership(PairVertexId::encode(x, y)), s.vertex_membership(PairVertexId::encode(y, x)));
      }
    }
    for (const auto& [e, mu] : p.edges()) {
      const auto [u1, u2] = PairVertexId::decode(e.u());
      const auto [v1, v2] = PairVertexId::decode(e.v());
      EXPECT_EQ(s.edge_membership(PairVertexId::encode(u2, u1), PairVertexId::encode(v2, v1)), mu);
    }
  }
}

TEST(GraphOpsProperty, ValuesMatchDefinitions) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto g1 = reference::random_graph(seed, 4);
    const auto g2 = reference::random_graph(seed + 3000, 4, 10, "u");
    const auto comp = composition(g1, g2);
    for (const auto& x1 : g1.vertices()) {
      for (const auto& x2 : g2.vertices()) {
        for (const auto& y1 : g1.vertices()) {
          for (const auto& y2 : g2.vertices()) {
            if (x1 == y1 && x2 == y2) continue;
            reference::Pair want{Rational(0), Rational(0)};
            if (x1 == y1) {
              want = reference::pmin(reference::naive_vertex(g1, x1), reference::naive_edge(g2, x2, y2));
            } else if (x2 == y2) {
              want = reference::pmin(reference::naive_edge(g1, x1, y1), reference::naive_vertex(g2, x2));
            } else if (g1.has_edge(x1, y1)) {
              want = reference::pmin(reference::pmin(reference::naive_vertex(g2, x2), reference::naive_vertex(g2, y2)),
                                   reference::naive_edge(g1, x1, y1));
            }
            EXPECT_EQ(reference::bounds(comp.edge_membership(PairVertexId::encode(x1, x2), PairVertexId::encode(y1, y2))),
                      want);
          }
        }
      }
    }
  }
}
