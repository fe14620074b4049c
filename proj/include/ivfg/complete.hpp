#pragma once

#include <map>
#include <string>

#include "ivfg/error.hpp"
#include "ivfg/fuzzy_graph.hpp"
#include "ivfg/interval.hpp"
#include "ivfg/morphism.hpp"

namespace ivfg {

/// Every stored edge attains rmin of its endpoints on both bounds.
inline bool is_complete(const IVFuzzyGraph& g) {
  for (const auto& [e, mu] : g.edges()) {
    if (mu != rmin(g.vertex_membership(e.u()), g.vertex_membership(e.v()))) return false;
  }
  return true;
}

/// Complement of a complete graph. Each bound is handled on its own: a positive
/// bound becomes 0, a zero bound becomes the min of the endpoint bounds. Pairs
/// whose result is [0,0] are left out of the edge map.
inline IVFuzzyGraph complement(const IVFuzzyGraph& g) {
  if (!is_complete(g)) throw Error(ErrorCode::NotComplete, "complement is defined for complete graphs only");
  const auto& vs = g.vertices();
  std::map<Edge, Interval> edges;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      const Interval b = g.edge_membership(vs[i], vs[j]);
      const Interval bound = rmin(g.vertex_membership(i), g.vertex_membership(j));
      const Rational lo = b.lo().is_positive() ? Rational(0) : bound.lo();
      const Rational hi = b.hi().is_positive() ? Rational(0) : bound.hi();
      // On a complete graph b.lo == 0 implies bound.lo == 0, so lo <= hi holds.
      const Interval mu(lo, hi);
      if (!mu.is_zero()) edges.emplace(Edge(vs[i], vs[j]), mu);
    }
  }
  return IVFuzzyGraph::from_parts_unchecked(vs, g.vertex_memberships(), std::move(edges));
}

/// Double complement equals the graph. Comparison is on totalized edge
/// membership, so a stored [0,0] edge counts the same as an absent one.
inline bool is_self_complementary(const IVFuzzyGraph& g) { return semantically_equal(complement(complement(g)), g); }

/// The graph is isomorphic to its complement.
inline bool is_strongly_self_complementary(const IVFuzzyGraph& g, const SearchOptions& opts = {}) {
  return find_morphism(g, complement(g), MorphismKind::Isomorphism, opts).has_value();
}

/// Sums over unordered pairs x != y; absent edges contribute 0.
struct SumIdentityReport {
  Rational lhs_lo;  // sum of B lower bounds
  Rational lhs_hi;
  Rational rhs_lo;  // sum of min(A(x), A(y)) lower bounds
  Rational rhs_hi;
  bool literal_holds = false;  // lhs == rhs
  bool halved_holds = false;   // 2 lhs == rhs
};

inline SumIdentityReport sum_identity(const IVFuzzyGraph& g) {
  SumIdentityReport r;
  const auto& vs = g.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      const Interval b = g.edge_membership(vs[i], vs[j]);
      const Interval m = rmin(g.vertex_membership(i), g.vertex_membership(j));
      r.lhs_lo += b.lo();
      r.lhs_hi += b.hi();
      r.rhs_lo += m.lo();
      r.rhs_hi += m.hi();
    }
  }
  r.literal_holds = r.lhs_lo == r.rhs_lo && r.lhs_hi == r.rhs_hi;
  r.halved_holds = Rational(2) * r.lhs_lo == r.rhs_lo && Rational(2) * r.lhs_hi == r.rhs_hi;
  return r;
}

/// True iff every unordered pair (stored or not) carries rmin of its endpoints.
inline bool all_pairs_at_rmin(const IVFuzzyGraph& g) {
  const auto& vs = g.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (g.edge_membership(vs[i], vs[j]) != rmin(g.vertex_membership(i), g.vertex_membership(j))) return false;
    }
  }
  return true;
}

/// If every pair of vertices carries rmin of its endpoints, the graph is self
/// complementary. Throws HypothesisNotMet when some pair falls short.
inline bool check_all_pairs_self_complementary(const IVFuzzyGraph& g) {
  if (!all_pairs_at_rmin(g)) {
    throw Error(ErrorCode::HypothesisNotMet, "some vertex pair does not carry rmin of its endpoint memberships");
  }
  return is_self_complementary(g);
}

}  // namespace ivfg
