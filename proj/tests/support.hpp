#pragma once

// Reference implementations written directly from the definitions, kept apart
// from the library so the tests compare two independent computations.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ivfg/fuzzy_graph.hpp"
#include "ivfg/morphism.hpp"
#include "ivfg/oracle.hpp"

namespace ivfg::reference {

using Pair = std::pair<Rational, Rational>;

inline Pair bounds(const Interval& d) { return {d.lo(), d.hi()}; }

inline Pair pmin(const Pair& a, const Pair& b) { return {std::min(a.first, b.first), std::min(a.second, b.second)}; }

inline bool pleq(const Pair& a, const Pair& b) { return a.first <= b.first && a.second <= b.second; }

/// Edge weight by scanning the edge list; [0,0] when absent.
inline Pair naive_edge(const IVFuzzyGraph& g, const VertexId& u, const VertexId& v) {
  for (const auto& [e, mu] : g.edges()) {
    if ((e.u() == u && e.v() == v) || (e.u() == v && e.v() == u)) return bounds(mu);
  }
  return {Rational(0), Rational(0)};
}

inline Pair naive_vertex(const IVFuzzyGraph& g, const VertexId& x) {
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (g.vertices()[i] == x) return bounds(g.vertex_membership(i));
  }
  throw Error(ErrorCode::UnknownVertex, x);
}

/// Morphism conditions evaluated over every ordered vertex pair.
inline bool naive_is_morphism(const IVFuzzyGraph& g1, const IVFuzzyGraph& g2, const std::map<VertexId, VertexId>& f,
                              MorphismKind kind) {
  const bool eq_nodes = kind == MorphismKind::WeakIsomorphism || kind == MorphismKind::Isomorphism;
  const bool eq_arcs = kind == MorphismKind::WeakCoIsomorphism || kind == MorphismKind::Isomorphism;
  for (const auto& x : g1.vertices()) {
    const Pair a1 = naive_vertex(g1, x);
    const Pair a2 = naive_vertex(g2, f.at(x));
    if (eq_nodes ? a1 != a2 : !pleq(a1, a2)) return false;
  }
  for (const auto& x : g1.vertices()) {
    for (const auto& y : g1.vertices()) {
      if (x == y) continue;
      const Pair b1 = naive_edge(g1, x, y);
      const Pair b2 = f.at(x) == f.at(y) ? Pair{Rational(0), Rational(0)} : naive_edge(g2, f.at(x), f.at(y));
      if (eq_arcs ? b1 != b2 : !pleq(b1, b2)) return false;
    }
  }
  return true;
}

/// Every bijection for the bijective kinds, every injection for homomorphisms.
inline bool brute_force_exists(const IVFuzzyGraph& g1, const IVFuzzyGraph& g2, MorphismKind kind) {
  if (kind != MorphismKind::Homomorphism && g1.order() != g2.order()) return false;
  if (g1.order() > g2.order()) return false;
  std::vector<std::size_t> idx(g2.order());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::set<std::vector<std::size_t>> seen;
  do {
    std::vector<std::size_t> prefix(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(g1.order()));
    if (!seen.insert(prefix).second) continue;
    std::map<VertexId, VertexId> f;
    for (std::size_t i = 0; i < g1.order(); ++i) f[g1.vertices()[i]] = g2.vertices()[prefix[i]];
    if (naive_is_morphism(g1, g2, f, kind)) return true;
  } while (std::next_permutation(idx.begin(), idx.end()));
  return false;
}

/// Edge bound constraint checked pair by pair.
inline bool naive_valid(const IVFuzzyGraph& g) {
  for (const auto& [e, mu] : g.edges()) {
    if (!pleq(bounds(mu), pmin(naive_vertex(g, e.u()), naive_vertex(g, e.v())))) return false;
  }
  for (const auto& mu : g.vertex_memberships()) {
    if (mu.lo() < Rational(0) || mu.hi() > Rational(1) || mu.hi() < mu.lo()) return false;
  }
  return true;
}

inline IVFuzzyGraph random_graph(std::uint64_t seed, std::size_t max_n, std::int64_t grid = 10,
                                 const std::string& prefix = "v", bool complete = false) {
  oracle::GenParams p;
  p.vertex_count = max_n;
  p.membership_grid = grid;
  p.id_prefix = prefix;
  p.complete_only = complete;
  oracle::Rng rng(seed);
  return oracle::generate_up_to(rng, p);
}

}  // namespace ivfg::reference
