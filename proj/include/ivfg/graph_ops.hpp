#pragma once

#include <map>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "ivfg/error.hpp"
#include "ivfg/fuzzy_graph.hpp"
#include "ivfg/interval.hpp"

namespace ivfg {

/// Encodes (x1, x2) as "x1<sep>x2". Decoding is unique as long as neither
/// component contains the separator, which `encode` enforces.
struct PairVertexId {
  static constexpr const char* kDefaultSeparator = "|";

  static VertexId encode(const VertexId& first, const VertexId& second, const std::string& sep = kDefaultSeparator) {
    check_separator(sep);
    if (first.find(sep) != std::string::npos || second.find(sep) != std::string::npos) {
      throw Error(ErrorCode::SeparatorCollision, "'" + sep + "' occurs in " + first + " or " + second);
    }
    return first + sep + second;
  }

  static std::pair<VertexId, VertexId> decode(const VertexId& id, const std::string& sep = kDefaultSeparator) {
    check_separator(sep);
    const auto pos = id.find(sep);
    if (pos == std::string::npos || id.find(sep, pos + sep.size()) != std::string::npos) {
      throw Error(ErrorCode::InvalidArgument, "'" + id + "' is not a pair id for separator '" + sep + "'");
    }
    return {id.substr(0, pos), id.substr(pos + sep.size())};
  }

  static void check_separator(const std::string& sep) {
    if (sep.empty() || !is_valid_vertex_id(sep)) {
      throw Error(ErrorCode::InvalidArgument, "separator must be non-empty and free of whitespace");
    }
  }
};

struct ConstructionOptions {
  std::string separator = PairVertexId::kDefaultSeparator;
};

namespace detail {

inline void require_no_separator(const IVFuzzyGraph& g, const std::string& sep) {
  PairVertexId::check_separator(sep);
  for (const auto& id : g.vertices()) {
    if (id.find(sep) != std::string::npos) {
      throw Error(ErrorCode::SeparatorCollision, "vertex '" + id + "' contains separator '" + sep + "'");
    }
  }
}

struct PairGrid {
  std::vector<VertexId> ids;          // row-major over V1 x V2
  std::vector<Interval> memberships;  // rmin(A1(x1), A2(x2))
  std::size_t cols = 0;

  const VertexId& at(std::size_t i, std::size_t j) const { return ids[i * cols + j]; }
};

inline PairGrid pair_vertices(const IVFuzzyGraph& g1, const IVFuzzyGraph& g2, const std::string& sep) {
  require_no_separator(g1, sep);
  require_no_separator(g2, sep);
  PairGrid grid;
  grid.cols = g2.order();
  grid.ids.reserve(g1.order() * g2.order());
  grid.memberships.reserve(g1.order() * g2.order());
  for (std::size_t i = 0; i < g1.order(); ++i) {
    for (std::size_t j = 0; j < g2.order(); ++j) {
      grid.ids.push_back(g1.vertices()[i] + sep + g2.vertices()[j]);
      grid.memberships.push_back(rmin(g1.vertex_membership(i), g2.vertex_membership(j)));
    }
  }
  return grid;
}

/// Edges shared by the Cartesian product and the composition:
///   (x,x2)(x,y2) for x in V1, x2y2 in E2, membership rmin(A1(x), B2(x2y2));
///   (x1,z)(y1,z) for x1y1 in E1, z in V2, membership rmin(B1(x1y1), A2(z)).
inline std::map<Edge, Interval> cartesian_edges(const IVFuzzyGraph& g1, const IVFuzzyGraph& g2, const PairGrid& grid) {
  std::map<Edge, Interval> edges;
  for (std::size_t i = 0; i < g1.order(); ++i) {
    for (const auto& [e2, b2] : g2.edges()) {
      const auto j = g2.index_of(e2.u());
      const auto k = g2.index_of(e2.v());
      edges.emplace(Edge(grid.at(i, j), grid.at(i, k)), rmin(g1.vertex_membership(i), b2));
    }
  }
  for (const auto& [e1, b1] : g1.edges()) {
    const auto i = g1.index_of(e1.u());
    const auto k = g1.index_of(e1.v());
    for (std::size_t z = 0; z < g2.order(); ++z) {
      edges.emplace(Edge(grid.at(i, z), grid.at(k, z)), rmin(b1, g2.vertex_membership(z)));
    }
  }
  return edges;
}

/// Builds a graph from a document whose intervals are valid, without checking
/// the edge bound constraint.
inline IVFuzzyGraph from_document_unchecked(const GraphDocument& doc) {
  std::vector<VertexId> ids;
  std::vector<Interval> mus;
  ids.reserve(doc.vertices.size());
  mus.reserve(doc.vertices.size());
  for (const auto& v : doc.vertices) {
    ids.push_back(v.id);
    mus.emplace_back(v.lo, v.hi);
  }
  std::map<Edge, Interval> edges;
  for (const auto& e : doc.edges) edges.emplace(Edge(e.u, e.v), Interval(e.lo, e.hi));
  return IVFuzzyGraph::from_parts_unchecked(std::move(ids), std::move(mus), std::move(edges));
}

struct RawBounds {
  Rational lo;
  Rational hi;
};

inline RawBounds raw_max(const RawBounds& a, const RawBounds& b) { return {max(a.lo, b.lo), max(a.hi, b.hi)}; }
inline RawBounds raw_min(const RawBounds& a, const RawBounds& b) { return {min(a.lo, b.lo), min(a.hi, b.hi)}; }

}  // namespace detail

/// G1 x G2 on V1 x V2.
inline IVFuzzyGraph cartesian_product(const IVFuzzyGraph& g1, const IVFuzzyGraph& g2,
                                      const ConstructionOptions& opts = {}) {
  auto grid = detail::pair_vertices(g1, g2, opts.separator);
  auto edges = detail::cartesian_edges(g1, g2, grid);
  return IVFuzzyGraph::from_parts_unchecked(std::move(grid.ids), std::move(grid.memberships), std::move(edges));
}

/// G1[G2]: the Cartesian edges plus every (x1,x2)(y1,y2) with x1y1 in E1 and
/// x2 != y2, weighted min(A2(x2), A2(y2), B1(x1y1)). The two families never
/// share a pair: Cartesian edges agree in one coordinate, the extra family in neither.
inline IVFuzzyGraph composition(const IVFuzzyGraph& g1, const IVFuzzyGraph& g2, const ConstructionOptions& opts = {}) {
  auto grid = detail::pair_vertices(g1, g2, opts.separator);
  auto edges = detail::cartesian_edges(g1, g2, grid);
  for (const auto& [e1, b1] : g1.edges()) {
    const auto i = g1.index_of(e1.u());
    const auto k = g1.index_of(e1.v());
    for (std::size_t x2 = 0; x2 < g2.order(); ++x2) {
      for (std::size_t y2 = 0; y2 < g2.order(); ++y2) {
        if (x2 == y2) continue;
        const Interval mu = rmin(rmin(g2.vertex_membership(x2), g2.vertex_membership(y2)), b1);
        const bool fresh = edges.emplace(Edge(grid.at(i, x2), grid.at(k, y2)), mu).second;
        if (!fresh) throw Error(ErrorCode::InvalidArgument, "composition edge families overlap");
      }
    }
  }
  return IVFuzzyGraph::from_parts_unchecked(std::move(grid.ids), std::move(grid.memberships), std::move(edges));
}

/// Union of raw documents: one-sided memberships are copied, shared vertices and
/// edges take the componentwise maximum. Bounds are not checked, so this also
/// serves documents that are not valid graphs.
inline GraphDocument union_documents(const GraphDocument& d1, const GraphDocument& d2) {
  using detail::RawBounds;
  std::vector<VertexId> order;
  std::unordered_map<VertexId, RawBounds> vertex_mu;
  auto add_vertices = [&](const GraphDocument& d) {
    std::unordered_set<VertexId> local;
    for (const auto& v : d.vertices) {
      if (!local.insert(v.id).second) throw Error(ErrorCode::InvalidArgument, "duplicate vertex " + v.id);
      const RawBounds mu{v.lo, v.hi};
      auto [it, fresh] = vertex_mu.emplace(v.id, mu);
      if (fresh) {
        order.push_back(v.id);
      } else {
        it->second = detail::raw_max(it->second, mu);
      }
    }
  };
  add_vertices(d1);
  add_vertices(d2);

  std::map<Edge, RawBounds> edge_mu;
  auto add_edges = [&](const GraphDocument& d) {
    std::set<Edge> local;
    for (const auto& e : d.edges) {
      Edge key(e.u, e.v);
      if (!local.insert(key).second) throw Error(ErrorCode::InvalidArgument, "duplicate edge " + key.to_string());
      const RawBounds mu{e.lo, e.hi};
      auto [it, fresh] = edge_mu.emplace(std::move(key), mu);
      if (!fresh) it->second = detail::raw_max(it->second, mu);
    }
  };
  add_edges(d1);
  add_edges(d2);

  GraphDocument out;
  for (const auto& id : order) out.vertices.push_back({id, vertex_mu[id].lo, vertex_mu[id].hi});
  for (const auto& [e, mu] : edge_mu) out.edges.push_back({e.u(), e.v(), mu.lo, mu.hi});
  return out;
}

/// Join of raw documents over disjoint vertex sets: the union plus every cross
/// pair xy (x in V1, y in V2) weighted rmin(A1(x), A2(y)).
inline GraphDocument join_documents(const GraphDocument& d1, const GraphDocument& d2) {
  std::unordered_set<VertexId> left;
  for (const auto& v : d1.vertices) left.insert(v.id);
  for (const auto& v : d2.vertices) {
    if (left.count(v.id) != 0) throw Error(ErrorCode::NonDisjointVertexSets, "vertex " + v.id + " occurs in both");
  }
  GraphDocument out = union_documents(d1, d2);
  std::map<Edge, detail::RawBounds> cross;
  for (const auto& x : d1.vertices) {
    for (const auto& y : d2.vertices) {
      cross.emplace(Edge(x.id, y.id), detail::raw_min({x.lo, x.hi}, {y.lo, y.hi}));
    }
  }
  std::map<Edge, detail::RawBounds> all;
  for (const auto& e : out.edges) all.emplace(Edge(e.u, e.v), detail::RawBounds{e.lo, e.hi});
  all.merge(cross);
  out.edges.clear();
  for (const auto& [e, mu] : all) out.edges.push_back({e.u(), e.v(), mu.lo, mu.hi});
  return out;
}

/// G1 u G2. Overlapping ids denote the same vertex; no renaming is done.
inline IVFuzzyGraph graph_union(const IVFuzzyGraph& g1, const IVFuzzyGraph& g2) {
  return detail::from_document_unchecked(union_documents(to_document(g1), to_document(g2)));
}

/// G1 + G2. Requires disjoint vertex sets.
inline IVFuzzyGraph graph_join(const IVFuzzyGraph& g1, const IVFuzzyGraph& g2) {
  return detail::from_document_unchecked(join_documents(to_document(g1), to_document(g2)));
}

}  // namespace ivfg
