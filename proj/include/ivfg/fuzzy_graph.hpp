#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ivfg/error.hpp"
#include "ivfg/interval.hpp"
#include "ivfg/rational.hpp"

namespace ivfg {

using VertexId = std::string;

/// Non-empty, no whitespace. Separator restrictions are checked by the pair constructions.
inline bool is_valid_vertex_id(const VertexId& id) noexcept {
  if (id.empty()) return false;
  return std::none_of(id.begin(), id.end(), [](unsigned char c) { return std::isspace(c) != 0; });
}

/// Unordered vertex pair stored with the lexicographically smaller id first.
class Edge {
 public:
  Edge(VertexId a, VertexId b) {
    if (a == b) throw Error(ErrorCode::LoopQuery, "loop at " + a);
    if (b < a) std::swap(a, b);
    u_ = std::move(a);
    v_ = std::move(b);
  }

  [[nodiscard]] const VertexId& u() const noexcept { return u_; }
  [[nodiscard]] const VertexId& v() const noexcept { return v_; }

  [[nodiscard]] bool touches(const VertexId& x) const noexcept { return u_ == x || v_ == x; }

  [[nodiscard]] std::string to_string() const { return u_ + "-" + v_; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
  friend bool operator==(const Edge&, const Edge&) = default;

 private:
  VertexId u_;
  VertexId v_;
};

// ---------------------------------------------------------------------------
// Raw document form. Values are unchecked so that out-of-range or inverted
// bounds can be reported by `validate` rather than rejected by the parser.

struct VertexEntry {
  VertexId id;
  Rational lo;
  Rational hi;
  friend bool operator==(const VertexEntry&, const VertexEntry&) = default;
};

struct EdgeEntry {
  VertexId u;
  VertexId v;
  Rational lo;
  Rational hi;
  friend bool operator==(const EdgeEntry&, const EdgeEntry&) = default;
};

struct GraphDocument {
  static constexpr int kVersion = 1;
  int version = kVersion;
  std::vector<VertexEntry> vertices;
  std::vector<EdgeEntry> edges;
  friend bool operator==(const GraphDocument&, const GraphDocument&) = default;
};

// ---------------------------------------------------------------------------

/// Interval-valued fuzzy graph G = (A, B). Immutable once built.
///
/// Absent edges have membership [0,0]. Edges stored with membership [0,0] are
/// kept as crisp edges so that the crisp skeleton of a construction matches
/// the crisp construction.
class IVFuzzyGraph {
 public:
  IVFuzzyGraph() = default;

  /// Builds without checking the edge bound constraint. Structural invariants
  /// (unique ids, known endpoints) are still enforced. Intended for constructions
  /// proven closed, and for test hooks that need a deliberately broken graph.
  static IVFuzzyGraph from_parts_unchecked(std::vector<VertexId> vertices, std::vector<Interval> memberships,
                                           std::map<Edge, Interval> edges) {
    if (vertices.size() != memberships.size()) {
      throw Error(ErrorCode::InvalidArgument, "vertex and membership counts differ");
    }
    IVFuzzyGraph g;
    g.vertices_ = std::move(vertices);
    g.vertex_memberships_ = std::move(memberships);
    g.edges_ = std::move(edges);
    for (std::size_t i = 0; i < g.vertices_.size(); ++i) {
      if (!g.index_.emplace(g.vertices_[i], i).second) {
        throw Error(ErrorCode::InvalidArgument, "duplicate vertex " + g.vertices_[i]);
      }
    }
    for (const auto& [e, mu] : g.edges_) {
      if (!g.has_vertex(e.u()) || !g.has_vertex(e.v())) {
        throw Error(ErrorCode::UnknownVertex, "edge " + e.to_string() + " has an undeclared endpoint");
      }
    }
    return g;
  }

  [[nodiscard]] const std::vector<VertexId>& vertices() const noexcept { return vertices_; }
  [[nodiscard]] std::size_t order() const noexcept { return vertices_.size(); }
  [[nodiscard]] const std::map<Edge, Interval>& edges() const noexcept { return edges_; }
  [[nodiscard]] std::size_t size() const noexcept { return edges_.size(); }

  [[nodiscard]] bool has_vertex(const VertexId& id) const { return index_.count(id) != 0; }

  [[nodiscard]] std::size_t index_of(const VertexId& id) const {
    const auto it = index_.find(id);
    if (it == index_.end()) throw Error(ErrorCode::UnknownVertex, id);
    return it->second;
  }

  [[nodiscard]] const Interval& vertex_membership(std::size_t i) const { return vertex_memberships_.at(i); }
  [[nodiscard]] const Interval& vertex_membership(const VertexId& id) const {
    return vertex_memberships_[index_of(id)];
  }
  [[nodiscard]] const std::vector<Interval>& vertex_memberships() const noexcept { return vertex_memberships_; }

  [[nodiscard]] bool has_edge(const VertexId& u, const VertexId& v) const {
    return u != v && edges_.count(Edge(u, v)) != 0;
  }

  /// B(uv), or [0,0] when uv is not an edge.
  [[nodiscard]] Interval edge_membership(const VertexId& u, const VertexId& v) const {
    if (!has_vertex(u)) throw Error(ErrorCode::UnknownVertex, u);
    if (!has_vertex(v)) throw Error(ErrorCode::UnknownVertex, v);
    if (u == v) throw Error(ErrorCode::LoopQuery, "edge_membership(" + u + ", " + u + ")");
    const auto it = edges_.find(Edge(u, v));
    return it == edges_.end() ? Interval::zero() : it->second;
  }

  [[nodiscard]] std::size_t degree(const VertexId& id) const {
    return static_cast<std::size_t>(
        std::count_if(edges_.begin(), edges_.end(), [&](const auto& kv) { return kv.first.touches(id); }));
  }

  /// Structural equality: same vertex order, memberships, and stored edge map.
  friend bool operator==(const IVFuzzyGraph& a, const IVFuzzyGraph& b) {
    return a.vertices_ == b.vertices_ && a.vertex_memberships_ == b.vertex_memberships_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<VertexId> vertices_;
  std::vector<Interval> vertex_memberships_;
  std::unordered_map<VertexId, std::size_t> index_;
  std::map<Edge, Interval> edges_;
};

inline Interval edge_membership(const IVFuzzyGraph& g, const VertexId& u, const VertexId& v) {
  return g.edge_membership(u, v);
}

/// Same vertex set with equal memberships, and equal totalized edge membership on
/// every pair. Vertex order and explicitly stored [0,0] edges are ignored.
inline bool semantically_equal(const IVFuzzyGraph& a, const IVFuzzyGraph& b) {
  if (a.order() != b.order()) return false;
  for (const auto& x : a.vertices()) {
    if (!b.has_vertex(x) || a.vertex_membership(x) != b.vertex_membership(x)) return false;
  }
  auto nonzero = [](const IVFuzzyGraph& g) {
    std::map<Edge, Interval> out;
    for (const auto& [e, mu] : g.edges()) {
      if (!mu.is_zero()) out.emplace(e, mu);
    }
    return out;
  };
  return nonzero(a) == nonzero(b);
}

// ---------------------------------------------------------------------------

struct CrispGraph {
  std::vector<VertexId> vertices;
  std::set<Edge> edges;
  friend bool operator==(const CrispGraph&, const CrispGraph&) = default;
};

inline CrispGraph crisp_skeleton(const IVFuzzyGraph& g) {
  CrispGraph c;
  c.vertices = g.vertices();
  for (const auto& [e, mu] : g.edges()) c.edges.insert(e);
  return c;
}

// ---------------------------------------------------------------------------
// Validation

enum class ViolationKind {
  InvalidVertexId,
  DuplicateVertex,
  UnknownEndpoint,
  LoopEdge,
  DuplicateEdge,
  MembershipOutOfRange,
  EdgeBoundViolation,
};

constexpr std::string_view to_string(ViolationKind k) noexcept {
  switch (k) {
    case ViolationKind::InvalidVertexId: return "InvalidVertexId";
    case ViolationKind::DuplicateVertex: return "DuplicateVertex";
    case ViolationKind::UnknownEndpoint: return "UnknownEndpoint";
    case ViolationKind::LoopEdge: return "LoopEdge";
    case ViolationKind::DuplicateEdge: return "DuplicateEdge";
    case ViolationKind::MembershipOutOfRange: return "MembershipOutOfRange";
    case ViolationKind::EdgeBoundViolation: return "EdgeBoundViolation";
  }
  return "Unknown";
}

enum class BoundSide { Lower, Upper };

struct Violation {
  ViolationKind kind;
  std::string subject;  // vertex id or "u-v"
  std::optional<BoundSide> side;
  std::string detail;

  [[nodiscard]] std::string to_string() const {
    std::string s(ivfg::to_string(kind));
    s += "(" + subject;
    if (side) s += *side == BoundSide::Lower ? ", lower" : ", upper";
    s += ")";
    if (!detail.empty()) s += ": " + detail;
    return s;
  }
};

struct ValidationResult {
  std::optional<IVFuzzyGraph> graph;
  std::vector<Violation> violations;

  [[nodiscard]] bool ok() const noexcept { return graph.has_value(); }
};

/// Checks every invariant of the document and collects all violations.
inline ValidationResult validate(const GraphDocument& doc) {
  ValidationResult result;
  auto& out = result.violations;

  std::vector<VertexId> ids;
  std::vector<Interval> memberships;
  std::unordered_map<VertexId, std::size_t> index;
  std::vector<bool> vertex_ok;

  for (const auto& ve : doc.vertices) {
    if (!is_valid_vertex_id(ve.id)) {
      out.push_back({ViolationKind::InvalidVertexId, ve.id, std::nullopt, "ids must be non-empty without whitespace"});
      continue;
    }
    if (index.count(ve.id) != 0) {
      out.push_back({ViolationKind::DuplicateVertex, ve.id, std::nullopt, ""});
      continue;
    }
    const bool in_range = Interval::is_valid(ve.lo, ve.hi);
    if (!in_range) {
      out.push_back({ViolationKind::MembershipOutOfRange, ve.id, std::nullopt,
                     "[" + ve.lo.to_string() + "," + ve.hi.to_string() + "] is not in D[0,1]"});
    }
    index.emplace(ve.id, ids.size());
    ids.push_back(ve.id);
    memberships.push_back(in_range ? Interval(ve.lo, ve.hi) : Interval::zero());
    vertex_ok.push_back(in_range);
  }

  std::map<Edge, Interval> edges;
  std::set<Edge> seen;
  for (const auto& ee : doc.edges) {
    const std::string subject = ee.u + "-" + ee.v;
    if (ee.u == ee.v) {
      out.push_back({ViolationKind::LoopEdge, subject, std::nullopt, ""});
      continue;
    }
    const auto iu = index.find(ee.u);
    const auto iv = index.find(ee.v);
    if (iu == index.end() || iv == index.end()) {
      out.push_back({ViolationKind::UnknownEndpoint, subject, std::nullopt,
                     "undeclared vertex " + (iu == index.end() ? ee.u : ee.v)});
      continue;
    }
    const Edge e(ee.u, ee.v);
    if (!seen.insert(e).second) {
      out.push_back({ViolationKind::DuplicateEdge, e.to_string(), std::nullopt, ""});
      continue;
    }
    if (!Interval::is_valid(ee.lo, ee.hi)) {
      out.push_back({ViolationKind::MembershipOutOfRange, e.to_string(), std::nullopt,
                     "[" + ee.lo.to_string() + "," + ee.hi.to_string() + "] is not in D[0,1]"});
      continue;
    }
    const Interval mu(ee.lo, ee.hi);
    if (vertex_ok[iu->second] && vertex_ok[iv->second]) {
      const Interval bound = rmin(memberships[iu->second], memberships[iv->second]);
      if (mu.lo() > bound.lo()) {
        out.push_back({ViolationKind::EdgeBoundViolation, e.to_string(), BoundSide::Lower,
                       mu.lo().to_string() + " > " + bound.lo().to_string()});
      }
      if (mu.hi() > bound.hi()) {
        out.push_back({ViolationKind::EdgeBoundViolation, e.to_string(), BoundSide::Upper,
                       mu.hi().to_string() + " > " + bound.hi().to_string()});
      }
    }
    edges.emplace(e, mu);
  }

  if (out.empty()) {
    result.graph = IVFuzzyGraph::from_parts_unchecked(std::move(ids), std::move(memberships), std::move(edges));
  }
  return result;
}

/// Canonical document: vertices in graph order, edges by canonical pair.
inline GraphDocument to_document(const IVFuzzyGraph& g) {
  GraphDocument doc;
  doc.vertices.reserve(g.order());
  for (std::size_t i = 0; i < g.order(); ++i) {
    const auto& mu = g.vertex_membership(i);
    doc.vertices.push_back({g.vertices()[i], mu.lo(), mu.hi()});
  }
  doc.edges.reserve(g.size());
  for (const auto& [e, mu] : g.edges()) doc.edges.push_back({e.u(), e.v(), mu.lo(), mu.hi()});
  return doc;
}

/// Throwing variant of `validate` for callers that expect a valid document.
inline IVFuzzyGraph from_document(const GraphDocument& doc) {
  auto r = validate(doc);
  if (!r.ok()) {
    std::string msg;
    for (const auto& v : r.violations) {
      if (!msg.empty()) msg += "; ";
      msg += v.to_string();
    }
    throw Error(ErrorCode::InvalidGraph, msg);
  }
  return std::move(*r.graph);
}

}  // namespace ivfg
