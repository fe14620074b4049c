#pragma once

// Small hand-specified graphs used by the tests, the sweeps, and the samples/ directory.

#include <initializer_list>
#include <string>

#include "ivfg/fuzzy_graph.hpp"

namespace ivfg::fixtures {

struct V {
  const char* id;
  const char* lo;
  const char* hi;
};

struct E {
  const char* u;
  const char* v;
  const char* lo;
  const char* hi;
};

inline Rational q(const char* s) {
  auto r = Rational::parse(s);
  if (!r) throw Error(ErrorCode::BadNumber, s);
  return *r;
}

inline GraphDocument document(std::initializer_list<V> vs, std::initializer_list<E> es) {
  GraphDocument doc;
  for (const auto& v : vs) doc.vertices.push_back({v.id, q(v.lo), q(v.hi)});
  for (const auto& e : es) doc.edges.push_back({e.u, e.v, q(e.lo), q(e.hi)});
  return doc;
}

inline IVFuzzyGraph graph(std::initializer_list<V> vs, std::initializer_list<E> es) {
  return from_document(document(vs, es));
}

/// Triangle x, y, z with edges strictly below their bounds.
inline GraphDocument triangle_xyz_document() {
  return document({{"x", "0.2", "0.4"}, {"y", "0.3", "0.5"}, {"z", "0.4", "0.5"}},
                  {{"x", "y", "0.1", "0.3"}, {"y", "z", "0.2", "0.4"}, {"z", "x", "0.1", "0.4"}});
}
inline IVFuzzyGraph triangle_xyz() { return from_document(triangle_xyz_document()); }

/// Same vertices as `triangle_xyz`, every edge at rmin.
inline IVFuzzyGraph complete_triangle_xyz() {
  return graph({{"x", "0.2", "0.4"}, {"y", "0.3", "0.5"}, {"z", "0.4", "0.5"}},
               {{"x", "y", "0.2", "0.4"}, {"y", "z", "0.3", "0.5"}, {"z", "x", "0.2", "0.4"}});
}

/// Operands for the Cartesian product and join checks.
inline IVFuzzyGraph product_left() {
  return graph({{"a", "0.2", "0.4"}, {"b", "0.3", "0.5"}}, {{"a", "b", "0.1", "0.2"}});
}
inline IVFuzzyGraph product_right() {
  return graph({{"c", "0.1", "0.4"}, {"d", "0.2", "0.6"}}, {{"c", "d", "0.1", "0.3"}});
}

/// Operands for the composition checks.
inline IVFuzzyGraph composition_left() {
  return graph({{"a", "0.2", "0.5"}, {"b", "0.3", "0.5"}}, {{"a", "b", "0.2", "0.4"}});
}
inline IVFuzzyGraph composition_right() {
  return graph({{"c", "0.1", "0.4"}, {"d", "0.3", "0.6"}}, {{"c", "d", "0.1", "0.3"}});
}

/// Overlapping operands for the union checks.
inline IVFuzzyGraph union_left() {
  return graph({{"a", "0.2", "0.4"}, {"b", "0.4", "0.5"}, {"c", "0.3", "0.6"}, {"d", "0.3", "0.7"}, {"e", "0.2", "0.6"}},
               {{"a", "b", "0.1", "0.3"},
                {"b", "c", "0.2", "0.4"},
                {"c", "e", "0.1", "0.5"},
                {"b", "e", "0.2", "0.5"},
                {"a", "d", "0.1", "0.3"},
                {"d", "e", "0.1", "0.6"}});
}
inline IVFuzzyGraph union_right() {
  return graph({{"a", "0.2", "0.4"}, {"b", "0.2", "0.5"}, {"c", "0.3", "0.6"}, {"d", "0.2", "0.6"}, {"f", "0.4", "0.6"}},
               {{"a", "b", "0.1", "0.2"},
                {"b", "c", "0.2", "0.4"},
                {"c", "f", "0.1", "0.5"},
                {"b", "f", "0.1", "0.2"},
                {"b", "d", "0.2", "0.5"}});
}

/// a1 -> b2, b1 -> a2 preserves vertex weights but raises the edge weight.
inline IVFuzzyGraph weak_iso_left() {
  return graph({{"a1", "0.2", "0.5"}, {"b1", "0.3", "0.6"}}, {{"a1", "b1", "0.1", "0.3"}});
}
inline IVFuzzyGraph weak_iso_right() {
  return graph({{"a2", "0.3", "0.6"}, {"b2", "0.2", "0.5"}}, {{"a2", "b2", "0.1", "0.4"}});
}

/// a1 -> b2, b1 -> a2 preserves the edge weight but raises vertex weights.
inline IVFuzzyGraph weak_co_iso_left() {
  return graph({{"a1", "0.2", "0.4"}, {"b1", "0.3", "0.5"}}, {{"a1", "b1", "0.1", "0.3"}});
}
inline IVFuzzyGraph weak_co_iso_right() {
  return graph({{"a2", "0.4", "0.5"}, {"b2", "0.3", "0.6"}}, {{"a2", "b2", "0.1", "0.3"}});
}

/// Complete path a-b-c; its double complement is itself.
inline IVFuzzyGraph path_abc() {
  return graph({{"a", "0.1", "0.3"}, {"b", "0.2", "0.4"}, {"c", "0.3", "0.5"}},
               {{"a", "b", "0.1", "0.3"}, {"b", "c", "0.2", "0.4"}});
}

/// Complete path a-b-c-d with every vertex at [0.3,0.5]; isomorphic to its complement.
inline IVFuzzyGraph constant_path4() {
  return graph({{"a", "0.3", "0.5"}, {"b", "0.3", "0.5"}, {"c", "0.3", "0.5"}, {"d", "0.3", "0.5"}},
               {{"a", "b", "0.3", "0.5"}, {"b", "c", "0.3", "0.5"}, {"c", "d", "0.3", "0.5"}});
}

}  // namespace ivfg::fixtures
