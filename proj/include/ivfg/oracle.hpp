#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ivfg/complete.hpp"
#include "ivfg/document.hpp"
#include "ivfg/error.hpp"
#include "ivfg/fixtures.hpp"
#include "ivfg/fuzzy_graph.hpp"
#include "ivfg/graph_ops.hpp"
#include "ivfg/morphism.hpp"

namespace ivfg::oracle {

// ---------------------------------------------------------------------------
// Generation

struct GenParams {
  /// Exact vertex count for `generate`; upper bound for the sweeps.
  std::size_t vertex_count = 4;
  Rational edge_probability = Rational(1, 2);
  /// Memberships are drawn from {0, 1/g, ..., g/g}.
  std::int64_t membership_grid = 10;
  bool complete_only = false;
  std::uint64_t seed = 1;
  std::string id_prefix = "v";
};

/// SplitMix64 finalizer; per-trial seeds depend only on (master, trial).
constexpr std::uint64_t mix_seed(std::uint64_t master, std::uint64_t trial) noexcept {
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (trial + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, n).
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "empty range");
    // Rejection sampling keeps the draw independent of the standard library's distributions.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return x % n;
  }

  bool chance(const Rational& p) {
    if (!p.in_unit_range()) throw Error(ErrorCode::InvalidArgument, "probability outside [0,1]");
    return static_cast<std::int64_t>(below(static_cast<std::uint64_t>(p.den()))) < p.num();
  }

  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

inline void check_params(const GenParams& p) {
  if (p.membership_grid < 1) throw Error(ErrorCode::InvalidArgument, "membership grid must be positive");
  if (!p.edge_probability.in_unit_range()) throw Error(ErrorCode::InvalidArgument, "edge probability outside [0,1]");
  if (!is_valid_vertex_id(p.id_prefix)) throw Error(ErrorCode::InvalidArgument, "bad id prefix");
}

namespace detail {

inline IVFuzzyGraph generate_with(Rng& rng, std::size_t n, const GenParams& p) {
  check_params(p);
  const auto g = p.membership_grid;
  const auto grid_value = [g](std::int64_t k) { return Rational(k, g); };
  std::vector<VertexId> ids;
  std::vector<std::pair<std::int64_t, std::int64_t>> units;
  std::vector<Interval> mus;
  for (std::size_t i = 0; i < n; ++i) {
    auto a = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(g + 1)));
    auto b = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(g + 1)));
    if (b < a) std::swap(a, b);
    ids.push_back(p.id_prefix + std::to_string(i));
    units.emplace_back(a, b);
    mus.emplace_back(grid_value(a), grid_value(b));
  }
  std::map<Edge, Interval> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!rng.chance(p.edge_probability)) continue;
      const auto mlo = std::min(units[i].first, units[j].first);
      const auto mhi = std::min(units[i].second, units[j].second);
      if (p.complete_only) {
        edges.emplace(Edge(ids[i], ids[j]), Interval(grid_value(mlo), grid_value(mhi)));
        continue;
      }
      const auto hi = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(mhi + 1)));
      const auto lo = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(std::min(mlo, hi) + 1)));
      edges.emplace(Edge(ids[i], ids[j]), Interval(grid_value(lo), grid_value(hi)));
    }
  }
  return IVFuzzyGraph::from_parts_unchecked(std::move(ids), std::move(mus), std::move(edges));
}

}  // namespace detail

/// A valid graph with exactly `vertex_count` vertices; deterministic in `seed`.
inline IVFuzzyGraph generate(const GenParams& params) {
  Rng rng(params.seed);
  return detail::generate_with(rng, params.vertex_count, params);
}

/// Vertex count drawn uniformly from [0, params.vertex_count].
inline IVFuzzyGraph generate_up_to(Rng& rng, const GenParams& params) {
  const auto n = static_cast<std::size_t>(rng.below(params.vertex_count + 1));
  return detail::generate_with(rng, n, params);
}

/// Renames vertex i to prefix + perm[i] and carries memberships along, so the
/// result is isomorphic to `g` via x_i -> prefix + perm[i].
inline IVFuzzyGraph relabel(const IVFuzzyGraph& g, const std::vector<std::size_t>& perm, const std::string& prefix) {
  const std::size_t n = g.order();
  std::vector<VertexId> ids(n);
  std::vector<Interval> mus(n);
  std::map<VertexId, VertexId> rename;
  for (std::size_t i = 0; i < n; ++i) {
    const VertexId id = prefix + std::to_string(perm.at(i));
    rename.emplace(g.vertices()[i], id);
    ids[perm[i]] = id;
    mus[perm[i]] = g.vertex_membership(i);
  }
  std::map<Edge, Interval> edges;
  for (const auto& [e, mu] : g.edges()) edges.emplace(Edge(rename.at(e.u()), rename.at(e.v())), mu);
  return IVFuzzyGraph::from_parts_unchecked(std::move(ids), std::move(mus), std::move(edges));
}

inline VertexMapping relabel_mapping(const IVFuzzyGraph& g, const std::vector<std::size_t>& perm,
                                     const std::string& prefix) {
  VertexMapping m;
  for (std::size_t i = 0; i < g.order(); ++i) m.set(g.vertices()[i], prefix + std::to_string(perm[i]));
  return m;
}

inline std::vector<std::size_t> random_permutation(Rng& rng, std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
  return perm;
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration

namespace detail {

/// Number of intervals [l,h] on the grid with l <= h, l <= mlo and h <= mhi.
inline std::uint64_t bounded_interval_count(std::int64_t mlo, std::int64_t mhi) {
  std::uint64_t c = 0;
  for (std::int64_t h = 0; h <= mhi; ++h) c += static_cast<std::uint64_t>(std::min(h, mlo) + 1);
  return c;
}

}  // namespace detail

/// Calls `visit` with every labeled graph on vertices prefix0..prefix{n-1}
/// whose memberships lie on the grid. An edge is either absent or carries one
/// of the grid intervals below rmin of its endpoints, [0,0] included.
inline std::uint64_t enumerate_graphs(std::size_t n, std::int64_t grid, const std::function<void(const IVFuzzyGraph&)>& visit,
                                      const std::string& prefix = "v") {
  if (grid < 1) throw Error(ErrorCode::InvalidArgument, "membership grid must be positive");
  std::vector<std::pair<std::int64_t, std::int64_t>> cells;
  for (std::int64_t lo = 0; lo <= grid; ++lo) {
    for (std::int64_t hi = lo; hi <= grid; ++hi) cells.emplace_back(lo, hi);
  }
  std::vector<VertexId> ids;
  for (std::size_t i = 0; i < n; ++i) ids.push_back(prefix + std::to_string(i));
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }

  std::uint64_t count = 0;
  std::vector<std::size_t> vchoice(n, 0);
  std::vector<Interval> mus(n);
  std::map<Edge, Interval> edges;

  std::function<void(std::size_t)> edge_step = [&](std::size_t k) {
    if (k == pairs.size()) {
      ++count;
      visit(IVFuzzyGraph::from_parts_unchecked(ids, mus, edges));
      return;
    }
    const auto [i, j] = pairs[k];
    edge_step(k + 1);  // absent
    const auto mlo = std::min(cells[vchoice[i]].first, cells[vchoice[j]].first);
    const auto mhi = std::min(cells[vchoice[i]].second, cells[vchoice[j]].second);
    const Edge e(ids[i], ids[j]);
    for (std::int64_t hi = 0; hi <= mhi; ++hi) {
      for (std::int64_t lo = 0; lo <= std::min(mlo, hi); ++lo) {
        edges.insert_or_assign(e, Interval(Rational(lo, grid), Rational(hi, grid)));
        edge_step(k + 1);
      }
    }
    edges.erase(e);
  };

  std::function<void(std::size_t)> vertex_step = [&](std::size_t i) {
    if (i == n) {
      edge_step(0);
      return;
    }
    for (std::size_t c = 0; c < cells.size(); ++c) {
      vchoice[i] = c;
      mus[i] = Interval(Rational(cells[c].first, grid), Rational(cells[c].second, grid));
      vertex_step(i + 1);
    }
  };
  vertex_step(0);
  return count;
}

/// Size of the space walked by `enumerate_graphs`, without building graphs.
inline std::uint64_t instance_count(std::size_t n, std::int64_t grid) {
  std::vector<std::pair<std::int64_t, std::int64_t>> cells;
  for (std::int64_t lo = 0; lo <= grid; ++lo) {
    for (std::int64_t hi = lo; hi <= grid; ++hi) cells.emplace_back(lo, hi);
  }
  std::vector<std::size_t> choice(n, 0);
  std::uint64_t total = 0;
  std::function<void(std::size_t)> step = [&](std::size_t i) {
    if (i == n) {
      std::uint64_t prod = 1;
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
          prod *= 1 + detail::bounded_interval_count(std::min(cells[choice[a]].first, cells[choice[b]].first),
                                                     std::min(cells[choice[a]].second, cells[choice[b]].second));
        }
      }
      total += prod;
      return;
    }
    for (std::size_t c = 0; c < cells.size(); ++c) {
      choice[i] = c;
      step(i + 1);
    }
  };
  step(0);
  return total;
}

// ---------------------------------------------------------------------------
// Reports

enum class Verdict { AllPassed, CounterexampleFound, Inconclusive };

constexpr std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::AllPassed: return "AllPassed";
    case Verdict::CounterexampleFound: return "CounterexampleFound";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

struct Failure {
  std::uint64_t seed = 0;
  std::string check;
  std::vector<GraphDocument> inputs;
  std::vector<VertexMapping> witnesses;
  std::string detail;
};

struct OracleReport {
  static constexpr std::size_t kMaxStoredFailures = 16;

  std::string property_name;
  std::size_t instances_checked = 0;
  std::size_t failure_count = 0;
  std::vector<Failure> failures;  // first kMaxStoredFailures only
  Verdict verdict = Verdict::Inconclusive;
  /// Verdict the property is known to produce; differs from AllPassed only for
  /// statements that fail on reference instances.
  Verdict expected = Verdict::AllPassed;
  std::string caveat;
  std::map<std::string, std::size_t> counters;

  void record(Failure f) {
    ++failure_count;
    if (failures.size() < kMaxStoredFailures) failures.push_back(std::move(f));
  }

  OracleReport& finalize() {
    if (instances_checked == 0) {
      verdict = Verdict::Inconclusive;
    } else {
      verdict = failure_count == 0 ? Verdict::AllPassed : Verdict::CounterexampleFound;
    }
    return *this;
  }

  [[nodiscard]] bool as_expected() const noexcept { return verdict == expected; }

  [[nodiscard]] std::string summary() const {
    std::string s = property_name + ": " + std::string(to_string(verdict)) + " (" + std::to_string(instances_checked) +
                    " instances, " + std::to_string(failure_count) + " failures";
    if (expected != Verdict::AllPassed) s += ", expected " + std::string(to_string(expected));
    s += ")";
    if (!caveat.empty()) s += " [" + caveat + "]";
    return s;
  }
};

inline nlohmann::ordered_json to_json(const OracleReport& r) {
  nlohmann::ordered_json j;
  j["property"] = r.property_name;
  j["verdict"] = std::string(to_string(r.verdict));
  j["expected"] = std::string(to_string(r.expected));
  j["instances_checked"] = r.instances_checked;
  j["failure_count"] = r.failure_count;
  j["caveat"] = r.caveat;
  j["counters"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.counters) j["counters"][k] = v;
  j["failures"] = nlohmann::ordered_json::array();
  for (const auto& f : r.failures) {
    nlohmann::ordered_json fj;
    fj["seed"] = f.seed;
    fj["check"] = f.check;
    fj["detail"] = f.detail;
    fj["inputs"] = nlohmann::ordered_json::array();
    for (const auto& d : f.inputs) fj["inputs"].push_back(document_to_json(d));
    fj["witnesses"] = nlohmann::ordered_json::array();
    for (const auto& w : f.witnesses) fj["witnesses"].push_back(serialize_mapping(w));
    j["failures"].push_back(std::move(fj));
  }
  return j;
}

// ---------------------------------------------------------------------------
// Closure of the four constructions

using Construction = std::function<IVFuzzyGraph(const IVFuzzyGraph&, const IVFuzzyGraph&)>;

struct Constructions {
  Construction product = [](const IVFuzzyGraph& a, const IVFuzzyGraph& b) { return cartesian_product(a, b); };
  Construction compose = [](const IVFuzzyGraph& a, const IVFuzzyGraph& b) { return composition(a, b); };
  Construction unite = [](const IVFuzzyGraph& a, const IVFuzzyGraph& b) { return graph_union(a, b); };
  Construction join = [](const IVFuzzyGraph& a, const IVFuzzyGraph& b) { return graph_join(a, b); };

  [[nodiscard]] const Construction& get(std::string_view name) const {
    if (name == "product") return product;
    if (name == "compose") return compose;
    if (name == "union") return unite;
    if (name == "join") return join;
    throw Error(ErrorCode::InvalidArgument, "unknown construction " + std::string(name));
  }
};

/// Nullopt when the construction's result, serialized, passes `validate`.
inline std::optional<std::string> check_closure(const Construction& op, const IVFuzzyGraph& g1,
                                                const IVFuzzyGraph& g2) {
  try {
    const auto result = validate(to_document(op(g1, g2)));
    if (result.ok()) return std::nullopt;
    std::string msg;
    for (const auto& v : result.violations) msg += (msg.empty() ? "" : "; ") + v.to_string();
    return msg;
  } catch (const Error& e) {
    return std::string("construction threw: ") + e.what();
  }
}

inline OracleReport sweep_closure(const GenParams& params, std::size_t trials, const Constructions& ops = {}) {
  check_params(params);
  OracleReport report;
  report.property_name = "closure";
  for (std::size_t t = 0; t < trials; ++t) {
    const auto seed = mix_seed(params.seed, t);
    Rng rng(seed);
    GenParams p = params;
    p.id_prefix = "v";
    const auto g1 = generate_up_to(rng, p);
    const auto g2 = generate_up_to(rng, p);  // same id space as g1, so union sees overlap
    p.id_prefix = "w";
    const auto g3 = generate_up_to(rng, p);  // disjoint from g1, for the join

    const std::pair<const char*, const IVFuzzyGraph*> cases[] = {
        {"product", &g2}, {"compose", &g2}, {"union", &g2}, {"join", &g3}};
    for (const auto& [name, rhs] : cases) {
      ++report.instances_checked;
      ++report.counters[name];
      if (auto failure = check_closure(ops.get(name), g1, *rhs)) {
        report.record({seed, name, {to_document(g1), to_document(*rhs)}, {}, *failure});
      }
    }
  }
  return report.finalize();
}

// ---------------------------------------------------------------------------
// Decomposition of union and join over disjoint vertex sets

namespace detail {

/// Makes the document certainly invalid while keeping it structurally sound.
inline void inject_violation(GraphDocument& doc, Rng& rng) {
  if (!doc.edges.empty()) {
    auto& e = doc.edges[rng.below(doc.edges.size())];
    e.lo = e.hi = Rational(1);
    for (auto& v : doc.vertices) {
      if (v.id == e.u) v.lo = v.hi = Rational(0);
    }
  } else if (doc.vertices.size() >= 2) {
    doc.edges.push_back({doc.vertices[0].id, doc.vertices[1].id, Rational(1), Rational(1)});
    doc.vertices[0].lo = doc.vertices[0].hi = Rational(0);
  } else if (!doc.vertices.empty()) {
    doc.vertices[0].lo = Rational(1);
    doc.vertices[0].hi = Rational(0);
  } else {
    doc.vertices.push_back({"bad", Rational(1), Rational(0)});
  }
}

}  // namespace detail

/// Nullopt when "combined document is a graph" matches "both parts are graphs".
inline std::optional<std::string> check_decomposition(std::string_view op, const GraphDocument& d1,
                                                      const GraphDocument& d2) {
  const GraphDocument combined = op == "join" ? join_documents(d1, d2) : union_documents(d1, d2);
  const bool whole = validate(combined).ok();
  const bool parts = validate(d1).ok() && validate(d2).ok();
  if (whole == parts) return std::nullopt;
  return std::string(op) + (whole ? " validates although a component does not" : " fails although both components validate");
}

inline OracleReport sweep_decomposition(const GenParams& params, std::size_t trials) {
  check_params(params);
  OracleReport report;
  report.property_name = "decomposition";
  for (std::size_t t = 0; t < trials; ++t) {
    const auto seed = mix_seed(params.seed, t);
    Rng rng(seed);
    GenParams p = params;
    p.id_prefix = "a";
    auto d1 = to_document(generate_up_to(rng, p));
    p.id_prefix = "b";
    auto d2 = to_document(generate_up_to(rng, p));
    switch (rng.below(3)) {
      case 0: detail::inject_violation(d1, rng); break;
      case 1: detail::inject_violation(d2, rng); break;
      default: break;
    }
    const bool parts_valid = validate(d1).ok() && validate(d2).ok();
    for (const char* op : {"union", "join"}) {
      ++report.instances_checked;
      ++report.counters[std::string(op) + (parts_valid ? " positive" : " negative")];
      if (auto failure = check_decomposition(op, d1, d2)) report.record({seed, op, {d1, d2}, {}, *failure});
    }
  }
  return report.finalize();
}

// ---------------------------------------------------------------------------
// Isomorphism as an equivalence relation

/// Checks reflexivity on g, symmetry on (g, p), transitivity on (g, p, q), where
/// p and q are expected to be isomorphic to g.
inline std::optional<std::string> check_equivalence(const IVFuzzyGraph& g, const IVFuzzyGraph& p, const IVFuzzyGraph& q,
                                                    std::vector<VertexMapping>* witnesses = nullptr,
                                                    const SearchOptions& opts = {}) {
  constexpr auto kIso = MorphismKind::Isomorphism;
  if (!check_morphism(g, g, VertexMapping::identity(g), kIso)) return "identity is not an isomorphism";
  const auto self = find_morphism(g, g, kIso, opts);
  if (!self || !check_morphism(g, g, *self, kIso)) return "no automorphism found";

  const auto f = find_morphism(g, p, kIso, opts);
  if (!f) return "no isomorphism g -> p";
  if (witnesses) witnesses->push_back(*f);
  if (!check_morphism(p, g, f->inverse(), kIso)) return "inverse of g -> p is not an isomorphism";

  const auto h = find_morphism(p, q, kIso, opts);
  if (!h) return "no isomorphism p -> q";
  if (witnesses) witnesses->push_back(*h);
  if (!check_morphism(g, q, f->then(*h), kIso)) return "composite g -> q is not an isomorphism";
  return std::nullopt;
}

inline OracleReport sweep_equivalence(const GenParams& params, std::size_t trials) {
  check_params(params);
  OracleReport report;
  report.property_name = "equivalence";
  for (std::size_t t = 0; t < trials; ++t) {
    const auto seed = mix_seed(params.seed, t);
    Rng rng(seed);
    const auto g = generate_up_to(rng, params);
    const auto p = relabel(g, random_permutation(rng, g.order()), "p");
    const auto q = relabel(p, random_permutation(rng, p.order()), "q");
    ++report.instances_checked;
    std::vector<VertexMapping> witnesses;
    if (auto failure = check_equivalence(g, p, q, &witnesses)) {
      report.record({seed, "iso-equivalence", {to_document(g), to_document(p), to_document(q)}, witnesses, *failure});
    }
  }
  return report.finalize();
}

// ---------------------------------------------------------------------------
// Antisymmetry exploration for weak isomorphism and weak co-isomorphism

/// Failure detail when g and h are mutually weakly (co-)isomorphic but not
/// isomorphic; witnesses are g -> h and h -> g.
inline std::optional<std::string> check_antisymmetry(const IVFuzzyGraph& g, const IVFuzzyGraph& h, MorphismKind kind,
                                                     std::vector<VertexMapping>* witnesses = nullptr,
                                                     const SearchOptions& opts = {}) {
  const auto forward = find_morphism(g, h, kind, opts);
  if (!forward) return std::nullopt;
  const auto backward = find_morphism(h, g, kind, opts);
  if (!backward) return std::nullopt;
  if (find_morphism(g, h, MorphismKind::Isomorphism, opts)) return std::nullopt;
  if (witnesses) {
    witnesses->push_back(*forward);
    witnesses->push_back(*backward);
  }
  return std::string(to_string(kind)) + " both ways without isomorphism";
}

struct ExploreOptions {
  std::uint64_t seed = 1;
  /// Above this many labeled graphs per vertex count, switch from enumeration to sampling.
  std::uint64_t enumeration_limit = 200'000;
};

namespace detail {

inline std::string multiset_key(std::vector<Interval> xs) {
  std::sort(xs.begin(), xs.end(), LexLess{});
  std::string key;
  for (const auto& x : xs) key += x.to_string();
  return key;
}

inline std::string vertex_key(const IVFuzzyGraph& g) { return multiset_key(g.vertex_memberships()); }

inline std::string arc_key(const IVFuzzyGraph& g) {
  std::vector<Interval> xs;
  for (const auto& [e, mu] : g.edges()) {
    if (!mu.is_zero()) xs.push_back(mu);
  }
  return std::to_string(g.order()) + ":" + multiset_key(std::move(xs));
}

/// A graph sharing g's vertex memberships (relabeled) with freshly drawn
/// edges, or sharing its nonzero edge weights with raised vertex weights.
inline IVFuzzyGraph perturb(const IVFuzzyGraph& g, Rng& rng, std::int64_t grid, MorphismKind kind) {
  const auto p = relabel(g, random_permutation(rng, g.order()), "v");
  if (kind == MorphismKind::WeakIsomorphism) {
    std::map<Edge, Interval> edges;
    for (std::size_t i = 0; i < p.order(); ++i) {
      for (std::size_t j = i + 1; j < p.order(); ++j) {
        if (rng.below(2) == 0) continue;
        const Interval bound = rmin(p.vertex_membership(i), p.vertex_membership(j));
        const auto mhi = (bound.hi() * Rational(grid)).num();
        const auto mlo = (bound.lo() * Rational(grid)).num();
        const auto hi = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(mhi + 1)));
        const auto lo = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(std::min(mlo, hi) + 1)));
        edges.emplace(Edge(p.vertices()[i], p.vertices()[j]), Interval(Rational(lo, grid), Rational(hi, grid)));
      }
    }
    return IVFuzzyGraph::from_parts_unchecked(p.vertices(), p.vertex_memberships(), std::move(edges));
  }
  std::vector<Interval> mus = p.vertex_memberships();
  for (auto& mu : mus) {
    const auto lo = (mu.lo() * Rational(grid)).num();
    const auto hi = (mu.hi() * Rational(grid)).num();
    const auto new_hi = hi + static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(grid - hi + 1)));
    const auto new_lo = lo + static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(new_hi - lo + 1)));
    mu = Interval(Rational(new_lo, grid), Rational(new_hi, grid));
  }
  return IVFuzzyGraph::from_parts_unchecked(p.vertices(), std::move(mus), p.edges());
}

}  // namespace detail

/// Searches for graphs that are weakly (co-)isomorphic in both directions but
/// not isomorphic. Exhaustive while the pair space fits in `budget` pair
/// evaluations and each vertex count has at most `enumeration_limit` graphs;
/// otherwise spends the budget on sampled pairs. A pass is bounded evidence only.
inline OracleReport explore_weak_iso_order(std::size_t max_vertices, std::int64_t grid, std::uint64_t budget,
                                           const ExploreOptions& opts = {}) {
  if (budget == 0) throw Error(ErrorCode::BudgetExceeded, "budget is zero");
  if (grid < 1) throw Error(ErrorCode::InvalidArgument, "membership grid must be positive");
  OracleReport report;
  report.property_name = "order-problem";
  bool sampled = false;
  std::uint64_t spent = 0;

  std::vector<std::vector<IVFuzzyGraph>> by_size(max_vertices + 1);
  bool enumerable = true;
  for (std::size_t n = 0; n <= max_vertices; ++n) {
    if (instance_count(n, grid) > opts.enumeration_limit) {
      enumerable = false;
      break;
    }
  }

  const MorphismKind kinds[] = {MorphismKind::WeakIsomorphism, MorphismKind::WeakCoIsomorphism};

  auto evaluate = [&](const IVFuzzyGraph& g, const IVFuzzyGraph& h, MorphismKind kind, std::uint64_t seed) {
    ++report.instances_checked;
    ++report.counters[std::string(to_string(kind)) + " pairs"];
    std::vector<VertexMapping> witnesses;
    if (auto failure = check_antisymmetry(g, h, kind, &witnesses)) {
      report.record({seed, std::string(to_string(kind)), {to_document(g), to_document(h)}, witnesses, *failure});
    }
  };

  if (enumerable) {
    for (std::size_t n = 0; n <= max_vertices; ++n) {
      enumerate_graphs(n, grid, [&](const IVFuzzyGraph& g) { by_size[n].push_back(g); });
    }
    // Groups keyed by an invariant that mutual weak (co-)isomorphism must preserve.
    std::vector<std::pair<MorphismKind, std::vector<std::vector<std::size_t>>>> groups;
    std::vector<const IVFuzzyGraph*> flat;
    for (const auto& bucket : by_size) {
      for (const auto& g : bucket) flat.push_back(&g);
    }
    std::uint64_t total_pairs = 0;
    for (auto kind : kinds) {
      std::map<std::string, std::vector<std::size_t>> keyed;
      for (std::size_t i = 0; i < flat.size(); ++i) {
        const auto& g = *flat[i];
        keyed[std::to_string(g.order()) + "/" +
              (kind == MorphismKind::WeakIsomorphism ? detail::vertex_key(g) : detail::arc_key(g))]
            .push_back(i);
      }
      std::vector<std::vector<std::size_t>> gs;
      for (auto& [k, members] : keyed) {
        total_pairs += members.size() * (members.size() - 1) / 2;
        gs.push_back(std::move(members));
      }
      groups.emplace_back(kind, std::move(gs));
    }
    report.counters["graphs enumerated"] = flat.size();

    if (total_pairs <= budget) {
      for (const auto& [kind, gs] : groups) {
        for (const auto& members : gs) {
          for (std::size_t a = 0; a < members.size(); ++a) {
            for (std::size_t b = a + 1; b < members.size(); ++b) {
              evaluate(*flat[members[a]], *flat[members[b]], kind, 0);
              ++spent;
            }
          }
        }
      }
      report.caveat = "bounded search: exhaustive over n <= " + std::to_string(max_vertices) + ", grid " +
                      std::to_string(grid) + "; not a proof";
      if (report.instances_checked == 0) report.instances_checked = flat.size();
      return report.finalize();
    }
    // Too many pairs: sample within groups, weighted by group pair count.
    sampled = true;
    Rng rng(opts.seed);
    std::vector<std::tuple<MorphismKind, const std::vector<std::size_t>*, std::uint64_t>> weighted;
    std::uint64_t acc = 0;
    for (const auto& [kind, gs] : groups) {
      for (const auto& members : gs) {
        const std::uint64_t w = members.size() * (members.size() - 1) / 2;
        if (w == 0) continue;
        acc += w;
        weighted.emplace_back(kind, &members, acc);
      }
    }
    for (; spent < budget; ++spent) {
      const auto r = rng.below(acc);
      const auto it = std::upper_bound(weighted.begin(), weighted.end(), r,
                                       [](std::uint64_t x, const auto& t) { return x < std::get<2>(t); });
      const auto& members = *std::get<1>(*it);
      const auto a = rng.below(members.size());
      auto b = rng.below(members.size() - 1);
      if (b >= a) ++b;
      evaluate(*flat[members[a]], *flat[members[b]], std::get<0>(*it), 0);
    }
  } else {
    // Space too large to enumerate: pair each random graph with a perturbed copy
    // that keeps the invariant the kind needs.
    sampled = true;
    GenParams p;
    p.vertex_count = max_vertices;
    p.membership_grid = grid;
    for (; spent < budget; ++spent) {
      const auto seed = mix_seed(opts.seed, spent);
      Rng rng(seed);
      const auto g = generate_up_to(rng, p);
      const auto kind = kinds[rng.below(2)];
      evaluate(g, detail::perturb(g, rng, grid, kind), kind, seed);
    }
  }
  if (sampled) {
    report.caveat = "bounded search: " + std::to_string(spent) + " sampled pairs over n <= " +
                    std::to_string(max_vertices) + ", grid " + std::to_string(grid) + "; not a proof";
  }
  return report.finalize();
}

// ---------------------------------------------------------------------------
// Complete-graph properties

namespace detail {

inline std::optional<std::string> sum_detail(const SumIdentityReport& s, bool halved) {
  if (halved ? s.halved_holds : s.literal_holds) return std::nullopt;
  return std::string(halved ? "2*" : "") + "sum B = [" + s.lhs_lo.to_string() + "," + s.lhs_hi.to_string() +
         "] vs sum min A = [" + s.rhs_lo.to_string() + "," + s.rhs_hi.to_string() + "]";
}

}  // namespace detail

/// Composition of a complete graph with itself is complete.
inline std::optional<std::string> check_complete_composition(const IVFuzzyGraph& g) {
  if (is_complete(composition(g, g))) return std::nullopt;
  return "G[G] is not complete";
}

/// Under the all-pairs-at-rmin hypothesis the graph is self complementary.
inline std::optional<std::string> check_all_pairs_rmin(const IVFuzzyGraph& g) {
  if (check_all_pairs_self_complementary(g)) return std::nullopt;
  return "double complement differs from the graph";
}

/// G1 ~ G2 iff complement(G1) ~ complement(G2).
inline std::optional<std::string> check_complement_iso(const IVFuzzyGraph& g1, const IVFuzzyGraph& g2) {
  const bool direct = are_isomorphic(g1, g2);
  const bool comp = are_isomorphic(complement(g1), complement(g2));
  if (direct == comp) return std::nullopt;
  return std::string("graphs ") + (direct ? "" : "not ") + "isomorphic but complements " + (comp ? "" : "not ") +
         "isomorphic";
}

/// Sum identity on a self complementary (double-complement) graph.
inline std::optional<std::string> check_sum_literal(const IVFuzzyGraph& g) {
  return detail::sum_detail(sum_identity(g), false);
}

/// Halved sum identity on a graph isomorphic to its complement.
inline std::optional<std::string> check_sum_halved(const IVFuzzyGraph& g) {
  return detail::sum_detail(sum_identity(g), true);
}

/// Runs the complete-graph property checks. `params.vertex_count` caps the
/// size per property at min(cap, 4) for compositions and min(cap, 5) otherwise.
inline std::vector<OracleReport> sweep_complete_props(const GenParams& params, std::size_t trials) {
  check_params(params);
  GenParams base = params;
  base.complete_only = true;

  OracleReport composed;
  composed.property_name = "complete-composition";
  OracleReport all_pairs;
  all_pairs.property_name = "all-pairs-rmin-self-complementary";
  OracleReport comp_iso;
  comp_iso.property_name = "complement-isomorphism";
  OracleReport literal;
  literal.property_name = "sum-identity-literal";
  literal.expected = Verdict::CounterexampleFound;
  literal.caveat = "literal identity over self complementary graphs; fails on the reference path a-b-c";
  OracleReport halved;
  halved.property_name = "sum-identity-halved";
  halved.caveat = "halved identity over graphs isomorphic to their complement";

  const auto record_literal = [&](const IVFuzzyGraph& g, std::uint64_t seed) {
    if (!is_self_complementary(g)) return;
    ++literal.instances_checked;
    if (auto f = check_sum_literal(g)) literal.record({seed, "sum-literal", {to_document(g)}, {}, *f});
  };
  const auto record_halved = [&](const IVFuzzyGraph& g, std::uint64_t seed) {
    if (!is_strongly_self_complementary(g)) return;
    ++halved.instances_checked;
    if (auto f = check_sum_halved(g)) halved.record({seed, "sum-halved", {to_document(g)}, {}, *f});
  };
  record_literal(fixtures::path_abc(), 0);
  record_halved(fixtures::constant_path4(), 0);

  for (std::size_t t = 0; t < trials; ++t) {
    const auto seed = mix_seed(params.seed, t);
    Rng rng(seed);

    GenParams small = base;
    small.vertex_count = std::min<std::size_t>(params.vertex_count, 4);
    const auto g = generate_up_to(rng, small);
    ++composed.instances_checked;
    if (auto f = check_complete_composition(g)) composed.record({seed, "composition", {to_document(g)}, {}, *f});

    GenParams full = base;
    full.vertex_count = std::min<std::size_t>(params.vertex_count, 5);
    full.edge_probability = Rational(1);
    const auto k = generate_up_to(rng, full);
    ++all_pairs.instances_checked;
    if (auto f = check_all_pairs_rmin(k)) all_pairs.record({seed, "all-pairs", {to_document(k)}, {}, *f});

    GenParams pair = base;
    pair.vertex_count = std::min<std::size_t>(params.vertex_count, 5);
    const auto g1 = generate_up_to(rng, pair);
    IVFuzzyGraph g2;
    if (rng.below(2) == 0) {
      g2 = relabel(g1, random_permutation(rng, g1.order()), "u");
    } else {
      pair.vertex_count = g1.order();
      pair.id_prefix = "u";
      g2 = detail::generate_with(rng, g1.order(), pair);
    }
    ++comp_iso.instances_checked;
    ++comp_iso.counters[are_isomorphic(g1, g2) ? "isomorphic pairs" : "non-isomorphic pairs"];
    if (auto f = check_complement_iso(g1, g2)) {
      comp_iso.record({seed, "complement-iso", {to_document(g1), to_document(g2)}, {}, *f});
    }

    // Constant memberships make self complementary edge patterns common.
    GenParams constant = base;
    constant.vertex_count = std::min<std::size_t>(params.vertex_count, 5);
    auto c = generate_up_to(rng, constant);
    if (c.order() > 0) {
      const Interval m = c.vertex_membership(0);
      std::vector<Interval> mus(c.order(), m);
      std::map<Edge, Interval> edges;
      for (const auto& [e, mu] : c.edges()) edges.emplace(e, m);
      c = IVFuzzyGraph::from_parts_unchecked(c.vertices(), std::move(mus), std::move(edges));
    }
    record_literal(g1, seed);
    record_literal(c, seed);
    record_halved(g1, seed);
    record_halved(c, seed);
  }

  std::vector<OracleReport> out{composed, all_pairs, comp_iso, literal, halved};
  for (auto& r : out) r.finalize();
  return out;
}

}  // namespace ivfg::oracle
