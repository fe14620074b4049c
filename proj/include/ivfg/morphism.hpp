#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "ivfg/error.hpp"
#include "ivfg/fuzzy_graph.hpp"
#include "ivfg/interval.hpp"

namespace ivfg {

enum class MorphismKind { Homomorphism, WeakIsomorphism, WeakCoIsomorphism, Isomorphism };

constexpr std::string_view to_string(MorphismKind k) noexcept {
  switch (k) {
    case MorphismKind::Homomorphism: return "hom";
    case MorphismKind::WeakIsomorphism: return "weak-iso";
    case MorphismKind::WeakCoIsomorphism: return "weak-co-iso";
    case MorphismKind::Isomorphism: return "iso";
  }
  return "?";
}

inline std::optional<MorphismKind> parse_morphism_kind(std::string_view s) noexcept {
  for (auto k : {MorphismKind::Homomorphism, MorphismKind::WeakIsomorphism, MorphismKind::WeakCoIsomorphism,
                 MorphismKind::Isomorphism}) {
    if (s == to_string(k)) return k;
  }
  return std::nullopt;
}

constexpr bool is_bijective_kind(MorphismKind k) noexcept { return k != MorphismKind::Homomorphism; }
/// Vertex weights preserved exactly.
constexpr bool preserves_nodes(MorphismKind k) noexcept {
  return k == MorphismKind::WeakIsomorphism || k == MorphismKind::Isomorphism;
}
/// Arc weights preserved exactly in both directions.
constexpr bool preserves_arcs(MorphismKind k) noexcept {
  return k == MorphismKind::WeakCoIsomorphism || k == MorphismKind::Isomorphism;
}

/// A vertex map V1 -> V2.
class VertexMapping {
 public:
  VertexMapping() = default;
  explicit VertexMapping(std::map<VertexId, VertexId> pairs) : pairs_(std::move(pairs)) {}

  static VertexMapping identity(const IVFuzzyGraph& g) {
    VertexMapping m;
    for (const auto& v : g.vertices()) m.pairs_.emplace(v, v);
    return m;
  }

  void set(const VertexId& from, const VertexId& to) { pairs_[from] = to; }

  [[nodiscard]] const std::map<VertexId, VertexId>& pairs() const noexcept { return pairs_; }
  [[nodiscard]] std::size_t size() const noexcept { return pairs_.size(); }

  [[nodiscard]] const VertexId& operator()(const VertexId& x) const {
    const auto it = pairs_.find(x);
    if (it == pairs_.end()) throw Error(ErrorCode::PartialMapping, "no image for " + x);
    return it->second;
  }

  [[nodiscard]] bool injective() const {
    std::unordered_set<VertexId> images;
    for (const auto& [k, v] : pairs_) {
      if (!images.insert(v).second) return false;
    }
    return true;
  }

  /// Inverse of an injective mapping.
  [[nodiscard]] VertexMapping inverse() const {
    if (!injective()) throw Error(ErrorCode::NotBijective, "mapping is not injective");
    VertexMapping inv;
    for (const auto& [k, v] : pairs_) inv.pairs_.emplace(v, k);
    return inv;
  }

  /// (next o this): x -> next(this(x)).
  [[nodiscard]] VertexMapping then(const VertexMapping& next) const {
    VertexMapping out;
    for (const auto& [k, v] : pairs_) out.pairs_.emplace(k, next(v));
    return out;
  }

  friend bool operator==(const VertexMapping&, const VertexMapping&) = default;

 private:
  std::map<VertexId, VertexId> pairs_;
};

namespace detail {

inline void require_total(const IVFuzzyGraph& g1, const IVFuzzyGraph& g2, const VertexMapping& f) {
  for (const auto& x : g1.vertices()) {
    const auto it = f.pairs().find(x);
    if (it == f.pairs().end()) throw Error(ErrorCode::PartialMapping, "no image for " + x);
    if (!g2.has_vertex(it->second)) throw Error(ErrorCode::UnknownVertex, it->second);
  }
  for (const auto& [k, v] : f.pairs()) {
    if (!g1.has_vertex(k)) throw Error(ErrorCode::UnknownVertex, k);
  }
}

/// B(uv) with the collapsed pair u == v read as [0,0].
inline Interval image_membership(const IVFuzzyGraph& g, const VertexId& u, const VertexId& v) {
  return u == v ? Interval::zero() : g.edge_membership(u, v);
}

}  // namespace detail

/// Whether `f` is a morphism of the given kind from `g1` to `g2`.
///
/// Homomorphisms are checked forward only and may be non-injective (a collapsed
/// edge is compared against [0,0]). For the arc-preserving kinds, equality is
/// also required from every G2 edge back to its preimage, so edge sets correspond.
inline bool check_morphism(const IVFuzzyGraph& g1, const IVFuzzyGraph& g2, const VertexMapping& f, MorphismKind kind) {
  detail::require_total(g1, g2, f);
  if (is_bijective_kind(kind) && (g1.order() != g2.order() || !f.injective())) {
    throw Error(ErrorCode::NotBijective, "mapping is not a bijection V1 -> V2");
  }

  for (const auto& x : g1.vertices()) {
    const auto& a1 = g1.vertex_membership(x);
    const auto& a2 = g2.vertex_membership(f(x));
    if (preserves_nodes(kind) ? a1 != a2 : !leq(a1, a2)) return false;
  }

  for (const auto& [e, b1] : g1.edges()) {
    const Interval b2 = detail::image_membership(g2, f(e.u()), f(e.v()));
    if (preserves_arcs(kind) ? b1 != b2 : !leq(b1, b2)) return false;
  }

  if (preserves_arcs(kind)) {
    const VertexMapping inv = f.inverse();
    for (const auto& [e, b2] : g2.edges()) {
      if (b2 != g1.edge_membership(inv(e.u()), inv(e.v()))) return false;
    }
  }
  return true;
}

struct SearchOptions {
  /// Maximum number of candidate assignments tried before giving up.
  std::size_t node_budget = 2'000'000;
  /// Membership-multiset checks and candidate filtering. Never changes the result.
  bool prune = true;
};

struct SearchStats {
  std::size_t nodes = 0;
};

namespace detail {

class MorphismSearch {
 public:
  MorphismSearch(const IVFuzzyGraph& g1, const IVFuzzyGraph& g2, MorphismKind kind, const SearchOptions& opts,
                 SearchStats* stats)
      : g1_(g1), g2_(g2), kind_(kind), opts_(opts), stats_(stats), n1_(g1.order()), n2_(g2.order()) {
    b1_ = dense(g1);
    b2_ = dense(g2);
  }

  std::optional<VertexMapping> run() {
    if (is_bijective_kind(kind_) ? n1_ != n2_ : n1_ > n2_) return std::nullopt;
    if (opts_.prune && !multisets_compatible()) return std::nullopt;

    order_.resize(n1_);
    for (std::size_t i = 0; i < n1_; ++i) order_[i] = i;
    std::vector<std::size_t> deg(n1_);
    for (std::size_t i = 0; i < n1_; ++i) deg[i] = g1_.degree(g1_.vertices()[i]);
    std::sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
      const auto& ma = g1_.vertex_membership(a);
      const auto& mb = g1_.vertex_membership(b);
      if (ma != mb) return LexLess{}(ma, mb);
      if (deg[a] != deg[b]) return deg[a] > deg[b];
      return g1_.vertices()[a] < g1_.vertices()[b];
    });

    image_.assign(n1_, kNone);
    used_.assign(n2_, false);
    if (!extend(0)) return std::nullopt;

    VertexMapping m;
    for (std::size_t i = 0; i < n1_; ++i) m.set(g1_.vertices()[i], g2_.vertices()[image_[i]]);
    return m;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  static std::vector<Interval> dense(const IVFuzzyGraph& g) {
    const std::size_t n = g.order();
    std::vector<Interval> m(n * n);
    for (const auto& [e, mu] : g.edges()) {
      const auto i = g.index_of(e.u());
      const auto j = g.index_of(e.v());
      m[i * n + j] = mu;
      m[j * n + i] = mu;
    }
    return m;
  }

  bool multisets_compatible() const {
    if (preserves_nodes(kind_)) {
      auto a = g1_.vertex_memberships();
      auto b = g2_.vertex_memberships();
      std::sort(a.begin(), a.end(), LexLess{});
      std::sort(b.begin(), b.end(), LexLess{});
      if (a != b) return false;
    }
    if (preserves_arcs(kind_)) {
      auto nonzero = [](const IVFuzzyGraph& g) {
        std::vector<Interval> out;
        for (const auto& [e, mu] : g.edges()) {
          if (!mu.is_zero()) out.push_back(mu);
        }
        std::sort(out.begin(), out.end(), LexLess{});
        return out;
      };
      if (nonzero(g1_) != nonzero(g2_)) return false;
    }
    return true;
  }

  bool vertex_ok(std::size_t x, std::size_t c) const {
    const auto& a1 = g1_.vertex_membership(x);
    const auto& a2 = g2_.vertex_membership(c);
    return preserves_nodes(kind_) ? a1 == a2 : leq(a1, a2);
  }

  bool edges_ok(std::size_t x, std::size_t c, std::size_t depth) const {
    for (std::size_t k = 0; k < depth; ++k) {
      const std::size_t y = order_[k];
      const Interval& m1 = b1_[x * n1_ + y];
      const Interval& m2 = b2_[c * n2_ + image_[y]];
      if (preserves_arcs(kind_) ? m1 != m2 : !leq(m1, m2)) return false;
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == n1_) return true;
    const std::size_t x = order_[depth];
    for (std::size_t c = 0; c < n2_; ++c) {
      if (used_[c]) continue;
      if (opts_.prune && !vertex_ok(x, c)) continue;
      if (++nodes_ > opts_.node_budget) {
        throw Error(ErrorCode::BudgetExceeded, "morphism search exceeded " + std::to_string(opts_.node_budget) + " nodes");
      }
      if (stats_ != nullptr) stats_->nodes = nodes_;
      if (!opts_.prune && !vertex_ok(x, c)) continue;
      if (!edges_ok(x, c, depth)) continue;
      image_[x] = c;
      used_[c] = true;
      if (extend(depth + 1)) return true;
      used_[c] = false;
      image_[x] = kNone;
    }
    return false;
  }

  const IVFuzzyGraph& g1_;
  const IVFuzzyGraph& g2_;
  MorphismKind kind_;
  SearchOptions opts_;
  SearchStats* stats_;
  std::size_t n1_;
  std::size_t n2_;
  std::vector<Interval> b1_;
  std::vector<Interval> b2_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> image_;
  std::vector<bool> used_;
  std::size_t nodes_ = 0;
};

}  // namespace detail

/// Backtracking search for a morphism of the given kind. Homomorphism search
/// only visits injective maps. Deterministic for fixed vertex orders.
inline std::optional<VertexMapping> find_morphism(const IVFuzzyGraph& g1, const IVFuzzyGraph& g2, MorphismKind kind,
                                                  const SearchOptions& opts = {}, SearchStats* stats = nullptr) {
  return detail::MorphismSearch(g1, g2, kind, opts, stats).run();
}

inline bool are_isomorphic(const IVFuzzyGraph& g1, const IVFuzzyGraph& g2, const SearchOptions& opts = {}) {
  return find_morphism(g1, g2, MorphismKind::Isomorphism, opts).has_value();
}

}  // namespace ivfg
