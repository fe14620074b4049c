#pragma once

#include <ostream>
#include <string>

#include "ivfg/error.hpp"
#include "ivfg/rational.hpp"

namespace ivfg {

/// An interval number [lo, hi] with 0 <= lo <= hi <= 1.
///
/// Values form a bounded lattice under the componentwise order, with
/// `rmin` as meet, `rmax` as join, [0,0] as bottom and [1,1] as top.
/// The order is partial: [0.1,0.5] and [0.2,0.4] are incomparable.
class Interval {
 public:
  /// The zero interval [0,0]; absent edges carry this membership.
  constexpr Interval() noexcept = default;

  /// Degenerate interval [a,a].
  explicit Interval(const Rational& a) : Interval(a, a) {}

  Interval(const Rational& lo, const Rational& hi) : lo_(lo), hi_(hi) {
    if (!is_valid(lo, hi)) {
      throw Error(ErrorCode::InvalidArgument,
                  "interval [" + lo.to_string() + "," + hi.to_string() + "] outside D[0,1]");
    }
  }

  static bool is_valid(const Rational& lo, const Rational& hi) noexcept {
    return lo.in_unit_range() && hi.in_unit_range() && lo <= hi;
  }

  static Interval zero() noexcept { return {}; }
  static Interval one() { return Interval(Rational(1)); }

  [[nodiscard]] const Rational& lo() const noexcept { return lo_; }
  [[nodiscard]] const Rational& hi() const noexcept { return hi_; }

  [[nodiscard]] bool is_zero() const noexcept { return lo_.is_zero() && hi_.is_zero(); }

  friend bool operator==(const Interval&, const Interval&) noexcept = default;

  [[nodiscard]] std::string to_string() const { return "[" + lo_.to_string() + "," + hi_.to_string() + "]"; }

 private:
  Rational lo_;
  Rational hi_;
};

inline std::ostream& operator<<(std::ostream& os, const Interval& d) { return os << d.to_string(); }

/// Componentwise minimum (lattice meet).
inline Interval rmin(const Interval& a, const Interval& b) { return {min(a.lo(), b.lo()), min(a.hi(), b.hi())}; }

/// Componentwise maximum (lattice join).
inline Interval rmax(const Interval& a, const Interval& b) { return {max(a.lo(), b.lo()), max(a.hi(), b.hi())}; }

/// Probabilistic sum a + b - ab on each bound.
inline Interval prob_sum(const Interval& a, const Interval& b) {
  return {a.lo() + b.lo() - a.lo() * b.lo(), a.hi() + b.hi() - a.hi() * b.hi()};
}

/// Scalar multiple k[lo,hi] = [k lo, k hi] for k in [0,1].
inline Interval scale(const Rational& k, const Interval& d) {
  if (!k.in_unit_range()) throw Error(ErrorCode::InvalidArgument, "scalar " + k.to_string() + " outside [0,1]");
  return {k * d.lo(), k * d.hi()};
}

inline bool leq(const Interval& a, const Interval& b) noexcept { return a.lo() <= b.lo() && a.hi() <= b.hi(); }
inline bool lt(const Interval& a, const Interval& b) noexcept { return leq(a, b) && a != b; }
inline bool geq(const Interval& a, const Interval& b) noexcept { return leq(b, a); }

/// Total lexicographic order on (lo, hi), used only for deterministic sorting.
struct LexLess {
  bool operator()(const Interval& a, const Interval& b) const noexcept {
    if (a.lo() != b.lo()) return a.lo() < b.lo();
    return a.hi() < b.hi();
  }
};

}  // namespace ivfg
