#pragma once

#include <compare>
#include <cstdint>
#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "ivfg/error.hpp"

namespace ivfg {

/// Exact rational number kept in canonical reduced form (den > 0, gcd = 1).
///
/// Arithmetic is carried out in 128-bit intermediates and throws
/// `Error(Overflow)` if a reduced result does not fit in 64 bits.
class Rational {
 public:
  using int_type = std::int64_t;

  constexpr Rational() noexcept = default;
  constexpr Rational(int_type value) noexcept : num_(value) {}  // NOLINT(implicit)
  Rational(int_type num, int_type den) { *this = reduce(num, den); }

  [[nodiscard]] constexpr int_type num() const noexcept { return num_; }
  [[nodiscard]] constexpr int_type den() const noexcept { return den_; }

  [[nodiscard]] constexpr bool is_zero() const noexcept { return num_ == 0; }
  [[nodiscard]] constexpr bool is_positive() const noexcept { return num_ > 0; }
  [[nodiscard]] constexpr bool is_negative() const noexcept { return num_ < 0; }

  /// True iff 0 <= value <= 1.
  [[nodiscard]] constexpr bool in_unit_range() const noexcept { return num_ >= 0 && num_ <= den_; }

  friend constexpr bool operator==(const Rational&, const Rational&) noexcept = default;

  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
    const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    return lhs <=> rhs;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return from_wide(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                     static_cast<__int128>(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return from_wide(static_cast<__int128>(a.num_) * b.den_ - static_cast<__int128>(b.num_) * a.den_,
                     static_cast<__int128>(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return from_wide(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw Error(ErrorCode::InvalidArgument, "division by zero");
    return from_wide(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
  }
  Rational operator-() const { return from_wide(-static_cast<__int128>(num_), den_); }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  /// Parses "d", "d.ddd", ".5", optional leading '-', or "p/q" with integer p, q (q != 0).
  /// Returns nullopt on anything else, including mixed forms like "0.2/3".
  static std::optional<Rational> parse(std::string_view text) noexcept;

  /// Exact decimal when the denominator is of the form 2^a 5^b, otherwise "p/q".
  [[nodiscard]] std::string to_string() const;

 private:
  static Rational reduce(int_type num, int_type den) { return from_wide(num, den); }

  static Rational from_wide(__int128 num, __int128 den) {
    if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const __int128 g = gcd_wide(num < 0 ? -num : num, den);
    num /= g;
    den /= g;
    constexpr __int128 kMax = std::numeric_limits<int_type>::max();
    constexpr __int128 kMin = std::numeric_limits<int_type>::min();
    if (num > kMax || num < kMin || den > kMax) {
      throw Error(ErrorCode::Overflow, "rational out of 64-bit range");
    }
    Rational r;
    r.num_ = static_cast<int_type>(num);
    r.den_ = static_cast<int_type>(den);
    return r;
  }

  static __int128 gcd_wide(__int128 a, __int128 b) noexcept {
    while (b != 0) {
      const __int128 t = a % b;
      a = b;
      b = t;
    }
    return a == 0 ? 1 : a;
  }

  int_type num_ = 0;
  int_type den_ = 1;
};

inline std::optional<Rational> Rational::parse(std::string_view text) noexcept {
  auto parse_int = [](std::string_view s, bool allow_sign) -> std::optional<__int128> {
    bool neg = false;
    if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) {
      neg = s.front() == '-';
      s.remove_prefix(1);
    }
    if (s.empty()) return std::nullopt;
    __int128 v = 0;
    for (char c : s) {
      if (c < '0' || c > '9') return std::nullopt;
      v = v * 10 + (c - '0');
      if (v > std::numeric_limits<int_type>::max()) return std::nullopt;
    }
    return neg ? -v : v;
  };

  try {
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
      const auto p = parse_int(text.substr(0, slash), true);
      const auto q = parse_int(text.substr(slash + 1), false);
      if (!p || !q || *q == 0) return std::nullopt;
      return from_wide(*p, *q);
    }

    bool neg = false;
    std::string_view s = text;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
      neg = s.front() == '-';
      s.remove_prefix(1);
    }
    const auto dot = s.find('.');
    std::string_view int_part = s.substr(0, dot);
    std::string_view frac_part = dot == std::string_view::npos ? std::string_view{} : s.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) return std::nullopt;
    if (dot != std::string_view::npos && frac_part.empty()) return std::nullopt;
    // Trailing zeros in the fraction do not change the value and would only eat precision.
    while (!frac_part.empty() && frac_part.back() == '0') frac_part.remove_suffix(1);
    if (frac_part.size() > 18) return std::nullopt;

    __int128 whole = 0;
    if (!int_part.empty()) {
      const auto w = parse_int(int_part, false);
      if (!w) return std::nullopt;
      whole = *w;
    }
    __int128 frac = 0;
    __int128 scale = 1;
    for (char c : frac_part) {
      if (c < '0' || c > '9') return std::nullopt;
      frac = frac * 10 + (c - '0');
      scale *= 10;
    }
    __int128 num = whole * scale + frac;
    if (neg) num = -num;
    return from_wide(num, scale);
  } catch (const Error&) {
    return std::nullopt;
  }
}

inline std::string Rational::to_string() const {
  int_type d = den_;
  int twos = 0;
  int fives = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++twos;
  }
  while (d % 5 == 0) {
    d /= 5;
    ++fives;
  }
  const int digits = std::max(twos, fives);
  if (d != 1 || digits > 18) return std::to_string(num_) + "/" + std::to_string(den_);

  if (digits == 0) return std::to_string(num_);
  // Scale to den = 10^digits.
  __int128 scaled = num_;
  for (int i = twos; i < digits; ++i) scaled *= 2;
  for (int i = fives; i < digits; ++i) scaled *= 5;
  const bool neg = scaled < 0;
  if (neg) scaled = -scaled;
  __int128 pow10 = 1;
  for (int i = 0; i < digits; ++i) pow10 *= 10;
  const auto whole = static_cast<int_type>(scaled / pow10);
  auto frac = static_cast<int_type>(scaled % pow10);
  std::string frac_str(static_cast<std::size_t>(digits), '0');
  for (int i = digits - 1; i >= 0; --i) {
    frac_str[static_cast<std::size_t>(i)] = static_cast<char>('0' + frac % 10);
    frac /= 10;
  }
  return (neg ? "-" : "") + std::to_string(whole) + "." + frac_str;
}

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

inline Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace ivfg

template <>
struct std::hash<ivfg::Rational> {
  std::size_t operator()(const ivfg::Rational& r) const noexcept {
    const auto h1 = std::hash<std::int64_t>{}(r.num());
    const auto h2 = std::hash<std::int64_t>{}(r.den());
    return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
  }
};
