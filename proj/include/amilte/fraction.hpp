#pragma once

#include <cstdint>
#include <compare>
#include <numeric>
#include <string>

#include "amilte/errors.hpp"

namespace amilte {

// Exact rational with 64-bit reduced terms and 128-bit intermediates.
// Bandwidth fractions and report percentages stay exact until formatting;
// every quantity fed in (bits, milliseconds, RB counts) is integral.
class Frac {
 public:
  constexpr Frac() : num_(0), den_(1) {}
  constexpr Frac(std::int64_t value) : num_(value), den_(1) {}  // NOLINT: implicit by design
  Frac(std::int64_t num, std::int64_t den) { assign(num, den); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  bool is_integer() const { return den_ == 1; }

  std::int64_t floor() const {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && (num_ < 0) != (den_ < 0)) --q;
    return q;
  }

  friend Frac operator+(const Frac& a, const Frac& b) {
    return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  friend Frac operator-(const Frac& a, const Frac& b) {
    return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  friend Frac operator*(const Frac& a, const Frac& b) {
    return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Frac operator/(const Frac& a, const Frac& b) {
    if (b.num_ == 0) throw UndefinedRatioError("division of exact fraction by zero");
    return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }

  friend bool operator==(const Frac& a, const Frac& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Frac& a, const Frac& b) {
    return i128(a.num_) * b.den_ <=> i128(b.num_) * a.den_;
  }

  std::string str() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  using i128 = __int128;

  void assign(std::int64_t num, std::int64_t den) {
    if (den == 0) throw UndefinedRatioError("fraction with zero denominator");
    if (den < 0) { num = -num; den = -den; }
    const std::int64_t g = std::gcd(num, den);
    num_ = g ? num / g : num;
    den_ = g ? den / g : den;
  }

  static Frac make(i128 num, i128 den) {
    if (den == 0) throw UndefinedRatioError("fraction with zero denominator");
    if (den < 0) { num = -num; den = -den; }
    const i128 g = gcd128(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
    constexpr i128 lo = -i128(INT64_MAX) - 1, hi = INT64_MAX;
    if (num < lo || num > hi || den > hi)
      throw Error("exact fraction overflow after reduction");
    Frac f;
    f.num_ = static_cast<std::int64_t>(num);
    f.den_ = static_cast<std::int64_t>(den);
    return f;
  }

  static i128 gcd128(i128 a, i128 b) {
    while (b != 0) { const i128 t = a % b; a = b; b = t; }
    return a;
  }

  std::int64_t num_;
  std::int64_t den_;
};

// Half-up rounding of f to `decimals` places, returned in integer ticks of
// 10^-decimals. Exact; no float involved.
inline std::int64_t round_half_up_ticks(const Frac& f, int decimals) {
  __int128 scale = 1;
  for (int i = 0; i < decimals; ++i) scale *= 10;
  __int128 num = static_cast<__int128>(f.num()) * scale;
  const __int128 den = f.den();
  __int128 q = num / den;
  const __int128 r = num % den;
  if (r * 2 >= den) ++q;           // callers only round non-negative values
  return static_cast<std::int64_t>(q);
}

// Rounds to decimals+1 places first, then to `decimals` (both half-up).
// Published tables were produced this way: 0.0444907 -> 0.0445 -> 0.045.
inline std::int64_t round_published_ticks(const Frac& f, int decimals) {
  const std::int64_t fine = round_half_up_ticks(f, decimals + 1);
  return (fine + 5) / 10;
}

// Formats ticks of 10^-decimals as a fixed-point decimal string.
inline std::string format_ticks(std::int64_t ticks, int decimals) {
  if (decimals == 0) return std::to_string(ticks);
  std::int64_t scale = 1;
  for (int i = 0; i < decimals; ++i) scale *= 10;
  std::string frac = std::to_string(ticks % scale);
  frac.insert(frac.begin(), decimals - frac.size(), '0');
  return std::to_string(ticks / scale) + "." + frac;
}

}  // namespace amilte
