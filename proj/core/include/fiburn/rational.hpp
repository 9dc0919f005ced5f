// Exact arithmetic primitives: rational coefficients and Q/Z character values.
//
// Every computation in this library is exact; there is no floating point
// anywhere.  Coefficients live in Q (GMP rationals), character values live in
// Q/Z written additively, so that a/b stands for the root of unity
// exp(2*pi*i*a/b).

#ifndef FIBURN_RATIONAL_HPP
#define FIBURN_RATIONAL_HPP

#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace fiburn {

using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

/// Renders a rational as "n" or "n/d" with d > 0, matching the wire format.
std::string rat_to_string(const Rat& q);

/// Parses "n" or "n/d"; throws std::invalid_argument on malformed input.
Rat rat_from_string(const std::string& s);

/// A value in Q/Z: the reduced fraction num/den with 0 <= num < den.
/// The additive order of the value is exactly `den`.
struct QZ {
  std::int64_t num = 0;
  std::int64_t den = 1;

  QZ() = default;
  QZ(std::int64_t n, std::int64_t d) {
    if (d <= 0) throw std::invalid_argument("QZ: nonpositive denominator");
    n %= d;
    if (n < 0) n += d;
    std::int64_t g = std::gcd(n, d);
    if (g == 0) g = 1;
    num = n / g;
    den = d / g;
    if (num == 0) den = 1;
  }

  bool is_zero() const { return num == 0; }

  friend QZ operator+(const QZ& a, const QZ& b) {
    std::int64_t d = std::lcm(a.den, b.den);
    return QZ(a.num * (d / a.den) + b.num * (d / b.den), d);
  }
  friend QZ operator-(const QZ& a, const QZ& b) { return a + (-b); }
  QZ operator-() const { return QZ(den - num, den); }

  /// k-fold sum of the value; evaluates characters on powers.
  QZ times(std::int64_t k) const {
    std::int64_t r = (k % den) * num % den;
    if (r < 0) r += den;
    return QZ(r, den);
  }

  friend bool operator==(const QZ& a, const QZ& b) = default;
  friend auto operator<=>(const QZ& a, const QZ& b) {
    // Total order by actual value a.num/a.den in [0,1).
    return a.num * b.den <=> b.num * a.den;
  }
};

std::string qz_to_string(const QZ& v);
QZ qz_from_string(const std::string& s);

inline std::size_t hash_combine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace fiburn

template <>
struct std::hash<fiburn::QZ> {
  std::size_t operator()(const fiburn::QZ& v) const noexcept {
    return fiburn::hash_combine(std::hash<std::int64_t>{}(v.num),
                                std::hash<std::int64_t>{}(v.den));
  }
};

#endif  // FIBURN_RATIONAL_HPP
