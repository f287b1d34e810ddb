#pragma once

#include <cstdint>
#include <string>

namespace pou {

// Exact rational arithmetic. Rule thresholds like "g <= kappa * b" must be
// decided exactly, because the layered instances sit on the boundary by
// design; a double comparison would make schedule validity depend on the
// platform. Values themselves stay small (eps, kappa, their squares), only
// cross products with degrees get large, so comparisons go through __int128.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n, long long d);

  static Rational from_int(long long v) { return {v, 1}; }
  // Accepts "p/q" or a bare integer "p". Throws ParseError.
  static Rational parse(const std::string& text);

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;

  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const;
  bool operator<=(const Rational& o) const;

  bool is_positive() const { return num > 0; }
  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const;
};

// floor(r * z) for z >= 0 and r >= 0.
long long floor_mul(const Rational& r, long long z);

// ceil(a / r) for a >= 0 and r > 0.
long long ceil_div(long long a, const Rational& r);

// ceil(a / b) for nonnegative integers, b > 0.
long long ceil_div_int(long long a, long long b);

}  // namespace pou
