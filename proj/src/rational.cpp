#include "pou/rational.hpp"

#include <numeric>

#include "pou/errors.hpp"

namespace pou {

namespace {

using i128 = __int128;

// Keep components small enough that (q+p)^2 style kappa values and their
// products with degrees stay inside __int128 with lots of headroom.
constexpr long long kMaxComponent = 1'000'000'000LL;

}  // namespace

Rational::Rational(long long n, long long d) : num(n), den(d) {
  if (den == 0) throw ParseError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

Rational Rational::parse(const std::string& text) {
  const auto slash = text.find('/');
  try {
    size_t used = 0;
    if (slash == std::string::npos) {
      const long long p = std::stoll(text, &used);
      if (used != text.size()) throw ParseError("trailing characters in '" + text + "'");
      return {p, 1};
    }
    const std::string ps = text.substr(0, slash), qs = text.substr(slash + 1);
    const long long p = std::stoll(ps, &used);
    if (used != ps.size()) throw ParseError("bad numerator in '" + text + "'");
    const long long q = std::stoll(qs, &used);
    if (used != qs.size()) throw ParseError("bad denominator in '" + text + "'");
    if (p < 0 || q <= 0 || p > kMaxComponent || q > kMaxComponent)
      throw ParseError("rational out of range: '" + text + "'");
    return {p, q};
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("expected p/q, got '" + text + "'");
  }
}

Rational Rational::operator+(const Rational& o) const {
  return {num * o.den + o.num * den, den * o.den};
}

Rational Rational::operator-(const Rational& o) const {
  return {num * o.den - o.num * den, den * o.den};
}

Rational Rational::operator*(const Rational& o) const { return {num * o.num, den * o.den}; }

bool Rational::operator<(const Rational& o) const {
  return i128(num) * o.den < i128(o.num) * den;
}

bool Rational::operator<=(const Rational& o) const {
  return i128(num) * o.den <= i128(o.num) * den;
}

std::string Rational::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

long long floor_mul(const Rational& r, long long z) {
  return static_cast<long long>(i128(r.num) * z / r.den);
}

long long ceil_div(long long a, const Rational& r) {
  // ceil(a / (num/den)) = ceil(a*den / num)
  const i128 n = i128(a) * r.den;
  return static_cast<long long>((n + r.num - 1) / r.num);
}

long long ceil_div_int(long long a, long long b) { return (a + b - 1) / b; }

}  // namespace pou
