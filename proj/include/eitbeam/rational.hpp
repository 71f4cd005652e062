#pragma once

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>

namespace eitbeam {

// Exact rational arithmetic for hyperfine line weights and nuclear spins.
// Keeps sum-to-one checks exact when the catalog quotes fractions like 4/15.
struct Rational {
  long long num = 0;
  long long den = 1;

  constexpr Rational() = default;
  constexpr Rational(long long n) : num(n), den(1) {}
  Rational(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
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

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }

  Rational operator+(const Rational& o) const { return {num * o.den + o.num * den, den * o.den}; }
  Rational operator-(const Rational& o) const { return {num * o.den - o.num * den, den * o.den}; }
  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const { return num * o.den < o.num * den; }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }

  // Parses "p/q" or a plain integer string.
  static Rational parse(const std::string& text) {
    std::size_t slash = text.find('/');
    try {
      if (slash == std::string::npos) return {std::stoll(text), 1};
      return {std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1))};
    } catch (const std::exception&) {
      throw std::invalid_argument("Rational: cannot parse \"" + text + "\"");
    }
  }

  // Nearest rational with bounded denominator (continued fractions). Recovers
  // exact fractions from decimally-specified inputs like 0.25 or 0.3333333333.
  static Rational from_double(double x, long long max_den = 1'000'000'000LL) {
    if (x != x) throw std::invalid_argument("Rational: NaN");
    const bool neg = x < 0;
    double v = neg ? -x : x;
    long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double frac = v;
    for (int i = 0; i < 64; ++i) {
      const double a_f = std::floor(frac);
      if (a_f > static_cast<double>(max_den)) break;
      const long long a = static_cast<long long>(a_f);
      const long long p2 = a * p1 + p0;
      const long long q2 = a * q1 + q0;
      if (q2 > max_den) break;
      p0 = p1;
      q0 = q1;
      p1 = p2;
      q1 = q2;
      const double rem = frac - a_f;
      if (rem < 1e-15 * (1.0 + v)) break;
      frac = 1.0 / rem;
    }
    if (q1 == 0) return {neg ? -p0 : p0, q0};
    return {neg ? -p1 : p1, q1};
  }
};

}  // namespace eitbeam
