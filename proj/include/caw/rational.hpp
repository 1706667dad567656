#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace caw {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational scalar. The only number type used by the core; doubles
/// appear only in the diagnostic eigensolver.
using Rat = boost::multiprecision::cpp_rational;

inline int sign(const Rat& r) { return r.sign(); }

inline Rat rat(long long n) { return Rat(n); }

inline Rat rat(long long n, long long d) {
  if (d == 0) throw std::invalid_argument("rational with zero denominator");
  return Rat(BigInt(n), BigInt(d));
}

/// Parses "p/q" or a bare integer. Whitespace is not tolerated.
inline Rat rat_parse(std::string_view s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string_view::npos) return Rat(BigInt(std::string(s)));
    BigInt num{std::string(s.substr(0, slash))};
    BigInt den{std::string(s.substr(slash + 1))};
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rat(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a rational: '" + std::string(s) + "'");
  }
}

/// Renders reduced, denominator positive; integers print without "/1".
inline std::string rat_str(const Rat& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

inline Rat rat_pow(const Rat& base, unsigned e) {
  Rat acc(1), b = base;
  while (e) {
    if (e & 1u) acc *= b;
    b *= b;
    e >>= 1u;
  }
  return acc;
}

inline double rat_double(const Rat& r) { return r.convert_to<double>(); }

inline BigInt binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;
  }
  return r;
}

inline BigInt factorial(long long n) {
  BigInt r = 1;
  for (long long i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace caw
