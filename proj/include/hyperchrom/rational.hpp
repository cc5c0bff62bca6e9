#ifndef HYPERCHROM_RATIONAL_HPP
#define HYPERCHROM_RATIONAL_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace hyperchrom {

/// Exact rational number, always stored in lowest terms with a positive
/// denominator.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  return Rational(BigInt(num), BigInt(den));
}

inline BigInt numerator_of(const Rational& x) { return boost::multiprecision::numerator(x); }
inline BigInt denominator_of(const Rational& x) { return boost::multiprecision::denominator(x); }

/// Largest integer <= x.
inline BigInt floor_of(const Rational& x) {
  BigInt num = numerator_of(x);
  BigInt den = denominator_of(x);
  BigInt q = num / den;  // truncates toward zero
  if (num < 0 && q * den != num) q -= 1;
  return q;
}

/// Smallest integer >= x.
inline BigInt ceil_of(const Rational& x) { return -floor_of(-x); }

/// floor(x) clamped to the int64 range; enough for count comparisons.
inline std::int64_t floor_i64(const Rational& x) {
  BigInt f = floor_of(x);
  if (f > BigInt(INT64_MAX)) return INT64_MAX;
  if (f < BigInt(INT64_MIN)) return INT64_MIN;
  return static_cast<std::int64_t>(f);
}

inline std::int64_t ceil_i64(const Rational& x) { return -floor_i64(-x); }

inline std::string to_string(const Rational& x) {
  if (denominator_of(x) == 1) return numerator_of(x).str();
  return numerator_of(x).str() + "/" + denominator_of(x).str();
}

inline double to_double(const Rational& x) { return x.convert_to<double>(); }

/// Parses "p", "p/q" or a plain decimal such as "0.05" into an exact
/// rational.
inline Rational parse_rational(const std::string& text) {
  auto bad = [&] { return std::invalid_argument("not a rational number: '" + text + "'"); };
  if (text.empty()) throw bad();
  auto slash = text.find('/');
  try {
    if (slash != std::string::npos) {
      BigInt num(text.substr(0, slash));
      BigInt den(text.substr(slash + 1));
      if (den == 0) throw bad();
      return Rational(num, den);
    }
    auto dot = text.find('.');
    if (dot == std::string::npos) return Rational(BigInt(text));
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    if (digits.empty() || digits == "-") throw bad();
    BigInt den = 1;
    for (std::size_t i = dot + 1; i < text.size(); ++i) den *= 10;
    return Rational(BigInt(digits), den);
  } catch (const std::runtime_error&) {
    throw bad();
  }
}

/// Rational bracket [lo, hi] around an irrational (or rational) quantity.
struct Enclosure {
  Rational lo;
  Rational hi;
  bool exact() const { return lo == hi; }
};

/// Encloses x^{1/k} (x >= 0) between consecutive multiples of 1/denominator;
/// lo == hi when the root is itself such a multiple.
inline Enclosure root_enclosure(const Rational& x, unsigned k, std::uint64_t denominator = 1'000'000) {
  if (x < 0) throw std::domain_error("root of a negative rational");
  if (k == 0) throw std::domain_error("zeroth root");
  const BigInt d(denominator);
  BigInt dk = 1;
  for (unsigned i = 0; i < k; ++i) dk *= d;
  const BigInt num = numerator_of(x) * dk;  // a^k * den(x) <= num(x) * d^k
  const BigInt den = denominator_of(x);
  auto pow_k = [k](const BigInt& a) {
    BigInt r = 1;
    for (unsigned i = 0; i < k; ++i) r *= a;
    return r;
  };
  BigInt lo = 0;
  BigInt hi = d * (ceil_of(x) + 1);  // hi^k * den > num
  while (hi - lo > 1) {
    BigInt mid = (lo + hi) / 2;
    if (pow_k(mid) * den <= num) lo = mid; else hi = mid;
  }
  Enclosure out{Rational(lo, d), Rational(lo + 1, d)};
  if (pow_k(lo) * den == num) out.hi = out.lo;
  return out;
}

/// True iff size >= factor * sqrt(n), decided in integers:
/// size^2 * den^2 >= n * num^2 when factor > 0.
inline bool at_least_scaled_sqrt(std::uint64_t size, const Rational& factor, std::uint64_t n) {
  if (factor <= 0) return true;
  BigInt num = numerator_of(factor);
  BigInt den = denominator_of(factor);
  BigInt s(size);
  return s * s * den * den >= BigInt(n) * num * num;
}

/// True iff size <= factor * sqrt(n).
inline bool at_most_scaled_sqrt(std::uint64_t size, const Rational& factor, std::uint64_t n) {
  if (factor < 0) return false;
  BigInt num = numerator_of(factor);
  BigInt den = denominator_of(factor);
  BigInt s(size);
  return s * s * den * den <= BigInt(n) * num * num;
}

}  // namespace hyperchrom

#endif  // HYPERCHROM_RATIONAL_HPP
