#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>

namespace geog {

// Expression templates stay off: these types are used as plain values in
// std algorithms and aggregate fields.
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;
using Rat =
    boost::multiprecision::number<boost::multiprecision::rational_adaptor<
                                      boost::multiprecision::cpp_int_backend<>>,
                                  boost::multiprecision::et_off>;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;
using boost::multiprecision::lcm;
using boost::multiprecision::powm;
using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

/// Integer square root, rounded down. Requires n >= 0.
inline Int isqrt(const Int& n) {
  if (n < 0) throw std::domain_error("isqrt of negative value");
  return boost::multiprecision::sqrt(n);
}

inline bool is_square(const Int& n) {
  if (n < 0) return false;
  Int r = isqrt(n);
  return r * r == n;
}

/// Floor division for possibly negative numerators.
inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

inline Int ceil_div(const Int& a, const Int& b) { return -floor_div(-a, b); }

inline Int floor_rat(const Rat& q) { return floor_div(numerator(q), denominator(q)); }
inline Int ceil_rat(const Rat& q) { return ceil_div(numerator(q), denominator(q)); }

/// Nearest integer to q; halves round up.
inline Int round_rat(const Rat& q) {
  return floor_rat(q + Rat(1, 2));
}

inline Int pow_int(Int base, unsigned exp) {
  Int acc = 1;
  while (exp) {
    if (exp & 1u) acc *= base;
    base *= base;
    exp >>= 1u;
  }
  return acc;
}

/// Parses "a/b" or "a" into an exact rational.
inline Rat parse_rational(std::string_view s) {
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rat(Int(std::string(s)));
  Int num{std::string(s.substr(0, slash))};
  Int den{std::string(s.substr(slash + 1))};
  if (den == 0) throw std::domain_error("rational with zero denominator");
  return Rat(num, den);
}

inline std::string to_string(const Rat& q) {
  std::string s = numerator(q).str();
  if (denominator(q) != 1) s += "/" + denominator(q).str();
  return s;
}

/// Deterministic random source for the randomized number-theory routines.
/// All library randomness flows through one of these, seeded explicitly,
/// so identical seeds reproduce identical outputs.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t u64() { return eng_(); }

  /// Uniform value in [0, n); n > 0.
  Int below(const Int& n) {
    if (n <= 0) throw std::domain_error("Rng::below requires n > 0");
    const unsigned bits = msb(n) + 1;
    const unsigned words = (bits + 63) / 64;
    for (;;) {
      Int x = 0;
      for (unsigned i = 0; i < words; ++i) {
        x <<= 64;
        x |= Int(eng_());
      }
      x >>= (words * 64 - bits);
      if (x < n) return x;
    }
  }

  /// Uniform value in [lo, hi] inclusive.
  Int between(const Int& lo, const Int& hi) { return lo + below(hi - lo + 1); }

 private:
  static unsigned msb(const Int& n) { return boost::multiprecision::msb(n); }
  std::mt19937_64 eng_;
};

}  // namespace geog
