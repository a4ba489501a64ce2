#pragma once

#include <gmpxx.h>

#include <concepts>
#include <string>
#include <string_view>

namespace multigame {

// Exact arithmetic for everything that lives on a finite type space.
using Rational = mpq_class;

// Scalars the templated calculus is instantiated for: exact and binary64.
template <class T>
concept Scalar = std::same_as<T, Rational> || std::same_as<T, double>;

// Sign tests in float mode treat |x| below this as zero.
inline constexpr double kFloatZeroTolerance = 1e-12;

// num/den in canonical form. mpq_class(num, den) is not reduced, and gmp comparisons
// assume reduced operands.
inline Rational frac(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Accepts "num/den", integers and decimal literals ("0.25", "-1.5e-3").
// Decimals are converted digit-exactly, so "0.3" is 3/10.
Rational parse_rational(std::string_view text);

// "num/den", or just "num" when the denominator is 1.
std::string to_string(const Rational& q);

inline double to_double(const Rational& q) { return q.get_d(); }
inline double to_double(double x) { return x; }

inline int sign_of(const Rational& q) { return sgn(q); }
inline int sign_of(double x) {
  if (x > kFloatZeroTolerance) return 1;
  if (x < -kFloatZeroTolerance) return -1;
  return 0;
}

// Brings an exact payoff or type value into the scalar domain T.
template <Scalar T>
T scalar_cast(const Rational& q) {
  if constexpr (std::same_as<T, Rational>) {
    return q;
  } else {
    return q.get_d();
  }
}

}  // namespace multigame
