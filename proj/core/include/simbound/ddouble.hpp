// Copyright (c) the simbound authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef SIMBOUND_DDOUBLE_HPP
#define SIMBOUND_DDOUBLE_HPP

#include <cstdint>

namespace simbound {

// Unevaluated sum of two doubles, hi + lo with |lo| <= ulp(hi)/2.
// Carries ~32 significant decimal digits; used for log-domain quantities
// (log-factorials, beta-function front factors) where plain double ulp
// error on values of magnitude 1e5..1e7 would exceed the tail-probability
// accuracy contract.
struct DDouble {
  double hi = 0.0;
  double lo = 0.0;

  constexpr DDouble() = default;
  explicit constexpr DDouble(double x) : hi(x), lo(0.0) {}
  constexpr DDouble(double h, double l) : hi(h), lo(l) {}

  double to_double() const { return hi + lo; }

  DDouble operator-() const { return {-hi, -lo}; }
  DDouble operator+(const DDouble& b) const;
  DDouble operator-(const DDouble& b) const;
  DDouble operator*(const DDouble& b) const;
  DDouble operator/(const DDouble& b) const;
  DDouble operator+(double b) const;
  DDouble operator-(double b) const;
  DDouble operator*(double b) const;
  DDouble operator/(double b) const;
};

// ln(x) for finite x > 0, accurate to ~1e-32 relative.
DDouble dd_log(double x);

// ln(1 + x) for x > -1, treating 1 + x as exact (the rounding of the
// double sum is captured, which matters when x is a small negative
// probability feeding a large exponent).
DDouble dd_log1p(double x);

// ln(n!) for n >= 0. Table-backed below 512, Stirling series above.
DDouble dd_log_factorial(std::int64_t n);

namespace ddc {
inline constexpr DDouble ln2{0.6931471805599453, 2.3190468138462996e-17};
inline constexpr DDouble half_ln_2pi{0.9189385332046728, -3.8782941580672414e-17};
}  // namespace ddc

}  // namespace simbound

#endif
