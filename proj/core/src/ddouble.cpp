// Copyright (c) the simbound authors.
// SPDX-License-Identifier: Apache-2.0

#include "simbound/ddouble.hpp"

#include <array>
#include <cassert>
#include <cmath>

namespace simbound {

namespace {

// Error-free transforms (Dekker/Knuth). No FMA dependence so results are
// bit-identical across targets.
inline DDouble two_sum(double a, double b) {
  double s = a + b;
  double bb = s - a;
  double err = (a - (s - bb)) + (b - bb);
  return {s, err};
}

inline DDouble quick_two_sum(double a, double b) {  // requires |a| >= |b|
  double s = a + b;
  double err = b - (s - a);
  return {s, err};
}

inline void split(double a, double& hi, double& lo) {
  constexpr double splitter = 134217729.0;  // 2^27 + 1
  double t = splitter * a;
  hi = t - (t - a);
  lo = a - hi;
}

inline DDouble two_prod(double a, double b) {
  double p = a * b;
  double a_hi, a_lo, b_hi, b_lo;
  split(a, a_hi, a_lo);
  split(b, b_hi, b_lo);
  double err = ((a_hi * b_hi - p) + a_hi * b_lo + a_lo * b_hi) + a_lo * b_lo;
  return {p, err};
}

}  // namespace

DDouble DDouble::operator+(const DDouble& b) const {
  DDouble s = two_sum(hi, b.hi);
  double e = s.lo + lo + b.lo;
  return quick_two_sum(s.hi, e);
}

DDouble DDouble::operator-(const DDouble& b) const { return *this + (-b); }

DDouble DDouble::operator*(const DDouble& b) const {
  DDouble p = two_prod(hi, b.hi);
  double e = p.lo + hi * b.lo + lo * b.hi;
  return quick_two_sum(p.hi, e);
}

DDouble DDouble::operator/(const DDouble& b) const {
  double q1 = hi / b.hi;
  DDouble r = *this - b * q1;
  double q2 = r.hi / b.hi;
  r = r - b * q2;
  double q3 = r.hi / b.hi;
  DDouble q = quick_two_sum(q1, q2);
  return q + q3;
}

DDouble DDouble::operator+(double b) const {
  DDouble s = two_sum(hi, b);
  return quick_two_sum(s.hi, s.lo + lo);
}

DDouble DDouble::operator-(double b) const { return *this + (-b); }

DDouble DDouble::operator*(double b) const {
  DDouble p = two_prod(hi, b);
  return quick_two_sum(p.hi, p.lo + lo * b);
}

DDouble DDouble::operator/(double b) const { return *this / DDouble(b); }

DDouble dd_log(double x) {
  assert(x > 0.0 && std::isfinite(x));
  int e = 0;
  double m = std::frexp(x, &e);  // m in [0.5, 1)
  if (m < 0.7071067811865476) {
    m *= 2.0;
    e -= 1;
  }
  // ln(m) = 2 atanh(t), t = (m-1)/(m+1), |t| <= 0.1716.
  // m - 1 is exact (Sterbenz); m + 1 kept in dd form.
  DDouble t = DDouble(m - 1.0) / two_sum(m, 1.0);
  DDouble t2 = t * t;
  DDouble term = t;
  DDouble acc = t;
  for (int k = 3; k <= 47; k += 2) {
    term = term * t2;
    acc = acc + term / static_cast<double>(k);
    if (std::fabs(term.hi) < 1e-35) break;
  }
  return ddc::ln2 * static_cast<double>(e) + acc * 2.0;
}

DDouble dd_log1p(double x) {
  assert(x > -1.0);
  DDouble one_plus = two_sum(1.0, x);  // exact
  const double r = one_plus.lo / one_plus.hi;
  return dd_log(one_plus.hi) + (r - 0.5 * r * r);
}

namespace {

constexpr int kFactTableSize = 512;

const std::array<DDouble, kFactTableSize>& log_factorial_table() {
  static const std::array<DDouble, kFactTableSize> table = [] {
    std::array<DDouble, kFactTableSize> t{};
    t[0] = DDouble(0.0);
    for (int i = 1; i < kFactTableSize; ++i) {
      t[i] = t[i - 1] + dd_log(static_cast<double>(i));
    }
    return t;
  }();
  return table;
}

// Stirling series for ln Gamma(x), valid for x >= ~512 with the terms below.
DDouble dd_log_gamma_large(double x) {
  DDouble lx = dd_log(x);
  DDouble r = (DDouble(x) - 0.5) * lx - x + ddc::half_ln_2pi;
  // Correction terms are < 2e-4 in magnitude; plain double suffices there.
  double inv = 1.0 / x;
  double inv2 = inv * inv;
  double corr = inv * (1.0 / 12 + inv2 * (-1.0 / 360 + inv2 * (1.0 / 1260 +
               inv2 * (-1.0 / 1680 + inv2 * (1.0 / 1188 + inv2 * (-691.0 / 360360))))));
  return r + corr;
}

}  // namespace

DDouble dd_log_factorial(std::int64_t n) {
  assert(n >= 0);
  if (n < kFactTableSize) return log_factorial_table()[static_cast<int>(n)];
  return dd_log_gamma_large(static_cast<double>(n) + 1.0);
}

}  // namespace simbound
