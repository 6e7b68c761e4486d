#include "accel/special_functions.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "accel/error.hpp"

namespace accel {

double legendre_p(std::size_t k, double x) {
  if (!std::isfinite(x)) fail(ErrorKind::NonFiniteValue, "legendre_p: non-finite argument");
  LegendreWalker w(x);
  return w.at(k);
}

double LegendreWalker::at(std::size_t k) {
  if (k < n_) {
    n_ = 0;
    prev_ = 0.0;
    cur_ = 1.0;
  }
  while (n_ < k) {
    const auto n = static_cast<double>(n_);
    const double next = ((2.0 * n + 1.0) * x_ * cur_ - n * prev_) / (n + 1.0);
    prev_ = cur_;
    cur_ = next;
    ++n_;
  }
  return cur_;
}

Jet legendre_p(std::size_t k, const Jet& x) {
  const std::size_t p = x.order();
  Jet prev = Jet::constant(x.t0(), p, 0.0);
  Jet cur = Jet::constant(x.t0(), p, 1.0);
  for (std::size_t i = 0; i < k; ++i) {
    const auto n = static_cast<double>(i);
    Jet next = ((2.0 * n + 1.0) * (x * cur) - n * prev) * (1.0 / (n + 1.0));
    prev = std::move(cur);
    cur = std::move(next);
  }
  // Keep the value identical to the scalar recurrence.
  cur[0] = legendre_p(k, x.value());
  return cur;
}

// ---------------------------------------------------------------------------
// Bessel J0 / J1

namespace {

struct DoubleDouble {
  double hi = 0.0;
  double lo = 0.0;
};

DoubleDouble quick_two_sum(double a, double b) {
  const double s = a + b;
  return {s, b - (s - a)};
}

DoubleDouble dd_add(DoubleDouble a, DoubleDouble b) {
  const double s = a.hi + b.hi;
  const double bb = s - a.hi;
  double e = (a.hi - (s - bb)) + (b.hi - bb);
  e += a.lo + b.lo;
  return quick_two_sum(s, e);
}

DoubleDouble dd_mul(DoubleDouble a, DoubleDouble b) {
  const double p = a.hi * b.hi;
  double e = std::fma(a.hi, b.hi, -p);
  e += a.hi * b.lo + a.lo * b.hi;
  return quick_two_sum(p, e);
}

DoubleDouble dd_div(DoubleDouble a, double d) {
  const double q1 = a.hi / d;
  const double p = q1 * d;
  const double pe = std::fma(q1, d, -p);
  const double s = a.hi - p;
  const double bb = s - a.hi;
  double e = (a.hi - (s - bb)) + (-p - bb);
  e = e - pe + a.lo;
  const double q2 = (s + e) / d;
  return quick_two_sum(q1, q2);
}

constexpr double kAsymptoticStart = 20.0;

double bessel_series(int order, double x) {
  // q = x^2 / 4, exactly representable as a double-double.
  const double xx = x * x;
  const DoubleDouble neg_q{-0.25 * xx, -0.25 * std::fma(x, x, -xx)};
  DoubleDouble term = order == 0 ? DoubleDouble{1.0, 0.0} : DoubleDouble{0.5 * x, 0.0};
  DoubleDouble sum = term;
  const double q = 0.25 * xx;
  for (int k = 1; k < 300; ++k) {
    const double denom = order == 0 ? static_cast<double>(k) * k : static_cast<double>(k) * (k + 1);
    term = dd_div(dd_mul(term, neg_q), denom);
    sum = dd_add(sum, term);
    if (k > q && std::abs(term.hi) < 1e-34) break;
  }
  return sum.hi + sum.lo;
}

double bessel_asymptotic(int order, double x) {
  const double mu = 4.0 * order * order;
  double p = 1.0;
  double q = 0.0;
  double term = 1.0;
  double last = 1.0;
  for (int k = 1; k < 200; ++k) {
    const double odd = 2.0 * k - 1.0;
    term *= (mu - odd * odd) / (8.0 * k * x);
    if (std::abs(term) > std::abs(last) || term == 0.0) break;
    // Signs follow the pattern +t0, +t1, -t2, -t3, +t4, ...
    const double sign = ((k / 2) % 2 == 0) ? 1.0 : -1.0;
    if (k % 2 == 0) {
      p += sign * term;
    } else {
      q += sign * term;
    }
    last = term;
    if (std::abs(term) < 1e-18) break;
  }
  const double s = std::sin(x);
  const double c = std::cos(x);
  // chi = x - (order/2 + 1/4) pi, expanded to avoid reducing a shifted argument.
  double cos_chi, sin_chi;
  if (order == 0) {
    cos_chi = (c + s) * std::numbers::sqrt2 * 0.5;
    sin_chi = (s - c) * std::numbers::sqrt2 * 0.5;
  } else {
    cos_chi = (s - c) * std::numbers::sqrt2 * 0.5;
    sin_chi = -(s + c) * std::numbers::sqrt2 * 0.5;
  }
  return std::sqrt(2.0 / (std::numbers::pi * x)) * (p * cos_chi - q * sin_chi);
}

}  // namespace

double bessel_j(int order, double x) {
  if (order != 0 && order != 1) fail(ErrorKind::InvalidParams, "bessel_j: order must be 0 or 1");
  if (std::isnan(x)) fail(ErrorKind::NonFiniteValue, "bessel_j: NaN argument");
  if (x < 0.0) fail(ErrorKind::InvalidParams, "bessel_j: argument must be >= 0");
  if (std::isinf(x)) return 0.0;
  if (x < kAsymptoticStart) return bessel_series(order, x);
  return bessel_asymptotic(order, x);
}

std::vector<double> bessel_j_taylor(int order, double u0, std::size_t degree) {
  if (order != 0 && order != 1) fail(ErrorKind::InvalidParams, "bessel_j_taylor: order must be 0 or 1");
  if (u0 < 0.0) fail(ErrorKind::InvalidParams, "bessel_j_taylor: argument must be >= 0");
  // J0 coefficients, one degree further when J1 = -J0' is wanted.
  const std::size_t d0 = degree + static_cast<std::size_t>(order);
  std::vector<double> a(d0 + 1, 0.0);
  if (u0 < 2.0) {
    const Jet u = Jet::variable(u0, d0);
    const Jet neg_q = (u * u) * -0.25;
    Jet term = Jet::constant(u0, d0, 1.0);
    Jet sum = term;
    for (int k = 1; k <= 40; ++k) {
      term = (term * neg_q) * (1.0 / (static_cast<double>(k) * k));
      sum += term;
    }
    a = sum.coeffs();
    a[0] = bessel_j(0, u0);
  } else {
    // u y'' + y' + u y = 0 about u0, coefficient of s^i:
    // u0 (i+2)(i+1) a_{i+2} + (i+1)^2 a_{i+1} + u0 a_i + a_{i-1} = 0
    a[0] = bessel_j(0, u0);
    if (d0 >= 1) a[1] = -bessel_j(1, u0);
    for (std::size_t i = 0; i + 2 <= d0; ++i) {
      const double ip1 = static_cast<double>(i + 1);
      const double prev = i >= 1 ? a[i - 1] : 0.0;
      a[i + 2] = -(ip1 * ip1 * a[i + 1] + u0 * a[i] + prev) / (u0 * (ip1 + 1.0) * ip1);
    }
  }
  if (order == 0) return a;
  std::vector<double> b(degree + 1);
  for (std::size_t i = 0; i <= degree; ++i) b[i] = -static_cast<double>(i + 1) * a[i + 1];
  b[0] = bessel_j(1, u0);
  return b;
}

Jet bessel_j(int order, const Jet& u) {
  const std::vector<double> taylor = bessel_j_taylor(order, u.value(), u.order());
  Jet r = compose(taylor, u);
  r[0] = bessel_j(order, u.value());
  return r;
}

}  // namespace accel
