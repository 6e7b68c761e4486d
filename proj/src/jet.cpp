#include "accel/jet.hpp"

#include <cmath>
#include <string>

#include "accel/error.hpp"

namespace accel {

namespace {

void check_compatible(const Jet& a, const Jet& b) {
  if (a.order() != b.order()) fail(ErrorKind::InvalidParams, "jet order mismatch");
}

bool is_small_integer(double v) { return std::nearbyint(v) == v && std::abs(v) <= 64.0; }

}  // namespace

Jet Jet::constant(double t0, std::size_t order, double value) {
  std::vector<double> c(order + 1, 0.0);
  c[0] = value;
  return Jet(t0, std::move(c));
}

Jet Jet::variable(double t0, std::size_t order) {
  std::vector<double> c(order + 1, 0.0);
  c[0] = t0;
  if (order >= 1) c[1] = 1.0;
  return Jet(t0, std::move(c));
}

double Jet::derivative(std::size_t k) const {
  double f = 1.0;
  for (std::size_t i = 2; i <= k; ++i) f *= static_cast<double>(i);
  return coeffs_.at(k) * f;
}

Jet& Jet::operator+=(const Jet& o) {
  check_compatible(*this, o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

Jet& Jet::operator-=(const Jet& o) {
  check_compatible(*this, o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

Jet& Jet::operator*=(double s) {
  for (double& c : coeffs_) c *= s;
  return *this;
}

Jet operator+(Jet a, const Jet& b) { return a += b; }
Jet operator-(Jet a, const Jet& b) { return a -= b; }
Jet operator-(Jet a) { return a *= -1.0; }
Jet operator*(Jet a, double s) { return a *= s; }
Jet operator*(double s, Jet a) { return a *= s; }

Jet operator*(const Jet& a, const Jet& b) {
  check_compatible(a, b);
  const std::size_t p = a.order();
  std::vector<double> c(p + 1, 0.0);
  for (std::size_t k = 0; k <= p; ++k) {
    double s = 0.0;
    for (std::size_t i = 0; i <= k; ++i) s += a[i] * b[k - i];
    c[k] = s;
  }
  return Jet(a.t0(), std::move(c));
}

Jet operator/(const Jet& a, const Jet& b) {
  check_compatible(a, b);
  if (b[0] == 0.0) fail(ErrorKind::DomainError, "division by zero");
  const std::size_t p = a.order();
  std::vector<double> q(p + 1, 0.0);
  for (std::size_t k = 0; k <= p; ++k) {
    double s = a[k];
    for (std::size_t i = 1; i <= k; ++i) s -= b[i] * q[k - i];
    q[k] = s / b[0];
  }
  return Jet(a.t0(), std::move(q));
}

Jet exp(const Jet& a) {
  const std::size_t p = a.order();
  std::vector<double> e(p + 1, 0.0);
  e[0] = std::exp(a[0]);
  for (std::size_t k = 1; k <= p; ++k) {
    double s = 0.0;
    for (std::size_t i = 1; i <= k; ++i) s += static_cast<double>(i) * a[i] * e[k - i];
    e[k] = s / static_cast<double>(k);
  }
  return Jet(a.t0(), std::move(e));
}

Jet log(const Jet& a) {
  if (!(a[0] > 0.0)) fail(ErrorKind::DomainError, "log of non-positive value");
  const std::size_t p = a.order();
  std::vector<double> l(p + 1, 0.0);
  l[0] = std::log(a[0]);
  for (std::size_t k = 1; k <= p; ++k) {
    double s = 0.0;
    for (std::size_t i = 1; i < k; ++i) s += static_cast<double>(i) * l[i] * a[k - i];
    l[k] = (a[k] - s / static_cast<double>(k)) / a[0];
  }
  return Jet(a.t0(), std::move(l));
}

namespace {

void sin_cos(const Jet& a, std::vector<double>& s, std::vector<double>& c) {
  const std::size_t p = a.order();
  s.assign(p + 1, 0.0);
  c.assign(p + 1, 0.0);
  s[0] = std::sin(a[0]);
  c[0] = std::cos(a[0]);
  for (std::size_t k = 1; k <= p; ++k) {
    double ss = 0.0;
    double cc = 0.0;
    for (std::size_t i = 1; i <= k; ++i) {
      ss += static_cast<double>(i) * a[i] * c[k - i];
      cc += static_cast<double>(i) * a[i] * s[k - i];
    }
    s[k] = ss / static_cast<double>(k);
    c[k] = -cc / static_cast<double>(k);
  }
}

}  // namespace

Jet sin(const Jet& a) {
  std::vector<double> s, c;
  sin_cos(a, s, c);
  return Jet(a.t0(), std::move(s));
}

Jet cos(const Jet& a) {
  std::vector<double> s, c;
  sin_cos(a, s, c);
  return Jet(a.t0(), std::move(c));
}

Jet sqrt(const Jet& a) {
  const std::size_t p = a.order();
  if (a[0] < 0.0) fail(ErrorKind::DomainError, "sqrt of negative value");
  if (a[0] == 0.0 && p > 0) fail(ErrorKind::DomainError, "sqrt is not differentiable at 0");
  std::vector<double> s(p + 1, 0.0);
  s[0] = std::sqrt(a[0]);
  for (std::size_t k = 1; k <= p; ++k) {
    double acc = a[k];
    for (std::size_t i = 1; i < k; ++i) acc -= s[i] * s[k - i];
    s[k] = acc / (2.0 * s[0]);
  }
  return Jet(a.t0(), std::move(s));
}

Jet abs(const Jet& a) {
  if (a[0] > 0.0) return a;
  if (a[0] < 0.0) return -a;
  if (a.order() == 0) return a;
  fail(ErrorKind::DomainError, "abs is not differentiable at 0");
}

Jet pow(const Jet& a, double exponent) {
  const std::size_t p = a.order();
  if (is_small_integer(exponent)) {
    // Binary powering keeps polynomial jets exact up to rounding.
    auto n = static_cast<long>(std::abs(exponent));
    Jet result = Jet::constant(a.t0(), p, 1.0);
    Jet base = a;
    while (n > 0) {
      if (n & 1) result = result * base;
      n >>= 1;
      if (n > 0) base = base * base;
    }
    if (exponent < 0.0) {
      if (a[0] == 0.0) fail(ErrorKind::DomainError, "negative power of zero");
      result = Jet::constant(a.t0(), p, 1.0) / result;
    }
    result[0] = std::pow(a[0], exponent);
    return result;
  }
  if (a[0] < 0.0) fail(ErrorKind::DomainError, "non-integer power of negative value");
  if (a[0] == 0.0) {
    if (p == 0 && exponent > 0.0) return Jet::constant(a.t0(), 0, 0.0);
    fail(ErrorKind::DomainError, "non-integer power is not differentiable at 0");
  }
  std::vector<double> r(p + 1, 0.0);
  r[0] = std::pow(a[0], exponent);
  for (std::size_t k = 1; k <= p; ++k) {
    double s = 0.0;
    for (std::size_t i = 1; i <= k; ++i) {
      s += ((exponent + 1.0) * static_cast<double>(i) - static_cast<double>(k)) * a[i] * r[k - i];
    }
    r[k] = s / (static_cast<double>(k) * a[0]);
  }
  return Jet(a.t0(), std::move(r));
}

Jet pow(const Jet& base, const Jet& exponent) {
  check_compatible(base, exponent);
  bool constant_exponent = true;
  for (std::size_t i = 1; i <= exponent.order(); ++i) constant_exponent = constant_exponent && exponent[i] == 0.0;
  if (constant_exponent) return pow(base, exponent[0]);
  if (!(base[0] > 0.0)) fail(ErrorKind::DomainError, "variable exponent requires a positive base");
  Jet r = exp(exponent * log(base));
  r[0] = std::pow(base[0], exponent[0]);
  return r;
}

Jet compose(std::span<const double> taylor, const Jet& a) {
  const std::size_t p = a.order();
  if (taylor.size() < p + 1) fail(ErrorKind::InvalidParams, "compose: not enough Taylor coefficients");
  Jet delta = a;
  delta[0] = 0.0;
  Jet result = Jet::constant(a.t0(), p, taylor[p]);
  for (std::size_t i = p; i-- > 0;) {
    result = result * delta;
    result[0] += taylor[i];
  }
  return result;
}

}  // namespace accel
