#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace accel {

inline constexpr std::size_t kMaxJetOrder = 8;

/// Truncated Taylor expansion of a function about t0:
/// coeffs[i] = f^(i)(t0) / i!, i = 0..order().
///
/// All arithmetic below is truncated-Taylor arithmetic at a common order;
/// mixing jets of different order or expansion point throws InvalidParams.
class Jet {
 public:
  Jet() = default;
  Jet(double t0, std::vector<double> coeffs) : t0_(t0), coeffs_(std::move(coeffs)) {}

  static Jet constant(double t0, std::size_t order, double value);
  /// The independent variable itself: t0 + (t - t0).
  static Jet variable(double t0, std::size_t order);

  double t0() const { return t0_; }
  std::size_t order() const { return coeffs_.size() - 1; }
  double value() const { return coeffs_[0]; }
  double operator[](std::size_t i) const { return coeffs_[i]; }
  double& operator[](std::size_t i) { return coeffs_[i]; }
  const std::vector<double>& coeffs() const { return coeffs_; }

  /// f^(k)(t0) = k! * coeffs[k].
  double derivative(std::size_t k) const;

  Jet& operator+=(const Jet& o);
  Jet& operator-=(const Jet& o);
  Jet& operator*=(double s);

 private:
  double t0_ = 0.0;
  std::vector<double> coeffs_{0.0};
};

Jet operator+(Jet a, const Jet& b);
Jet operator-(Jet a, const Jet& b);
Jet operator-(Jet a);
Jet operator*(const Jet& a, const Jet& b);
Jet operator*(Jet a, double s);
Jet operator*(double s, Jet a);
Jet operator/(const Jet& a, const Jet& b);

Jet exp(const Jet& a);
Jet log(const Jet& a);
Jet sin(const Jet& a);
Jet cos(const Jet& a);
Jet sqrt(const Jet& a);
Jet abs(const Jet& a);
Jet pow(const Jet& a, double exponent);
Jet pow(const Jet& base, const Jet& exponent);

/// g(a) given the Taylor coefficients of g about a.value():
/// sum_i taylor[i] (a - a.value())^i, truncated at a.order().
Jet compose(std::span<const double> taylor, const Jet& a);

}  // namespace accel
