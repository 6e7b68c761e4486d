#pragma once

#include <cstddef>
#include <vector>

#include "accel/jet.hpp"

namespace accel {

/// Legendre polynomial P_k(x) by the upward three-term recurrence
/// (n+1) P_{n+1} = (2n+1) x P_n - n P_{n-1}, starting from P_0 = 1, P_1 = x.
double legendre_p(std::size_t k, double x);

/// Same recurrence carried out in truncated Taylor arithmetic.
Jet legendre_p(std::size_t k, const Jet& x);

/// Incremental P_n(x) for a fixed x and non-decreasing n. Each advance is one
/// recurrence step, so walking n = 0, 1, 2, ... costs O(1) per value.
class LegendreWalker {
 public:
  explicit LegendreWalker(double x) : x_(x) {}

  double x() const { return x_; }
  std::size_t degree() const { return n_; }
  /// P_k(x); restarts from P_0 when k is below the current degree.
  double at(std::size_t k);

 private:
  double x_;
  std::size_t n_ = 0;
  double prev_ = 0.0;  // P_{n-1}
  double cur_ = 1.0;   // P_n
};

/// Bessel function of the first kind, order 0 or 1, for x >= 0.
///
/// Below x = 20 the Maclaurin series is summed in double-double arithmetic,
/// which absorbs the cancellation between large alternating terms. From
/// x = 20 on the Hankel amplitude-phase expansion is summed until its terms
/// drop below double precision; its smallest term there is about e^{-2x}.
double bessel_j(int order, double x);

inline double bessel_j0(double x) { return bessel_j(0, x); }
inline double bessel_j1(double x) { return bessel_j(1, x); }

/// Taylor coefficients of J_order about u0, indices 0..degree. Uses the power
/// series in jet arithmetic near the origin and the recurrence implied by
/// Bessel's equation (with J0' = -J1) elsewhere.
std::vector<double> bessel_j_taylor(int order, double u0, std::size_t degree);

/// J_order composed with a jet.
Jet bessel_j(int order, const Jet& u);

}  // namespace accel
