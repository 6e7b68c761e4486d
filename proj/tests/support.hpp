#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>

#include <doctest.h>

#include "accel/error.hpp"

namespace testing {

// Reference values computed offline at high precision.
inline constexpr double kZeta2 = 1.6449340668482264;      // pi^2 / 6
inline constexpr double kLn2 = 0.6931471805599453;        // ln 2
inline constexpr double kBesselJ0At1 = 0.7651976865579666;
inline constexpr double kTwoOverPi = 0.63661977236758134;

inline std::int64_t ordered_bits(double x) {
  const auto bits = std::bit_cast<std::int64_t>(x);
  return bits < 0 ? std::numeric_limits<std::int64_t>::min() - bits : bits;
}

/// Distance between two doubles in units in the last place.
inline std::uint64_t ulp_distance(double a, double b) {
  const std::int64_t ia = ordered_bits(a);
  const std::int64_t ib = ordered_bits(b);
  return ia > ib ? static_cast<std::uint64_t>(ia) - static_cast<std::uint64_t>(ib)
                 : static_cast<std::uint64_t>(ib) - static_cast<std::uint64_t>(ia);
}

inline double rel_err(double value, double ref) { return std::abs(value - ref) / std::abs(ref); }

/// Runs fn and reports the ErrorKind it threw, if any.
inline bool throws_kind(const std::function<void()>& fn, accel::ErrorKind kind) {
  try {
    fn();
  } catch (const accel::Error& e) {
    return e.kind() == kind;
  }
  return false;
}

}  // namespace testing

#define CHECK_THROWS_KIND(expr, kind) CHECK(::testing::throws_kind([&] { (void)(expr); }, (kind)))
