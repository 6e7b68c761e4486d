#pragma once

// Levin-Sidi extrapolation from a truncated remainder expansion.
//
// Series (d-transformation): with N_j = l + j, j = 1..mr+1, solve
//   S = A_{N_j} + sum_{k<m} Delta^k f(N_j) sum_{i<r} beta_{k,i} N_j^{k-i}
// for S and the mr coefficients beta.
//
// Integrals (D-transformation): with nodes x_1 < ... < x_{mr+1}, solve
//   I = A(x_j) + sum_{k<m} f^(k)(x_j) sum_{i<r} beta_{k,i} x_j^{k-i}
// where A(x) is the integral of f over [0, x].

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "accel/error.hpp"
#include "accel/expr.hpp"
#include "accel/jet.hpp"
#include "accel/realkit.hpp"

namespace accel {

struct TransformFlags {
  bool ill_conditioned = false;
  bool degenerate = false;
};

struct TransformResult {
  double value = 0.0;
  Matrix betas;  // m rows, r columns
  double condition_estimate = 1.0;
  double residual = 0.0;
  std::vector<double> nodes_used;
  TransformFlags flags;
};

/// One column of a d_table / D_table run. Exactly one of result / error is set.
struct TableEntry {
  std::size_t r = 0;
  std::optional<TransformResult> result;
  std::optional<ErrorKind> error;
  std::string message;
};

// ---------------------------------------------------------------------------
// Series

struct TransformParams {
  std::size_t m = 1;
  std::size_t r = 1;
  NodeScheme scheme = ArithmeticIndex{0};
  /// Shifts the remainder basis to N^{k + power_offset - i}. 0 is the form
  /// written above; 1 gives the N^{k+1} weights of the original d-transform.
  std::size_t power_offset = 0;
};

/// Number of terms f(0) .. f(l + mr + m) consumed by d_transform.
std::size_t required_terms(std::size_t m, std::size_t r, std::size_t l);

/// d^{(m)}_{r,l}. The scheme must be ArithmeticIndex. Polls `terms` exactly
/// required_terms(m, r, l) times, in increasing order.
TransformResult d_transform(const TermSequence& terms, const TransformParams& params);

/// Same transform over terms that are already materialized.
TransformResult d_transform(std::span<const double> terms, const TransformParams& params);

/// Independent d-transforms for each r, sharing one materialization of the
/// terms. Failures are reported per entry.
std::vector<TableEntry> d_table(const TermSequence& terms, std::size_t m,
                                const std::vector<std::size_t>& r_values, std::size_t l,
                                std::size_t power_offset = 0);

// ---------------------------------------------------------------------------
// Integrals

struct IntegrandFamily {
  std::function<double(double)> value;
  std::function<Jet(double, std::size_t)> jet_at;
  double domain_start = 0.0;
};

/// Integrand backed by an integral-context expression.
IntegrandFamily make_integrand(const ExprAst& ast, Bindings bindings);

struct QuadratureConfig {
  double abs_tol = 1e-13;
  int max_depth = 30;
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
  std::size_t evaluations = 0;
};

/// Adaptive 7/15-point Gauss-Kronrod quadrature of f over [a, b]: the
/// interval with the largest error estimate is bisected until the summed
/// estimate falls below abs_tol (or the rounding floor).
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    const QuadratureConfig& cfg);

/// A(x_j) for each node, accumulated panel by panel from domain_start.
std::vector<double> cumulative_integrals(const IntegrandFamily& f, const std::vector<double>& nodes,
                                         const QuadratureConfig& cfg);

/// D^{(m)}_{r,X}; requires m <= 8 since derivatives come from jets of
/// order m - 1.
///
/// `power_offset` shifts the basis to f^(k)(x) x^{k + power_offset - i}.
/// With 0 a remainder f(x) q(1/x) is reproduced exactly; 1 is the
/// x^{k+1} weighting of the original D-transform, which also covers
/// remainders decaying more slowly than f itself (monotone integrands,
/// products of Bessel functions).
TransformResult D_transform(const IntegrandFamily& f, std::size_t m, std::size_t r, const NodeScheme& scheme,
                            const QuadratureConfig& cfg = {}, std::size_t power_offset = 0);

std::vector<TableEntry> D_table(const IntegrandFamily& f, std::size_t m, const std::vector<std::size_t>& r_values,
                                const NodeScheme& scheme, const QuadratureConfig& cfg = {},
                                std::size_t power_offset = 0);

}  // namespace accel
