#pragma once

// Numeric services shared by the transforms: compensated sums, partial sums,
// forward differences, collocation node generation and a dense solver.

#include <cstddef>
#include <functional>
#include <span>
#include <variant>
#include <vector>

namespace accel {

/// Terms f(0), f(1), ... of a series, evaluated on demand.
using TermSequence = std::function<double(std::size_t)>;

/// Row-major dense matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<double> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const double> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

// ---------------------------------------------------------------------------
// Error-free transformations and compensated accumulation.

struct TwoSum {
  double sum;
  double err;
};

/// Knuth's branch-free two-sum: a + b == sum + err exactly.
inline TwoSum two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  const double err = (a - (s - bb)) + (b - bb);
  return {s, err};
}

/// Running sum carrying a second-order correction term (Neumaier style, but
/// built on two_sum so the carried error is exact at every step).
class CompensatedSum {
 public:
  CompensatedSum() = default;
  explicit CompensatedSum(double init) : hi_(init) {}

  void add(double x) {
    const auto [s, e] = two_sum(hi_, x);
    hi_ = s;
    lo_ += e;
  }
  CompensatedSum& operator+=(double x) {
    add(x);
    return *this;
  }
  double value() const { return hi_ + lo_; }

 private:
  double hi_ = 0.0;
  double lo_ = 0.0;
};

// ---------------------------------------------------------------------------

/// A_0 .. A_count where A_N = f(0) + ... + f(N-1).
struct PartialSums {
  std::vector<double> values;
  std::vector<double> terms;  // f(0) .. f(count-1), as evaluated

  std::size_t term_count() const { return terms.size(); }
  double operator[](std::size_t n) const { return values[n]; }
};

/// Evaluates `count` terms and accumulates them with compensated summation.
/// Throws NonFiniteValue if any term is NaN or infinite.
PartialSums partial_sums(const TermSequence& terms, std::size_t count);

/// Same accumulation over already materialized terms.
PartialSums partial_sums(std::span<const double> terms);

/// k-th forward difference, elementwise; result has seq.size() - k entries.
std::vector<double> forward_differences(std::span<const double> seq, std::size_t k);

// ---------------------------------------------------------------------------
// Collocation node schemes.

/// N_j = l + j
struct ArithmeticIndex {
  std::size_t l = 0;
};
/// x_j = l + j h
struct ArithmeticReal {
  double l = 0.0;
  double h = 1.0;
};
/// x_j = exp(sigma (j - 1))
struct Geometric {
  double sigma = 0.2;
};
struct Explicit {
  std::vector<double> nodes;
};

using NodeScheme = std::variant<ArithmeticIndex, ArithmeticReal, Geometric, Explicit>;

/// Nodes for j = 1..count. Always strictly increasing and positive.
std::vector<double> make_nodes(const NodeScheme& scheme, std::size_t count);

// ---------------------------------------------------------------------------

struct SolveReport {
  std::vector<double> solution;
  double residual_inf_norm = 0.0;
  double condition_estimate = 1.0;  // 1-norm estimate of the equilibrated system
  bool refined = false;
  bool ill_conditioned = false;
  std::size_t rank = 0;
  std::vector<std::size_t> free_columns;  // unknowns fixed at zero by solve_linear_basic
};

inline constexpr double kIllConditionedThreshold = 1e13;
inline constexpr double kPivotFloor = 1e-300;

/// Solves matrix * x = rhs. Rows are equilibrated by their max-abs entry,
/// factored by LU with partial pivoting, then one step of iterative
/// refinement is applied using a compensated residual.
SolveReport solve_linear(const Matrix& matrix, std::span<const double> rhs);

/// solve_linear, except that an exactly singular but consistent system gets
/// the basic solution of a column-pivoted QR: dependent unknowns are set to
/// zero and the result is flagged ill-conditioned. Raises SingularSystem if
/// column `pinned` is among the dependent ones or the system is inconsistent.
SolveReport solve_linear_basic(const Matrix& matrix, std::span<const double> rhs, std::size_t pinned);

}  // namespace accel
