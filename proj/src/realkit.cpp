#include "accel/realkit.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <limits>
#include <string>

#include <Eigen/QR>

#include "accel/error.hpp"

namespace accel {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonFiniteValue: return "NonFiniteValue";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::SingularSystem: return "SingularSystem";
    case ErrorKind::DegenerateDifference: return "DegenerateDifference";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ContextError: return "ContextError";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::UnboundParameter: return "UnboundParameter";
    case ErrorKind::QuadratureNoConvergence: return "QuadratureNoConvergence";
  }
  return "Unknown";
}

PartialSums partial_sums(std::span<const double> terms) {
  if (terms.empty()) fail(ErrorKind::InvalidParams, "partial_sums: count must be >= 1");
  PartialSums out;
  out.terms.assign(terms.begin(), terms.end());
  out.values.reserve(terms.size() + 1);
  out.values.push_back(0.0);
  CompensatedSum acc;
  for (std::size_t n = 0; n < terms.size(); ++n) {
    if (!std::isfinite(terms[n])) {
      fail(ErrorKind::NonFiniteValue, "partial_sums: term f(" + std::to_string(n) + ") is not finite");
    }
    acc += terms[n];
    out.values.push_back(acc.value());
  }
  return out;
}

PartialSums partial_sums(const TermSequence& terms, std::size_t count) {
  if (count == 0) fail(ErrorKind::InvalidParams, "partial_sums: count must be >= 1");
  std::vector<double> f(count);
  for (std::size_t n = 0; n < count; ++n) f[n] = terms(n);
  return partial_sums(std::span<const double>(f));
}

std::vector<double> forward_differences(std::span<const double> seq, std::size_t k) {
  if (seq.size() <= k) {
    fail(ErrorKind::InvalidParams, "forward_differences: need more than k = " + std::to_string(k) +
                                       " entries, got " + std::to_string(seq.size()));
  }
  std::vector<double> d(seq.begin(), seq.end());
  for (std::size_t order = 0; order < k; ++order) {
    for (std::size_t i = 0; i + 1 < d.size(); ++i) d[i] = d[i + 1] - d[i];
    d.pop_back();
  }
  return d;
}

namespace {

struct NodeMaker {
  std::size_t count;

  std::vector<double> operator()(const ArithmeticIndex& s) const {
    std::vector<double> x(count);
    for (std::size_t j = 1; j <= count; ++j) x[j - 1] = static_cast<double>(s.l + j);
    return x;
  }
  std::vector<double> operator()(const ArithmeticReal& s) const {
    if (!(s.h > 0.0) || !std::isfinite(s.h)) fail(ErrorKind::InvalidParams, "make_nodes: h must be > 0");
    if (!(s.l >= 0.0) || !std::isfinite(s.l)) fail(ErrorKind::InvalidParams, "make_nodes: l must be >= 0");
    std::vector<double> x(count);
    for (std::size_t j = 1; j <= count; ++j) x[j - 1] = s.l + static_cast<double>(j) * s.h;
    return x;
  }
  std::vector<double> operator()(const Geometric& s) const {
    if (!(s.sigma > 0.0) || !std::isfinite(s.sigma)) {
      fail(ErrorKind::InvalidParams, "make_nodes: sigma must be > 0");
    }
    std::vector<double> x(count);
    for (std::size_t j = 1; j <= count; ++j) x[j - 1] = std::exp(s.sigma * static_cast<double>(j - 1));
    return x;
  }
  std::vector<double> operator()(const Explicit& s) const {
    if (s.nodes.size() < count) {
      fail(ErrorKind::InvalidParams, "make_nodes: explicit scheme has " + std::to_string(s.nodes.size()) +
                                         " nodes, " + std::to_string(count) + " required");
    }
    return {s.nodes.begin(), s.nodes.begin() + static_cast<std::ptrdiff_t>(count)};
  }
};

}  // namespace

std::vector<double> make_nodes(const NodeScheme& scheme, std::size_t count) {
  if (count == 0) fail(ErrorKind::InvalidParams, "make_nodes: count must be >= 1");
  std::vector<double> x = std::visit(NodeMaker{count}, scheme);
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (!(x[j] > 0.0) || !std::isfinite(x[j])) {
      fail(ErrorKind::InvalidParams, "make_nodes: nodes must be finite and positive");
    }
    if (j > 0 && !(x[j] > x[j - 1])) {
      fail(ErrorKind::InvalidParams, "make_nodes: nodes must be strictly increasing");
    }
  }
  return x;
}

// ---------------------------------------------------------------------------
// Dense solver.

namespace {

class LuFactors {
 public:
  explicit LuFactors(Matrix a) : lu_(std::move(a)), perm_(lu_.rows()) {
    const std::size_t n = lu_.rows();
    std::iota(perm_.begin(), perm_.end(), std::size_t{0});
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t p = k;
      double best = std::abs(lu_(k, k));
      for (std::size_t i = k + 1; i < n; ++i) {
        if (std::abs(lu_(i, k)) > best) {
          best = std::abs(lu_(i, k));
          p = i;
        }
      }
      if (!(best >= kPivotFloor)) {
        fail(ErrorKind::SingularSystem, "solve_linear: pivot " + std::to_string(k) + " vanishes");
      }
      if (p != k) {
        std::swap_ranges(lu_.row(k).begin(), lu_.row(k).end(), lu_.row(p).begin());
        std::swap(perm_[k], perm_[p]);
      }
      const double pivot = lu_(k, k);
      for (std::size_t i = k + 1; i < n; ++i) {
        const double l = lu_(i, k) / pivot;
        lu_(i, k) = l;
        if (l == 0.0) continue;
        for (std::size_t j = k + 1; j < n; ++j) lu_(i, j) -= l * lu_(k, j);
      }
    }
  }

  std::vector<double> solve(std::span<const double> b) const {
    const std::size_t n = lu_.rows();
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) {
      double s = b[perm_[i]];
      for (std::size_t j = 0; j < i; ++j) s -= lu_(i, j) * x[j];
      x[i] = s;
    }
    for (std::size_t i = n; i-- > 0;) {
      double s = x[i];
      for (std::size_t j = i + 1; j < n; ++j) s -= lu_(i, j) * x[j];
      x[i] = s / lu_(i, i);
    }
    return x;
  }

  // Solves A^T z = b where P A = L U.
  std::vector<double> solve_transposed(std::span<const double> b) const {
    const std::size_t n = lu_.rows();
    std::vector<double> w(b.begin(), b.end());
    for (std::size_t i = 0; i < n; ++i) {
      double s = w[i];
      for (std::size_t j = 0; j < i; ++j) s -= lu_(j, i) * w[j];
      w[i] = s / lu_(i, i);
    }
    for (std::size_t i = n; i-- > 0;) {
      double s = w[i];
      for (std::size_t j = i + 1; j < n; ++j) s -= lu_(j, i) * w[j];
      w[i] = s;
    }
    std::vector<double> z(n);
    for (std::size_t i = 0; i < n; ++i) z[perm_[i]] = w[i];
    return z;
  }

 private:
  Matrix lu_;
  std::vector<std::size_t> perm_;
};

double norm1(const Matrix& a) {
  double best = 0.0;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) s += std::abs(a(i, j));
    best = std::max(best, s);
  }
  return best;
}

// Hager's estimator for ||A^{-1}||_1 (the LAPACK xLACON iteration).
double inverse_norm1_estimate(const LuFactors& lu, std::size_t n) {
  std::vector<double> x(n, 1.0 / static_cast<double>(n));
  double estimate = 0.0;
  std::size_t last_j = n;
  for (int iter = 0; iter < 5; ++iter) {
    const std::vector<double> y = lu.solve(x);
    double ynorm = 0.0;
    for (double v : y) ynorm += std::abs(v);
    if (iter > 0 && ynorm <= estimate) break;
    estimate = ynorm;
    std::vector<double> xi(n);
    for (std::size_t i = 0; i < n; ++i) xi[i] = y[i] >= 0.0 ? 1.0 : -1.0;
    const std::vector<double> z = lu.solve_transposed(xi);
    std::size_t j = 0;
    double zmax = -1.0;
    double ztx = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (std::abs(z[i]) > zmax) {
        zmax = std::abs(z[i]);
        j = i;
      }
      ztx += z[i] * x[i];
    }
    if (zmax <= ztx || j == last_j) break;
    std::fill(x.begin(), x.end(), 0.0);
    x[j] = 1.0;
    last_j = j;
  }
  return estimate;
}

// b - A x, accumulated with error-free products and sums.
std::vector<double> residual(const Matrix& a, std::span<const double> x, std::span<const double> b) {
  std::vector<double> r(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    CompensatedSum acc(b[i]);
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const double p = a(i, j) * x[j];
      const double perr = std::fma(a(i, j), x[j], -p);
      acc += -p;
      acc += -perr;
    }
    r[i] = acc.value();
  }
  return r;
}

}  // namespace

namespace {

struct Equilibrated {
  Matrix a;
  std::vector<double> b;
};

// Scales each row by a power of two so equilibration itself introduces no
// rounding. Zero rows are left alone when allowed.
Equilibrated equilibrate(const Matrix& matrix, std::span<const double> rhs, bool allow_zero_rows) {
  const std::size_t n = matrix.rows();
  if (n == 0 || matrix.cols() != n) fail(ErrorKind::InvalidParams, "solve_linear: matrix must be square and non-empty");
  if (rhs.size() != n) fail(ErrorKind::InvalidParams, "solve_linear: rhs size mismatch");
  Equilibrated out{Matrix(n, n), std::vector<double>(n)};
  for (std::size_t i = 0; i < n; ++i) {
    double rmax = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (!std::isfinite(matrix(i, j))) fail(ErrorKind::NonFiniteValue, "solve_linear: non-finite matrix entry");
      rmax = std::max(rmax, std::abs(matrix(i, j)));
    }
    if (!std::isfinite(rhs[i])) fail(ErrorKind::NonFiniteValue, "solve_linear: non-finite rhs entry");
    if (rmax == 0.0 && !allow_zero_rows) fail(ErrorKind::SingularSystem, "solve_linear: row " + std::to_string(i) + " is zero");
    const double s = rmax == 0.0 ? 1.0 : std::ldexp(1.0, -std::ilogb(rmax));
    for (std::size_t j = 0; j < n; ++j) out.a(i, j) = matrix(i, j) * s;
    out.b[i] = rhs[i] * s;
  }
  return out;
}

}  // namespace

SolveReport solve_linear(const Matrix& matrix, std::span<const double> rhs) {
  const std::size_t n = matrix.rows();
  auto [scaled, b] = equilibrate(matrix, rhs, false);

  const LuFactors lu(scaled);
  SolveReport report;
  report.solution = lu.solve(b);

  const std::vector<double> r = residual(scaled, report.solution, b);
  const std::vector<double> correction = lu.solve(r);
  bool finite = true;
  for (std::size_t i = 0; i < n; ++i) finite = finite && std::isfinite(correction[i]);
  if (finite) {
    for (std::size_t i = 0; i < n; ++i) report.solution[i] += correction[i];
    report.refined = true;
  }

  for (double v : report.solution) {
    if (!std::isfinite(v)) fail(ErrorKind::SingularSystem, "solve_linear: solution is not finite");
  }

  const std::vector<double> final_r = residual(matrix, report.solution, rhs);
  for (double v : final_r) report.residual_inf_norm = std::max(report.residual_inf_norm, std::abs(v));

  report.condition_estimate = std::max(1.0, norm1(scaled) * inverse_norm1_estimate(lu, n));
  report.ill_conditioned = !(report.condition_estimate <= kIllConditionedThreshold);
  report.rank = n;
  return report;
}

SolveReport solve_linear_basic(const Matrix& matrix, std::span<const double> rhs, std::size_t pinned) {
  try {
    return solve_linear(matrix, rhs);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::SingularSystem) throw;
  }
  const std::size_t n = matrix.rows();
  if (pinned >= n) fail(ErrorKind::InvalidParams, "solve_linear_basic: pinned column out of range");
  const auto [scaled, b] = equilibrate(matrix, rhs, true);

  Eigen::MatrixXd a(n, n);
  Eigen::VectorXd rhs_vec(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = scaled(i, j);
    rhs_vec(static_cast<Eigen::Index>(i)) = b[i];
  }
  const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(a);
  const auto rank = static_cast<std::size_t>(qr.rank());
  SolveReport report;
  report.rank = rank;
  const auto& perm = qr.colsPermutation().indices();
  for (std::size_t k = rank; k < n; ++k) {
    const auto col = static_cast<std::size_t>(perm(static_cast<Eigen::Index>(k)));
    if (col == pinned) fail(ErrorKind::SingularSystem, "solve_linear: system is singular in the pinned unknown");
    report.free_columns.push_back(col);
  }
  std::sort(report.free_columns.begin(), report.free_columns.end());

  // Basic solution: free unknowns are zero.
  const Eigen::VectorXd x = qr.solve(rhs_vec);
  report.solution.assign(x.data(), x.data() + n);
  for (std::size_t c : report.free_columns) report.solution[c] = 0.0;

  double b_inf = 0.0;
  for (double v : b) b_inf = std::max(b_inf, std::abs(v));
  double scaled_res = 0.0;
  for (double v : residual(scaled, report.solution, b)) scaled_res = std::max(scaled_res, std::abs(v));
  if (!(scaled_res <= 1e-10 * std::max(1.0, b_inf))) {
    fail(ErrorKind::SingularSystem, "solve_linear: singular system is inconsistent");
  }
  for (double v : residual(matrix, report.solution, rhs)) report.residual_inf_norm = std::max(report.residual_inf_norm, std::abs(v));
  report.condition_estimate = std::numeric_limits<double>::infinity();
  report.ill_conditioned = true;
  return report;
}

}  // namespace accel
