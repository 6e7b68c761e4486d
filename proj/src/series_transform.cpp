#include <cmath>

#include "accel/transform.hpp"

namespace accel {

namespace {

std::size_t index_offset(const NodeScheme& scheme) {
  const auto* idx = std::get_if<ArithmeticIndex>(&scheme);
  if (idx == nullptr) fail(ErrorKind::InvalidParams, "d_transform: series nodes must use ArithmeticIndex");
  return idx->l;
}

void check_orders(std::size_t m, std::size_t r) {
  if (m < 1 || r < 1) fail(ErrorKind::InvalidParams, "m and r must be >= 1");
}

}  // namespace

std::size_t required_terms(std::size_t m, std::size_t r, std::size_t l) { return l + m * r + m + 1; }

TransformResult d_transform(std::span<const double> terms, const TransformParams& params) {
  const std::size_t m = params.m;
  const std::size_t r = params.r;
  check_orders(m, r);
  const std::size_t l = index_offset(params.scheme);
  const std::size_t needed = required_terms(m, r, l);
  if (terms.size() < needed) {
    fail(ErrorKind::InvalidParams, "d_transform: need " + std::to_string(needed) + " terms, have " +
                                       std::to_string(terms.size()));
  }
  const PartialSums sums = partial_sums(terms.first(needed));
  const std::size_t equations = m * r + 1;
  const std::vector<double> nodes = make_nodes(params.scheme, equations);

  TransformResult out;
  out.nodes_used = nodes;
  Matrix a(equations, equations);
  std::vector<double> rhs(equations);
  for (std::size_t j = 0; j < equations; ++j) {
    const std::size_t N = l + j + 1;
    const double x = static_cast<double>(N);
    rhs[j] = sums[N];
    a(j, 0) = 1.0;
    if (terms[N] == 0.0) out.flags.degenerate = true;
    // Delta^k f(N) for k = 0..m-1, built up in place.
    std::vector<double> diff(terms.begin() + static_cast<std::ptrdiff_t>(N),
                             terms.begin() + static_cast<std::ptrdiff_t>(N + m));
    for (std::size_t k = 0; k < m; ++k) {
      for (std::size_t i = 0; i < r; ++i) {
        const double power = std::pow(x, static_cast<double>(k + params.power_offset) - static_cast<double>(i));
        a(j, 1 + k * r + i) = -diff[0] * power;
      }
      for (std::size_t q = 0; q + 1 < diff.size(); ++q) diff[q] = diff[q + 1] - diff[q];
      diff.pop_back();
    }
  }

  const SolveReport sol = solve_linear_basic(a, rhs, 0);
  out.value = sol.solution[0];
  out.betas = Matrix(m, r);
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t i = 0; i < r; ++i) out.betas(k, i) = sol.solution[1 + k * r + i];
  }
  out.condition_estimate = sol.condition_estimate;
  out.residual = sol.residual_inf_norm;
  out.flags.ill_conditioned = sol.ill_conditioned;
  if (!std::isfinite(out.value)) fail(ErrorKind::NonFiniteValue, "d_transform: non-finite result");
  return out;
}

TransformResult d_transform(const TermSequence& terms, const TransformParams& params) {
  check_orders(params.m, params.r);
  const std::size_t needed = required_terms(params.m, params.r, index_offset(params.scheme));
  std::vector<double> f(needed);
  for (std::size_t n = 0; n < needed; ++n) {
    f[n] = terms(n);
    if (!std::isfinite(f[n])) fail(ErrorKind::NonFiniteValue, "d_transform: term f(" + std::to_string(n) + ") is not finite");
  }
  return d_transform(std::span<const double>(f), params);
}

std::vector<TableEntry> d_table(const TermSequence& terms, std::size_t m, const std::vector<std::size_t>& r_values,
                                std::size_t l, std::size_t power_offset) {
  std::size_t max_r = 0;
  for (std::size_t r : r_values) max_r = std::max(max_r, r);
  std::vector<TableEntry> out;
  out.reserve(r_values.size());

  // Materialize once. A term that fails to evaluate caps the feasible r.
  std::vector<double> f;
  std::optional<ErrorKind> term_error;
  std::string term_message;
  if (m >= 1 && max_r >= 1) {
    const std::size_t needed = required_terms(m, max_r, l);
    try {
      for (std::size_t n = 0; n < needed; ++n) {
        const double v = terms(n);
        if (!std::isfinite(v)) fail(ErrorKind::NonFiniteValue, "term f(" + std::to_string(n) + ") is not finite");
        f.push_back(v);
      }
    } catch (const Error& e) {
      term_error = e.kind();
      term_message = e.what();
    }
  }

  for (std::size_t r : r_values) {
    TableEntry entry;
    entry.r = r;
    try {
      if (term_error && m >= 1 && r >= 1 && f.size() < required_terms(m, r, l)) throw Error(*term_error, term_message);
      entry.result = d_transform(std::span<const double>(f), TransformParams{m, r, ArithmeticIndex{l}, power_offset});
    } catch (const Error& e) {
      entry.error = e.kind();
      entry.message = e.what();
    }
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace accel
