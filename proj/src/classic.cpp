#include "accel/classic.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "accel/error.hpp"

namespace accel {

double exact_sum_recurrence(const RecurrenceCoeffs& coeffs, const PartialSums& sums, std::size_t N) {
  const std::size_t k = coeffs.order();
  if (k < 1) fail(ErrorKind::InvalidParams, "exact_sum_recurrence: recurrence order must be >= 1");
  if (coeffs.a.back() == 0.0) fail(ErrorKind::InvalidParams, "exact_sum_recurrence: leading coefficient is zero");
  if (N + k >= sums.values.size()) {
    fail(ErrorKind::InvalidParams, "exact_sum_recurrence: need A_" + std::to_string(N) + " .. A_" +
                                       std::to_string(N + k));
  }
  CompensatedSum num;
  CompensatedSum den;
  for (std::size_t j = 0; j <= k; ++j) {
    const double p = coeffs.a[j] * sums[N + j];
    num += p;
    num += std::fma(coeffs.a[j], sums[N + j], -p);
    den += coeffs.a[j];
  }
  if (den.value() == 0.0) fail(ErrorKind::InvalidParams, "exact_sum_recurrence: coefficients sum to zero");
  return num.value() / den.value();
}

std::vector<double> aitken(std::span<const double> seq) {
  if (seq.size() < 3) fail(ErrorKind::InvalidParams, "aitken: need at least 3 values");
  std::vector<double> out(seq.size() - 2);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double d1 = seq[i + 1] - seq[i];
    const double d2 = (seq[i + 2] - seq[i + 1]) - d1;
    if (d2 == 0.0) {
      fail(ErrorKind::DegenerateDifference, "aitken: second difference vanishes at index " + std::to_string(i));
    }
    out[i] = seq[i] - d1 * d1 / d2;
  }
  return out;
}

WynnResult wynn_epsilon(std::span<const double> seq) {
  if (seq.size() < 3) fail(ErrorKind::InvalidParams, "wynn_epsilon: need at least 3 values");
  for (double v : seq) {
    if (!std::isfinite(v)) fail(ErrorKind::NonFiniteValue, "wynn_epsilon: non-finite input");
  }
  if (std::all_of(seq.begin(), seq.end(), [&](double v) { return v == seq[0]; })) return {seq[0], false};

  const std::size_t columns = 2 * ((seq.size() - 1) / 2);
  WynnResult result;
  std::optional<double> converged;  // even-column value whose neighbours coincided
  std::vector<double> prev(seq.size() + 1, 0.0);  // eps_{-1}
  std::vector<double> cur(seq.begin(), seq.end());  // eps_0
  for (std::size_t k = 0; k < columns; ++k) {
    const bool final_column = k + 1 == columns;
    std::vector<double> next(cur.size() - 1);
    for (std::size_t n = 0; n < next.size(); ++n) {
      const double d = cur[n + 1] - cur[n];
      double inv;
      if (std::abs(d) < kWynnTiny) {
        if (final_column && d == 0.0) {
          if (converged) return {*converged, true};
          fail(ErrorKind::DegenerateDifference, "wynn_epsilon: zero difference in the final column");
        }
        inv = kWynnSentinel;
        result.degenerate = true;
        if (k % 2 == 0 && d == 0.0 && !converged) converged = cur[n];
      } else {
        inv = 1.0 / d;
      }
      next[n] = prev[n + 1] + inv;
    }
    prev = std::move(cur);
    cur = std::move(next);
  }
  result.value = cur[0];
  return result;
}

double euler_transform(std::span<const double> magnitudes, std::size_t depth) {
  if (magnitudes.size() <= depth) {
    fail(ErrorKind::InvalidParams, "euler_transform: need more than depth = " + std::to_string(depth) + " terms");
  }
  std::vector<double> d(magnitudes.begin(), magnitudes.begin() + static_cast<std::ptrdiff_t>(depth + 1));
  CompensatedSum sum;
  double scale = 0.5;
  double sign = 1.0;
  for (std::size_t j = 0; j <= depth; ++j) {
    sum += sign * d[0] * scale;
    for (std::size_t i = 0; i + 1 < d.size(); ++i) d[i] = d[i + 1] - d[i];
    d.pop_back();
    scale *= 0.5;
    sign = -sign;
  }
  return sum.value();
}

double levin(LevinKind kind, std::span<const double> terms, std::size_t r, std::size_t l) {
  if (r < 1) fail(ErrorKind::InvalidParams, "levin: order r must be >= 1");
  const std::size_t k = r + 1;
  if (terms.size() < l + k + 1) {
    fail(ErrorKind::InvalidParams, "levin: need " + std::to_string(l + k + 1) + " terms");
  }
  constexpr double beta = 1.0;
  CompensatedSum partial;
  for (std::size_t i = 0; i < l; ++i) partial += terms[i];

  CompensatedSum num;
  CompensatedSum den;
  double binom = 1.0;  // C(k, j)
  const double base = beta + static_cast<double>(l + k);
  for (std::size_t j = 0; j <= k; ++j) {
    const std::size_t n = l + j;
    const double a = terms[n];
    if (!std::isfinite(a)) fail(ErrorKind::NonFiniteValue, "levin: non-finite term");
    partial += a;
    const double omega = kind == LevinKind::T ? a : (beta + static_cast<double>(n)) * a;
    if (omega == 0.0) {
      fail(ErrorKind::DegenerateDifference, "levin: remainder estimate vanishes at n = " + std::to_string(n));
    }
    const double weight = ((j % 2 == 0) ? binom : -binom) *
                          std::pow((beta + static_cast<double>(n)) / base, static_cast<double>(k) - 1.0) / omega;
    num += weight * partial.value();
    den += weight;
    binom = binom * static_cast<double>(k - j) / static_cast<double>(j + 1);
  }
  if (den.value() == 0.0) fail(ErrorKind::DegenerateDifference, "levin: vanishing denominator");
  return num.value() / den.value();
}

double levin(LevinKind kind, const TermSequence& terms, std::size_t r, std::size_t l) {
  std::vector<double> f(l + r + 2);
  for (std::size_t n = 0; n < f.size(); ++n) f[n] = terms(n);
  return levin(kind, f, r, l);
}

ClassOrder base_class(std::size_t m, std::string label) {
  if (m < 1) fail(ErrorKind::InvalidParams, "class order must be >= 1");
  return ClassOrder{m, {"base " + std::to_string(m) + ": " + std::move(label)}};
}

ClassOrder class_order(ClassRule rule, const ClassOrder& m, const ClassOrder* k) {
  if (m.m < 1 || (k != nullptr && k->m < 1)) fail(ErrorKind::InvalidParams, "class order must be >= 1");
  if (rule != ClassRule::Square && k == nullptr) {
    fail(ErrorKind::InvalidParams, "class_order: sum and product need two operands");
  }
  ClassOrder out;
  out.provenance = m.provenance;
  if (k != nullptr && rule != ClassRule::Square) {
    out.provenance.insert(out.provenance.end(), k->provenance.begin(), k->provenance.end());
  }
  switch (rule) {
    case ClassRule::Sum:
      out.m = m.m + k->m;
      out.provenance.push_back("sum " + std::to_string(m.m) + " + " + std::to_string(k->m) + " -> " +
                               std::to_string(out.m));
      break;
    case ClassRule::Product:
      out.m = m.m * k->m;
      out.provenance.push_back("product " + std::to_string(m.m) + " * " + std::to_string(k->m) + " -> " +
                               std::to_string(out.m));
      break;
    case ClassRule::Square:
      out.m = m.m * (m.m + 1) / 2;
      out.provenance.push_back("square " + std::to_string(m.m) + " -> " + std::to_string(out.m));
      break;
  }
  return out;
}

}  // namespace accel
