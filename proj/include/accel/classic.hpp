#pragma once

// Classical accelerators used as baselines, the exact sum for terms obeying
// a constant-coefficient recurrence, and the order calculus for the
// difference-equation classes.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "accel/realkit.hpp"

namespace accel {

/// a_0 f(n) + a_1 f(n+1) + ... + a_k f(n+k) = 0
struct RecurrenceCoeffs {
  std::vector<double> a;

  std::size_t order() const { return a.empty() ? 0 : a.size() - 1; }
};

/// S = sum_j a_j A_{N+j} / sum_j a_j. Exact whenever the terms satisfy the
/// recurrence, for every N.
double exact_sum_recurrence(const RecurrenceCoeffs& coeffs, const PartialSums& sums, std::size_t N);

/// Aitken's delta-squared process: out[i] = A_i - (dA_i)^2 / d2A_i.
std::vector<double> aitken(std::span<const double> seq);

struct WynnResult {
  double value = 0.0;
  bool degenerate = false;  // a near-zero difference was replaced by the sentinel
};

inline constexpr double kWynnTiny = 1e-300;
inline constexpr double kWynnSentinel = 1e300;

/// Wynn's epsilon algorithm. Returns eps_{2*floor((len-1)/2)}^{(0)}, the top
/// entry of the last complete even column.
WynnResult wynn_epsilon(std::span<const double> seq);

/// Euler transform of sum_n (-1)^n a_n truncated at depth k:
/// sum_{j=0}^{k} (-1)^j Delta^j a_0 / 2^{j+1}.
double euler_transform(std::span<const double> magnitudes, std::size_t depth);

enum class LevinKind { T, U };

/// Levin transformation at index l on partial sums s_n = a_0 + ... + a_n
/// with remainder estimates w_n = a_n (t) or (n + 1) a_n (u). Order r
/// means the r + 1 term model s_n = S + w_n sum_{i<=r} c_i / (n + 1)^i,
/// i.e. L_{r+1}^{(l)} with beta = 1. Consumes terms a_0 .. a_{l+r+1}.
double levin(LevinKind kind, const TermSequence& terms, std::size_t r, std::size_t l);
double levin(LevinKind kind, std::span<const double> terms, std::size_t r, std::size_t l);

// ---------------------------------------------------------------------------

struct ClassOrder {
  std::size_t m = 1;
  std::vector<std::string> provenance;
};

enum class ClassRule { Sum, Product, Square };

/// Bound on the class of f+g (m+k), f*g (m*k) or f^2 (m(m+1)/2).
ClassOrder class_order(ClassRule rule, const ClassOrder& m, const ClassOrder* k = nullptr);

/// A base class with a provenance label such as "P_n(x)".
ClassOrder base_class(std::size_t m, std::string label);

}  // namespace accel
