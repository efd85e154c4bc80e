#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls into the library.

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace oracle {

/// Number of degree-n monomials in N+1 variables with x_i^{d_i} excluded for
/// the first k variables: the Hilbert function of the monomial complete
/// intersection (x_0^{d_1}, ..., x_{k-1}^{d_k}), which has the same Hilbert
/// function as any complete intersection with these degrees.
inline std::int64_t staircase_hf(int ambient_dim, const std::vector<int>& degrees, int n) {
  if (n < 0) return 0;
  // ways[s] = number of exponent vectors over the variables seen so far with
  // total degree s.
  std::vector<std::int64_t> ways(static_cast<std::size_t>(n) + 1, 0);
  ways[0] = 1;
  for (int var = 0; var <= ambient_dim; ++var) {
    const int cap = var < static_cast<int>(degrees.size()) ? degrees[static_cast<std::size_t>(var)] - 1 : n;
    std::vector<std::int64_t> next(ways.size(), 0);
    for (int s = 0; s <= n; ++s) {
      if (ways[static_cast<std::size_t>(s)] == 0) continue;
      for (int e = 0; e <= cap && s + e <= n; ++e) next[static_cast<std::size_t>(s + e)] += ways[static_cast<std::size_t>(s)];
    }
    ways = std::move(next);
  }
  return ways[static_cast<std::size_t>(n)];
}

/// Hilbert function of the sheaf resolved by `terms` over the complete
/// intersection Y: HF_Y(n) - sum_i (-1)^i sum_{a in M_i} HF_Y(n + a), i.e.
/// h^0(O_C(n)) for large n when `terms` resolves I_C.
inline std::int64_t curve_hf(int ambient_dim, const std::vector<int>& y_degrees,
                             const std::vector<std::vector<int>>& terms, int n) {
  std::int64_t ideal = 0;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    for (int a : terms[i]) {
      const std::int64_t h = staircase_hf(ambient_dim, y_degrees, n + a);
      ideal += (i % 2 == 0) ? h : -h;
    }
  }
  return staircase_hf(ambient_dim, y_degrees, n) - ideal;
}

/// h^0(O_V(n)) for a complete intersection V of the given degrees in P^N, by
/// inclusion-exclusion over subsets of the equations in the Koszul complex.
inline std::int64_t inclusion_exclusion_hf(int ambient_dim, const std::vector<int>& degrees, int n) {
  auto binom = [](std::int64_t top, int k) -> std::int64_t {
    if (top < k) return 0;
    std::int64_t v = 1;
    for (int i = 1; i <= k; ++i) v = v * (top - k + i) / i;
    return v;
  };
  std::int64_t total = 0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << degrees.size()); ++mask) {
    int shift = 0;
    int sign = 1;
    for (std::size_t i = 0; i < degrees.size(); ++i) {
      if (mask & (std::size_t{1} << i)) {
        shift += degrees[i];
        sign = -sign;
      }
    }
    total += sign * binom(static_cast<std::int64_t>(n) - shift + ambient_dim, ambient_dim);
  }
  return total;
}

/// 12 chi(E(n)) for a rank-2 bundle (c1, c2) on X_r, with the twist applied
/// to the Chern classes by hand.
inline std::int64_t twelve_chi(int r, int c1, std::int64_t c2, int n) {
  const std::int64_t k = r / 4;
  const std::int64_t a = c1 + 2LL * n;
  const std::int64_t b = c2 + static_cast<std::int64_t>(r) * n * c1 + static_cast<std::int64_t>(r) * n * n;
  return 2LL * r * a * a * a - 6 * a * b + a * (12 * (k + 4) - 2LL * r);
}

/// Coefficient of h^2 in (1+h)^{N+1} / prod(1 + d_i h): c2 of the tangent
/// bundle of the complete intersection, in units of h^2.
inline std::int64_t tangent_c2_coefficient(int ambient_dim, const std::vector<int>& degrees) {
  // Truncated power series to order 2.
  std::int64_t series[3] = {1, 0, 0};
  auto multiply = [&](std::int64_t b1, std::int64_t b2) {
    const std::int64_t s0 = series[0];
    const std::int64_t s1 = series[1];
    series[2] = series[2] + s1 * b1 + s0 * b2;
    series[1] = s1 + s0 * b1;
  };
  for (int i = 0; i <= ambient_dim; ++i) multiply(1, 0);
  for (int d : degrees) multiply(-d, static_cast<std::int64_t>(d) * d);  // 1/(1+dh) = 1 - dh + d^2h^2
  return series[2];
}

}  // namespace oracle
