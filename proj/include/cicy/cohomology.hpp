#pragma once

// Cohomology of line bundles on projective space and on complete
// intersections. Complete intersections are ACM, so the only nonzero
// cohomology of O_X(n) sits in degrees 0 and dim X.

#include "cicy/core_model.hpp"
#include "cicy/number.hpp"

#include <optional>
#include <vector>

namespace cicy {

/// h^0..h^dim of O_X(twist). Entries are std::nullopt only when a value is
/// undetermined (rank-2 tables filled from grr::acm_h0).
struct CohomologyTable {
  CompleteIntersection variety;
  int twist = 0;
  std::vector<std::optional<Integer>> dims;

  const std::optional<Integer>& h(int i) const { return dims.at(static_cast<std::size_t>(i)); }
};

/// Extended binomial a(a-1)...(a-b+1)/b! for any integer a and b >= 0.
inline Integer ext_binomial(long long a, int b) {
  if (b < 0) throw InvalidArgument("ext_binomial requires b >= 0");
  Integer num = 1;
  Integer den = 1;
  for (int i = 0; i < b; ++i) {
    num *= Integer(a - i);
    den *= Integer(i + 1);
  }
  return num / den;
}

/// Bott formula for O(n) on P^N.
inline CohomologyTable pn_line_cohomology(int n_dim, int n) {
  if (n_dim < 1) throw InvalidArgument("projective space dimension must be >= 1");
  CohomologyTable t{CompleteIntersection::projective_space(n_dim), n,
                    std::vector<std::optional<Integer>>(static_cast<std::size_t>(n_dim) + 1, Integer(0))};
  if (n >= 0) t.dims.front() = ext_binomial(n + n_dim, n_dim);
  if (n <= -n_dim - 1) t.dims.back() = ext_binomial(-n - 1, n_dim);
  return t;
}

namespace detail {

// Visits every sub-multiset S of `degrees` (by index) with (|S|, sum S).
template <typename F>
void for_each_subset(const std::vector<int>& degrees, F&& f) {
  const std::size_t k = degrees.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    int size = 0;
    int sum = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask & (std::size_t{1} << i)) {
        ++size;
        sum += degrees[i];
      }
    }
    f(size, sum);
  }
}

}  // namespace detail

/// Coefficient of t^n in prod(1 - t^{d_j}) / (1 - t)^{N+1}, i.e. h^0(O_X(n)).
/// Each inclusion-exclusion term is a section count of O_{P^N}(n - s), so it is
/// truncated to zero when n - s < 0.
inline Integer hilbert_function_ci(const CompleteIntersection& x, int n) {
  if (n < 0) return 0;
  const int big_n = x.ambient_dim();
  Integer total = 0;
  detail::for_each_subset(x.degrees(), [&](int size, int sum) {
    const int m = n - sum;
    if (m < 0) return;
    Integer term = ext_binomial(m + big_n, big_n);
    if (size % 2) total -= term;
    else total += term;
  });
  return total;
}

/// Euler characteristic of O_X(n); the same alternating sum without truncation.
inline Integer chi_line_bundle(const CompleteIntersection& x, int n) {
  const int big_n = x.ambient_dim();
  Integer total = 0;
  detail::for_each_subset(x.degrees(), [&](int size, int sum) {
    Integer term = ext_binomial(static_cast<long long>(n) - sum + big_n, big_n);
    if (size % 2) total -= term;
    else total += term;
  });
  return total;
}

/// Full cohomology table of O_X(n): ACM vanishing in the middle, Serre duality
/// with canonical twist K for the top degree.
inline CohomologyTable ci_structure_cohomology(const CompleteIntersection& x, int n) {
  const int dim = x.dimension();
  CohomologyTable t{x, n, std::vector<std::optional<Integer>>(static_cast<std::size_t>(dim) + 1, Integer(0))};
  if (dim == 0) {
    // Finite scheme: O_X(n) has length deg X in every twist.
    t.dims[0] = chi_line_bundle(x, n);
    return t;
  }
  t.dims.front() = hilbert_function_ci(x, n);
  t.dims.back() = hilbert_function_ci(x, x.canonical_twist() - n);
  return t;
}

}  // namespace cicy
