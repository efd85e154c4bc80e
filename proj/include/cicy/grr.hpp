#pragma once

// Chern-class arithmetic for rank-2 bundles on CICY threefolds: twisting,
// Riemann-Roch, Serre-correspondence invariants, h^0 of ACM bundles, and
// recovery of (c1, c2) from sampled Euler characteristics.

#include "cicy/cohomology.hpp"
#include "cicy/core_model.hpp"
#include "cicy/number.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace cicy {

struct TangentChernData {
  Cicy cicy;
  /// c2(T_X).h in line-class units.
  int d2_in_lines = 0;
};

/// c2(T_X) = coefficient * h^2 for each catalog CICY, keyed by r.
inline const std::map<int, int>& tangent_d2_coefficients() {
  static const std::map<int, int> table{{5, 10}, {8, 7}, {9, 6}, {12, 5}, {16, 4}};
  return table;
}

inline TangentChernData tangent_d2(const Cicy& x) {
  const int d2 = 12 * (x.k() + 4) - 2 * x.r();
  const auto& table = tangent_d2_coefficients();
  auto it = table.find(x.r());
  if (it == table.end() || it->second * x.r() != d2) {
    throw InvalidArgument("tangent c2 of " + x.name() + " disagrees with the stored coefficient table");
  }
  return {x, d2};
}

/// Chern classes of E(n) for rank-2 E on X_r.
constexpr std::pair<int, int> twist_chern(int c1, int c2, int n, int r) noexcept {
  return {c1 + 2 * n, c2 + r * n * c1 + r * n * n};
}

namespace detail {

// 12 chi(E) = 2r c1^3 - 6 c1 c2 + c1 (12(k+4) - 2r); exact over the common
// denominator 12. Returns nullopt when 12 does not divide it.
inline std::optional<Integer> try_grr_chi(int r, int k, int c1, int c2) {
  const Integer a = c1;
  const Integer scaled = 2 * Integer(r) * a * a * a - 6 * a * Integer(c2) + a * Integer(12 * (k + 4) - 2 * r);
  if (scaled % 12 != 0) return std::nullopt;
  return Integer(scaled / 12);
}

inline std::optional<Integer> try_chi_twisted(const Cicy& x, int c1, int c2, int n) {
  auto [t1, t2] = twist_chern(c1, c2, n, x.r());
  return try_grr_chi(x.r(), x.k(), t1, t2);
}

}  // namespace detail

/// chi(E) as an exact rational, without the integrality check.
inline Rational grr_chi_rational(const Cicy& x, int c1, int c2) {
  const Integer a = c1;
  return Rational(2 * Integer(x.r()) * a * a * a - 6 * a * Integer(c2) + a * Integer(12 * (x.k() + 4) - 2 * x.r()),
                  Integer(12));
}

inline Rational chi_twisted_rational(const Cicy& x, int c1, int c2, int n) {
  auto [t1, t2] = twist_chern(c1, c2, n, x.r());
  return grr_chi_rational(x, t1, t2);
}

/// chi(E) = (r/6) c1^3 - c1 c2 / 2 + (c1/12)(12(k+4) - 2r).
inline Integer grr_chi(const Cicy& x, int c1, int c2) {
  auto chi = detail::try_grr_chi(x.r(), x.k(), c1, c2);
  if (!chi) {
    throw NonIntegralChi("chi(E) = " + to_string(grr_chi_rational(x, c1, c2)) + " on " + x.name() + " for c1=" + std::to_string(c1) +
                         ", c2=" + std::to_string(c2) + " is not an integer");
  }
  return *chi;
}

/// chi(E(n)).
inline Integer chi_twisted(const Cicy& x, int c1, int c2, int n) {
  auto [t1, t2] = twist_chern(c1, c2, n, x.r());
  return grr_chi(x, t1, t2);
}

/// Degree and genus of the zero locus of a section of E on a threefold with
/// K = O(canonical_twist): 2g - 2 = (c1 + K) c2.
inline CurveInvariants subcanonical_invariants(int c1, int c2, int canonical_twist) {
  const long long twice = static_cast<long long>(c1 + canonical_twist) * c2;
  if (twice % 2 != 0) {
    throw OddProduct("(c1 + K) * c2 = " + std::to_string(twice) + " is odd; no subcanonical curve");
  }
  if (c2 < 1) throw InvalidArgument("curve degree c2 must be >= 1");
  return {c2, static_cast<int>(twice / 2 + 1)};
}

/// Calabi-Yau case: degree c2, genus c1 c2 / 2 + 1.
inline CurveInvariants serre_invariants(int c1, int c2) { return subcanonical_invariants(c1, c2, 0); }

using H0Anchors = std::map<int, Integer>;

/// h^0(E(n)) for a normalized rank-2 ACM bundle, from
///   h^0(E(n)) = chi(E(n)) + h^0(E(-c1-n)),
/// with h^0(E(m)) = 0 for m < 0 and h^0(E) = 1 when c1 <= 0.
/// Returns std::nullopt when n and -c1-n are both unknown.
inline std::optional<Integer> acm_h0(const Cicy& x, int c1, int c2, int n, const H0Anchors& anchors = {}) {
  auto known = [&](int m) -> std::optional<Integer> {
    if (auto it = anchors.find(m); it != anchors.end()) return it->second;
    if (m < 0) return Integer(0);
    if (m == 0 && c1 <= 0) return Integer(1);
    return std::nullopt;
  };

  for (const auto& [m, v] : anchors) {
    const std::string where = "anchor h0(E(" + std::to_string(m) + "))=" + to_string(v);
    if (v < 0) throw InconsistentAnchor(where + " is negative");
    if (m < 0 && v != 0) throw InconsistentAnchor(where + " contradicts normalization");
    if (m == 0 && v == 0) throw InconsistentAnchor(where + " contradicts normalization");
    const int partner = serre_dual_twist(c1, m);
    if (partner == m) continue;
    if (auto p = known(partner)) {
      if (v - *p != chi_twisted(x, c1, c2, m)) {
        throw InconsistentAnchor(where + " contradicts h0(E(" + std::to_string(partner) + "))=" + to_string(*p) +
                                 " via chi");
      }
    }
  }

  if (auto v = known(n)) return v;
  const int partner = serre_dual_twist(c1, n);
  if (partner == n) return std::nullopt;
  auto p = known(partner);
  if (!p) return std::nullopt;
  Integer value = chi_twisted(x, c1, c2, n) + *p;
  if (value < 0) {
    throw InconsistentAnchor("h0(E(" + std::to_string(n) + ")) would be " + to_string(value));
  }
  return value;
}

/// h^0(I_C(n)) for the curve C cut out by a section of E, read off
/// 0 -> O_X -> E -> I_C(c1) -> 0 twisted by n - c1.
inline std::optional<Integer> ideal_h0(const Cicy& x, int c1, int c2, int n, const H0Anchors& anchors = {}) {
  auto e = acm_h0(x, c1, c2, n - c1, anchors);
  if (!e) return std::nullopt;
  return *e - hilbert_function_ci(x.base(), n - c1);
}

/// Cohomology table of E(n) with ACM vanishing and Serre duality.
inline CohomologyTable bundle_cohomology(const Cicy& x, int c1, int c2, int n, const H0Anchors& anchors = {}) {
  CohomologyTable t{x.base(), n, {acm_h0(x, c1, c2, n, anchors), Integer(0), Integer(0),
                                  acm_h0(x, c1, c2, serre_dual_twist(c1, n), anchors)}};
  return t;
}

/// Sampled values chi(E(n)).
class ChiProfile {
 public:
  ChiProfile() = default;
  ChiProfile(std::initializer_list<std::pair<int, Integer>> samples) {
    for (const auto& s : samples) add(s.first, s.second);
  }

  void add(int twist, Integer chi) {
    for (const auto& s : samples_) {
      if (s.first == twist) throw InvalidArgument("duplicate twist " + std::to_string(twist) + " in profile");
    }
    samples_.emplace_back(twist, std::move(chi));
  }

  const std::vector<std::pair<int, Integer>>& samples() const noexcept { return samples_; }
  std::size_t size() const noexcept { return samples_.size(); }

 private:
  std::vector<std::pair<int, Integer>> samples_;
};

/// Closed integer interval [lo, hi].
struct IntRange {
  int lo = 0;
  int hi = 0;
};

/// Every (c1, c2) in the box whose chi(E(n)) matches all samples.
inline std::vector<std::pair<int, int>> chern_candidates(const Cicy& x, const ChiProfile& profile, IntRange c1_range,
                                                         IntRange c2_range) {
  std::vector<std::pair<int, int>> matches;
  for (int c1 = c1_range.lo; c1 <= c1_range.hi; ++c1) {
    for (int c2 = c2_range.lo; c2 <= c2_range.hi; ++c2) {
      bool ok = true;
      for (const auto& [n, chi] : profile.samples()) {
        auto v = detail::try_chi_twisted(x, c1, c2, n);
        if (!v || *v != chi) {
          ok = false;
          break;
        }
      }
      if (ok) matches.emplace_back(c1, c2);
    }
  }
  return matches;
}

/// Exhaustive inversion of Riemann-Roch over a finite box.
inline std::pair<int, int> infer_chern(const Cicy& x, const ChiProfile& profile, IntRange c1_range,
                                       IntRange c2_range) {
  if (profile.size() < 3) {
    throw InsufficientSamples("infer_chern needs at least 3 samples, got " + std::to_string(profile.size()));
  }
  auto matches = chern_candidates(x, profile, c1_range, c2_range);
  if (matches.empty()) throw NoMatch("no (c1, c2) in range reproduces the chi profile on " + x.name());
  if (matches.size() > 1) {
    std::string list;
    for (const auto& [a, b] : matches) list += " (" + std::to_string(a) + "," + std::to_string(b) + ")";
    throw AmbiguousMatch("several Chern classes fit:" + list, std::move(matches));
  }
  return matches.front();
}

}  // namespace cicy
