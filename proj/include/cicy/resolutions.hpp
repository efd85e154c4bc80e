#pragma once

// Degree shapes of minimal free resolutions: arithmetically Gorenstein curves
// in a fourfold Y, the rank-2 bundles they induce on a hypersurface section
// X of Y, and the bundles obtained by restricting those resolutions to X.
//
// Twists are literal: O(a) is stored as a, so ideal generators of degree r
// appear as -r.

#include "cicy/cohomology.hpp"
#include "cicy/core_model.hpp"
#include "cicy/grr.hpp"
#include "cicy/hilbert.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace cicy {

/// Generator degrees r_1..r_{2b+1} of an AG curve and its socle degree
/// c = (sum r_j) / b.
class AGCurveData {
 public:
  static AGCurveData from_generators(std::vector<int> gens) {
    if (gens.size() % 2 == 0) {
      throw EvenGeneratorCount("an AG curve of codimension 3 has an odd number of generators, got " +
                               std::to_string(gens.size()));
    }
    if (gens.size() < 3) throw InvalidArgument("need at least three generators");
    for (int r : gens) {
      if (r < 1) throw InvalidArgument("generator degrees must be positive");
    }
    std::sort(gens.begin(), gens.end(), std::greater<>());
    const int b = static_cast<int>(gens.size() - 1) / 2;
    const int sum = std::accumulate(gens.begin(), gens.end(), 0);
    if (sum % b != 0) {
      throw NonIntegralSocle("generator degree sum " + std::to_string(sum) + " is not divisible by b = " +
                             std::to_string(b));
    }
    return AGCurveData(std::move(gens), b, sum / b);
  }

  /// Sorted descending.
  const std::vector<int>& generator_degrees() const noexcept { return gens_; }
  int b() const noexcept { return b_; }
  int socle() const noexcept { return socle_; }

 private:
  AGCurveData(std::vector<int> gens, int b, int c) : gens_(std::move(gens)), b_(b), socle_(c) {}

  std::vector<int> gens_;
  int b_;
  int socle_;
};

/// 0 -> O(-c) -> (+) O(r_j - c) -> (+) O(-r_j) -> I_C -> 0 over `ambient`.
inline FreeResolution ag_curve_resolution(const AGCurveData& data, const CompleteIntersection& ambient) {
  std::vector<int> p0;
  std::vector<int> p1;
  for (int r : data.generator_degrees()) {
    p0.push_back(-r);
    p1.push_back(r - data.socle());
  }
  return FreeResolution(ambient,
                        {GradedFreeModule(std::move(p0)), GradedFreeModule(std::move(p1)),
                         GradedFreeModule{-data.socle()}},
                        TargetKind::curve_ideal);
}

inline FreeResolution ag_curve_resolution(std::vector<int> gens, const CompleteIntersection& ambient) {
  return ag_curve_resolution(AGCurveData::from_generators(std::move(gens)), ambient);
}

struct BundleResolution {
  FreeResolution resolution;
  int c1 = 0;
  int socle = 0;
  int hypersurface_degree = 0;
};

/// Resolution over Y of the rank-2 bundle on the degree-d section X of Y that
/// corresponds to an AG curve with generator degrees `gens`, assuming
/// c1(E) = c - d:
///   L1 = O(c - 2d) + (+) O(r_j - d),   L0 = O + (+) O(c - d - r_j).
/// The shape always satisfies L1 = Hom(L0, O(c - 2d)).
inline BundleResolution bundle_resolution(std::vector<int> gens, int d, const CompleteIntersection& ambient) {
  if (d < 1) throw InvalidArgument("hypersurface degree must be >= 1");
  const AGCurveData data = AGCurveData::from_generators(std::move(gens));
  const int c = data.socle();
  std::vector<int> l1{c - 2 * d};
  std::vector<int> l0{0};
  for (int r : data.generator_degrees()) {
    l1.push_back(r - d);
    l0.push_back(c - d - r);
  }
  GradedFreeModule m0(std::move(l0));
  GradedFreeModule m1(std::move(l1));
  if (dual_module(m0, c - 2 * d) != m1) throw InvalidArgument("internal: self-dual shape violated");
  return {FreeResolution(ambient, {std::move(m0), std::move(m1)}, TargetKind::bundle), c - d, c, d};
}

/// The bundle construction needs c1(E) = c - d.
inline bool theorem_applicable(std::vector<int> gens, int d, int c1) {
  return c1 == AGCurveData::from_generators(std::move(gens)).socle() - d;
}

/// On the quintic, a normalized bundle with L0 = O + (+) O(-r_i) determines its
/// curve:  0 -> O(-(c1+5)) -> (+) O(r_i - 5) -> (+) O(-r_i - c1) -> I_C -> 0.
inline FreeResolution curve_resolution_from_bundle_quintic(int c1, std::vector<int> gens) {
  const auto p4 = CompleteIntersection::projective_space(4);
  if (gens.size() % 2 == 0) {
    throw InconsistentDegrees("expected an odd number 2b+1 of non-free twists, got " + std::to_string(gens.size()));
  }
  std::vector<int> p0;
  std::vector<int> p1;
  std::vector<int> curve_gens;
  for (int r : gens) {
    p0.push_back(-r - c1);
    p1.push_back(r - 5);
    curve_gens.push_back(r + c1);
  }
  FreeResolution out(p4, {GradedFreeModule(std::move(p0)), GradedFreeModule(std::move(p1)),
                          GradedFreeModule{-(c1 + 5)}},
                     TargetKind::curve_ideal);
  try {
    if (ag_curve_resolution(curve_gens, p4) != out) {
      throw InconsistentDegrees("generator degrees " + detail::join(curve_gens) + " have socle " +
                                std::to_string(AGCurveData::from_generators(curve_gens).socle()) +
                                ", but c1 + 5 = " + std::to_string(c1 + 5));
    }
  } catch (const InconsistentDegrees&) {
    throw;
  } catch (const Error& e) {
    throw InconsistentDegrees(std::string("curve generators fail validation: ") + e.what());
  }
  return out;
}

/// Same, reading the r_i off the full L0 (one copy of O is the free summand).
inline FreeResolution curve_resolution_from_bundle_quintic(int c1, const GradedFreeModule& l0) {
  GradedFreeModule rest = l0;
  if (!rest.remove_one(0)) throw InconsistentDegrees("L0 has no O summand");
  std::vector<int> gens;
  for (int a : rest.twists()) gens.push_back(-a);
  return curve_resolution_from_bundle_quintic(c1, std::move(gens));
}

/// Degrees c - r_i - r_j of the entries of the skew middle map, rows ordered
/// by descending generator degree. Negative entries are forced zeros.
struct DegreeMatrix {
  std::vector<int> row_degrees;
  std::vector<std::vector<int>> entries;

  std::size_t size() const noexcept { return entries.size(); }
  int at(std::size_t i, std::size_t j) const { return entries.at(i).at(j); }

  bool is_symmetric() const {
    for (std::size_t i = 0; i < size(); ++i) {
      for (std::size_t j = 0; j < size(); ++j) {
        if (entries[i][j] != entries[j][i]) return false;
      }
    }
    return true;
  }

  /// Rows of space-separated entries; negative entries print as 0 unless raw.
  std::string display(bool raw = false) const {
    std::ostringstream os;
    for (const auto& row : entries) {
      for (std::size_t j = 0; j < row.size(); ++j) {
        if (j) os << ' ';
        const int v = (!raw && row[j] < 0) ? 0 : row[j];
        os << (v < 0 ? "" : " ") << v;
      }
      os << '\n';
    }
    return os.str();
  }
};

inline DegreeMatrix degree_matrix(const AGCurveData& data) {
  DegreeMatrix m;
  m.row_degrees = data.generator_degrees();
  for (int ri : m.row_degrees) {
    std::vector<int> row;
    for (int rj : m.row_degrees) row.push_back(data.socle() - ri - rj);
    m.entries.push_back(std::move(row));
  }
  return m;
}

enum class Minimality { minimal, indeterminate };

inline std::string_view to_string(Minimality m) {
  return m == Minimality::minimal ? "minimal" : "indeterminate";
}

/// Sufficient test: if consecutive terms share no twist, no differential entry
/// can be a unit. A shared twist allows (but does not force) one.
inline Minimality minimality_check(const FreeResolution& res) {
  for (std::size_t i = 0; i + 1 < res.length(); ++i) {
    for (int a : res.term(i).twists()) {
      if (res.term(i + 1).multiplicity(a) > 0) return Minimality::indeterminate;
    }
  }
  return Minimality::minimal;
}

/// 0 -> E(-d) -> L1|_X -> L0|_X -> E -> 0.
struct RestrictedSequence {
  CompleteIntersection on;
  int source_rank = 2;
  int kernel_twist = 0;
  GradedFreeModule syzygies;
  GradedFreeModule generators;

  int alternating_rank() const { return source_rank - syzygies.rank() + generators.rank() - source_rank; }
};

struct RestrictionResult {
  RestrictedSequence four_term;
  /// Middle term of 0 -> E(-d) -> L1|_X -> F(s) -> 0.
  GradedFreeModule split_kernel;
  int new_rank = 0;
  /// Chern classes of E, recovered from its resolution.
  std::pair<int, int> source_chern;
  /// Chern classes of the normalized F, when F has rank 2.
  std::optional<std::pair<int, int>> inferred_chern;
  /// F(s) is the image of L1|_X; F itself is normalized.
  int normalization_shift = 0;
  /// Possible splitting types when the rank exceeds 2; not decided here.
  std::vector<std::string> candidate_structures;
};

struct RestrictionSearch {
  IntRange shift{-10, 10};
  IntRange c1{-6, 6};
  IntRange c2{0, 100};
};

namespace detail {

inline Integer h0_sum(const CompleteIntersection& v, const GradedFreeModule& m, int n) {
  Integer s = 0;
  for (int a : m.twists()) s += hilbert_function_ci(v, a + n);
  return s;
}

inline Integer chi_sum(const CompleteIntersection& v, const GradedFreeModule& m, int n) {
  Integer s = 0;
  for (int a : m.twists()) s += chi_line_bundle(v, a + n);
  return s;
}

}  // namespace detail

/// Restricts 0 -> L1 -> L0 -> E -> 0 (over Y, with L1 = Hom(L0, O(c-2d))) to
/// the degree-d section X of Y and splits the result at the image F(s) of
/// L1|_X. For rank-2 F the Chern classes are recovered from chi(F(n)),
/// n = 0..3.
inline RestrictionResult restrict_construction(const FreeResolution& res, int d, const Cicy& x,
                                               const RestrictionSearch& search = {}) {
  if (res.target() != TargetKind::bundle || res.length() != 2) {
    throw ShapeMismatch("expected a two-term bundle resolution 0 -> L1 -> L0 -> E -> 0");
  }
  const CompleteIntersection& y = res.ambient();
  if (d < 1 || y.with_degree(d) != x.base()) {
    throw ShapeMismatch(x.name() + " is not the degree-" + std::to_string(d) + " section of " + y.name());
  }
  const GradedFreeModule& l0 = res.term(0);
  const GradedFreeModule& l1 = res.term(1);
  if (l0.rank() != l1.rank() || l0.rank() < 3) throw ShapeMismatch("L0 and L1 must have equal rank >= 3");
  const int moment = l0.twist_sum() + l1.twist_sum();
  if (moment % l0.rank() != 0 || dual_module(l0, moment / l0.rank()) != l1) {
    throw ShapeMismatch("L1 is not Hom(L0, O(c-2d)) for any c");
  }
  const int dual_twist = moment / l0.rank();  // c - 2d

  // chi(E(m)) from the resolution over Y.
  ChiProfile e_profile;
  for (int m = 0; m <= 3; ++m) e_profile.add(m, detail::chi_sum(y, l0, m) - detail::chi_sum(y, l1, m));
  const auto source = infer_chern(x, e_profile, search.c1, search.c2);
  if (source.first != dual_twist + d) {
    throw ShapeMismatch("recovered c1(E) = " + std::to_string(source.first) + " but the resolution shape gives " +
                        std::to_string(dual_twist + d));
  }

  RestrictionResult out{RestrictedSequence{x.base(), 2, -d, l1, l0}, l1, l1.rank() - 2, source, std::nullopt, 0, {}};

  // K = ker(L0|_X -> E) is F(s). H^0 is exact on both pieces, so
  // h0(K(n)) = h0(L0|_X(n)) - h0(E(n)) and h0(E(n)) = h0_Y(L0(n)) - h0_Y(L1(n)).
  auto h0_kernel = [&](int n) {
    return detail::h0_sum(x.base(), l0, n) - (detail::h0_sum(y, l0, n) - detail::h0_sum(y, l1, n));
  };
  std::optional<int> first_section;
  for (int n = search.shift.lo; n <= search.shift.hi; ++n) {
    if (h0_kernel(n) != 0) {
      first_section = n;
      break;
    }
  }
  if (!first_section) throw NoMatch("no normalization shift in range");
  out.normalization_shift = -*first_section;
  const int s = out.normalization_shift;

  if (out.new_rank == 2) {
    ChiProfile f_profile;
    for (int n = 0; n <= 3; ++n) {
      f_profile.add(n, detail::chi_sum(x.base(), l1, n - s) - chi_twisted(x, source.first, source.second, n - s - d));
    }
    out.inferred_chern = infer_chern(x, f_profile, search.c1, search.c2);
  } else if (out.new_rank == 4) {
    out.candidate_structures = {"indecomposable rank 4", "line bundle + indecomposable rank 3"};
  } else {
    out.candidate_structures = {"rank " + std::to_string(out.new_rank) + ", splitting type not determined"};
  }
  return out;
}

}  // namespace cicy
