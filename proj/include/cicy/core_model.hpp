#pragma once

// Data model: complete intersections, the CICY catalog, bundle classes,
// graded free modules and free resolutions. Everything here is arithmetic-free
// apart from structural validation.

#include "cicy/errors.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cicy {

namespace detail {

inline std::string join(const std::vector<int>& v, std::string_view sep = ",") {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << sep;
    os << v[i];
  }
  return os.str();
}

}  // namespace detail

/// Complete intersection of hypersurfaces of the given degrees in P^N.
/// An empty degree list is P^N itself. Degrees are kept sorted ascending.
class CompleteIntersection {
 public:
  CompleteIntersection(int ambient_dim, std::vector<int> degrees)
      : ambient_dim_(ambient_dim), degrees_(std::move(degrees)) {
    if (ambient_dim_ < 1) throw InvalidArgument("ambient dimension must be >= 1");
    for (int d : degrees_) {
      if (d < 1) throw InvalidArgument("hypersurface degrees must be >= 1");
    }
    if (static_cast<int>(degrees_.size()) > ambient_dim_) {
      throw InvalidArgument("more hypersurfaces than the ambient dimension");
    }
    std::sort(degrees_.begin(), degrees_.end());
  }

  static CompleteIntersection projective_space(int n) { return {n, {}}; }

  /// The threefold cut out by `degrees` (ambient P^{3+k}).
  static CompleteIntersection threefold(std::vector<int> degrees) {
    const int n = 3 + static_cast<int>(degrees.size());
    return {n, std::move(degrees)};
  }

  int ambient_dim() const noexcept { return ambient_dim_; }
  const std::vector<int>& degrees() const noexcept { return degrees_; }
  int codimension() const noexcept { return static_cast<int>(degrees_.size()); }
  int dimension() const noexcept { return ambient_dim_ - codimension(); }

  int degree() const {
    return std::accumulate(degrees_.begin(), degrees_.end(), 1, std::multiplies<>());
  }
  int degree_sum() const { return std::accumulate(degrees_.begin(), degrees_.end(), 0); }

  /// K_X = O_X(canonical_twist()) by adjunction.
  int canonical_twist() const { return degree_sum() - ambient_dim_ - 1; }

  bool contains_degree(int d) const {
    return std::find(degrees_.begin(), degrees_.end(), d) != degrees_.end();
  }

  /// The complete intersection with one hypersurface of degree d removed.
  CompleteIntersection without_degree(int d) const {
    auto it = std::find(degrees_.begin(), degrees_.end(), d);
    if (it == degrees_.end()) {
      throw InvalidArgument("no hypersurface of degree " + std::to_string(d) + " in " + name());
    }
    std::vector<int> rest = degrees_;
    rest.erase(rest.begin() + (it - degrees_.begin()));
    return {ambient_dim_, std::move(rest)};
  }

  CompleteIntersection with_degree(int d) const {
    std::vector<int> more = degrees_;
    more.push_back(d);
    return {ambient_dim_, std::move(more)};
  }

  std::string name() const {
    std::string p = "P^" + std::to_string(ambient_dim_);
    if (degrees_.empty()) return p;
    return "(" + detail::join(degrees_) + ") in " + p;
  }

  friend bool operator==(const CompleteIntersection&, const CompleteIntersection&) = default;

 private:
  int ambient_dim_;
  std::vector<int> degrees_;
};

/// One of the five complete-intersection Calabi-Yau threefolds.
class Cicy {
 public:
  const CompleteIntersection& base() const noexcept { return base_; }
  /// Product of the degrees; X_r has degree r.
  int r() const noexcept { return r_; }
  /// Number of hypersurfaces.
  int k() const noexcept { return k_; }
  int ambient_dim() const noexcept { return base_.ambient_dim(); }
  const std::vector<int>& degrees() const noexcept { return base_.degrees(); }
  std::string name() const { return "X_" + std::to_string(r_); }

  friend bool operator==(const Cicy& a, const Cicy& b) { return a.base_ == b.base_; }

 private:
  explicit Cicy(CompleteIntersection base)
      : base_(std::move(base)), r_(base_.degree()), k_(base_.codimension()) {}

  friend Cicy make_cicy(std::vector<int> degrees);

  CompleteIntersection base_;
  int r_;
  int k_;
};

inline constexpr std::array<std::array<int, 4>, 5> kCicyDegreeTable{{
    {5, 0, 0, 0},
    {2, 4, 0, 0},
    {3, 3, 0, 0},
    {2, 2, 3, 0},
    {2, 2, 2, 2},
}};

inline std::vector<std::vector<int>> cicy_degree_lists() {
  std::vector<std::vector<int>> out;
  for (const auto& row : kCicyDegreeTable) {
    std::vector<int> degs;
    for (int d : row) {
      if (d) degs.push_back(d);
    }
    out.push_back(std::move(degs));
  }
  return out;
}

/// Validates `degrees` as a CICY threefold. The ambient is P^{sum-1}.
inline Cicy make_cicy(std::vector<int> degrees) {
  if (degrees.empty()) throw InvalidArgument("degree list must be nonempty");
  std::sort(degrees.begin(), degrees.end());
  if (degrees.front() < 1) throw InvalidArgument("hypersurface degrees must be >= 1");

  const int sum = std::accumulate(degrees.begin(), degrees.end(), 0);
  const int n = sum - 1;
  const int dim = n - static_cast<int>(degrees.size());
  if (dim != 3) {
    throw NotCalabiYau("degrees (" + detail::join(degrees) + ") with trivial canonical class live in P^" +
                       std::to_string(n) + ", giving dimension " + std::to_string(dim) + " != 3");
  }
  const auto catalog = cicy_degree_lists();
  if (std::find(catalog.begin(), catalog.end(), degrees) == catalog.end()) {
    throw NotInCatalog("degrees (" + detail::join(degrees) + ") are not one of the five CICY threefolds");
  }

  Cicy x{CompleteIntersection(n, degrees)};
  // Derived-field cross checks.
  if (x.base().dimension() != 3 || x.base().canonical_twist() != 0 || x.k() != x.r() / 4) {
    throw NotCalabiYau("catalog entry failed derived-field checks");
  }
  return x;
}

inline const std::vector<Cicy>& cicy_catalog() {
  static const std::vector<Cicy> catalog = [] {
    std::vector<Cicy> out;
    for (auto& degs : cicy_degree_lists()) out.push_back(make_cicy(degs));
    return out;
  }();
  return catalog;
}

/// Looks up a catalog CICY by its degree r.
inline const Cicy& cicy_by_degree(int r) {
  for (const auto& x : cicy_catalog()) {
    if (x.r() == r) return x;
  }
  throw NotInCatalog("no CICY threefold of degree " + std::to_string(r));
}

/// Chern data of a bundle on a CICY; c2 is measured in line classes.
struct BundleClass {
  int rank = 2;
  int c1 = 0;
  int c2 = 0;
  bool normalized = true;

  /// Normalized rank-2 indecomposable ACM bundles have -2 <= c1 <= 4.
  bool in_classification_range() const { return rank == 2 && normalized && c1 >= -2 && c1 <= 4; }

  friend bool operator==(const BundleClass&, const BundleClass&) = default;
};

/// Direct sum of O(a_j); twists are canonicalized sorted descending.
class GradedFreeModule {
 public:
  GradedFreeModule() = default;
  GradedFreeModule(std::initializer_list<int> twists) : twists_(twists) { canonicalize(); }
  explicit GradedFreeModule(std::vector<int> twists) : twists_(std::move(twists)) { canonicalize(); }

  /// O(twist)^multiplicity.
  static GradedFreeModule power(int twist, int multiplicity) {
    return GradedFreeModule(std::vector<int>(static_cast<std::size_t>(std::max(multiplicity, 0)), twist));
  }

  const std::vector<int>& twists() const noexcept { return twists_; }
  int rank() const noexcept { return static_cast<int>(twists_.size()); }
  bool empty() const noexcept { return twists_.empty(); }
  int twist_sum() const { return std::accumulate(twists_.begin(), twists_.end(), 0); }

  int multiplicity(int twist) const {
    return static_cast<int>(std::count(twists_.begin(), twists_.end(), twist));
  }

  /// Removes one copy of O(twist); returns false if absent.
  bool remove_one(int twist) {
    auto it = std::find(twists_.begin(), twists_.end(), twist);
    if (it == twists_.end()) return false;
    twists_.erase(it);
    return true;
  }

  friend GradedFreeModule operator+(const GradedFreeModule& a, const GradedFreeModule& b) {
    std::vector<int> all = a.twists_;
    all.insert(all.end(), b.twists_.begin(), b.twists_.end());
    return GradedFreeModule(std::move(all));
  }

  friend bool operator==(const GradedFreeModule&, const GradedFreeModule&) = default;

  /// "O(-2)^3 + O(-4)^2" style display; the zero module prints as "0".
  std::string to_string(std::string_view sheaf = "O") const {
    if (twists_.empty()) return "0";
    std::ostringstream os;
    std::size_t i = 0;
    bool first = true;
    while (i < twists_.size()) {
      std::size_t j = i;
      while (j < twists_.size() && twists_[j] == twists_[i]) ++j;
      if (!first) os << " + ";
      first = false;
      os << sheaf;
      if (twists_[i] != 0) os << "(" << twists_[i] << ")";
      if (j - i > 1) os << "^" << (j - i);
      i = j;
    }
    return os.str();
  }

 private:
  void canonicalize() { std::sort(twists_.begin(), twists_.end(), std::greater<>()); }

  std::vector<int> twists_;
};

/// Shift every twist by n.
inline GradedFreeModule twist_module(const GradedFreeModule& m, int n) {
  std::vector<int> out = m.twists();
  for (int& a : out) a += n;
  return GradedFreeModule(std::move(out));
}

/// Hom(m, O(twist_by)): each twist a becomes twist_by - a.
inline GradedFreeModule dual_module(const GradedFreeModule& m, int twist_by) {
  std::vector<int> out = m.twists();
  for (int& a : out) a = twist_by - a;
  return GradedFreeModule(std::move(out));
}

/// On a Calabi-Yau threefold, h^3(E(n)) = h^0(E(-c1-n)) for rank-2 E.
constexpr int serre_dual_twist(int c1, int n) noexcept { return -c1 - n; }

enum class TargetKind { curve_ideal, bundle, other };

inline std::string_view to_string(TargetKind k) {
  switch (k) {
    case TargetKind::curve_ideal: return "curve_ideal";
    case TargetKind::bundle: return "bundle";
    case TargetKind::other: return "other";
  }
  return "other";
}

inline TargetKind target_kind_from_string(std::string_view s) {
  if (s == "curve_ideal") return TargetKind::curve_ideal;
  if (s == "bundle") return TargetKind::bundle;
  if (s == "other") return TargetKind::other;
  throw ParseError("unknown target kind '" + std::string(s) + "'");
}

/// A complex 0 <- M_0 <- M_1 <- ... of free modules over `ambient`, resolving
/// a sheaf of the given kind; terms()[0] is nearest the resolved object.
///
/// Rank bookkeeping is checked at construction: an ideal sheaf has rank 1 on
/// the ambient, and a bundle on a hypersurface section is torsion there, so
/// its alternating rank sum is 0.
class FreeResolution {
 public:
  FreeResolution(CompleteIntersection ambient, std::vector<GradedFreeModule> terms, TargetKind target)
      : ambient_(std::move(ambient)), terms_(std::move(terms)), target_(target) {
    if (terms_.size() < 2) throw InvalidArgument("a resolution needs at least two terms");
    const int alt = alternating_rank();
    if (target_ == TargetKind::curve_ideal && alt != 1) {
      throw InvalidArgument("ideal sheaf resolution has alternating rank " + std::to_string(alt) + ", expected 1");
    }
    if (target_ == TargetKind::bundle && alt != 0) {
      throw InvalidArgument("bundle resolution has alternating rank " + std::to_string(alt) +
                            ", expected 0 (torsion on the ambient)");
    }
  }

  const CompleteIntersection& ambient() const noexcept { return ambient_; }
  const std::vector<GradedFreeModule>& terms() const noexcept { return terms_; }
  const GradedFreeModule& term(std::size_t i) const { return terms_.at(i); }
  std::size_t length() const noexcept { return terms_.size(); }
  TargetKind target() const noexcept { return target_; }

  int alternating_rank() const {
    int sum = 0;
    for (std::size_t i = 0; i < terms_.size(); ++i) sum += (i % 2 == 0 ? 1 : -1) * terms_[i].rank();
    return sum;
  }

  /// Arrow display, leftmost term last: "0 -> O(-3) -> O(-2)^3 -> O(-1)^3 -> I_C -> 0".
  std::string to_string() const {
    std::string sheaf = ambient_.degrees().empty() ? "O" : "O_Y";
    std::ostringstream os;
    os << "0";
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) os << " -> " << it->to_string(sheaf);
    os << " -> " << (target_ == TargetKind::curve_ideal ? "I_C" : target_ == TargetKind::bundle ? "E" : "M")
       << " -> 0";
    return os.str();
  }

  friend bool operator==(const FreeResolution&, const FreeResolution&) = default;

 private:
  CompleteIntersection ambient_;
  std::vector<GradedFreeModule> terms_;
  TargetKind target_;
};

struct CurveInvariants {
  int degree = 1;
  int genus = 0;

  friend bool operator==(const CurveInvariants&, const CurveInvariants&) = default;
};

}  // namespace cicy
