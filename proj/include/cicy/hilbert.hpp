#pragma once

// Hilbert series numerators and Hilbert polynomials read off graded free
// resolutions, and the curve invariants they determine.

#include "cicy/cohomology.hpp"
#include "cicy/core_model.hpp"
#include "cicy/grr.hpp"
#include "cicy/number.hpp"

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace cicy {

/// Finitely supported integer polynomial in t and 1/t.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  LaurentPolynomial(std::initializer_list<std::pair<const int, Integer>> terms) {
    for (const auto& [e, c] : terms) add(e, c);
  }

  static LaurentPolynomial monomial(int exponent, Integer coeff = 1) {
    LaurentPolynomial p;
    p.add(exponent, std::move(coeff));
    return p;
  }

  void add(int exponent, const Integer& coeff) {
    if (coeff == 0) return;
    auto& slot = coeffs_[exponent];
    slot += coeff;
    if (slot == 0) coeffs_.erase(exponent);
  }

  Integer coefficient(int exponent) const {
    auto it = coeffs_.find(exponent);
    return it == coeffs_.end() ? Integer(0) : it->second;
  }

  const std::map<int, Integer>& terms() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  int min_exponent() const { return coeffs_.empty() ? 0 : coeffs_.begin()->first; }
  int max_exponent() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }

  Integer value_at_one() const {
    Integer s = 0;
    for (const auto& [e, c] : coeffs_) s += c;
    return s;
  }

  LaurentPolynomial& operator+=(const LaurentPolynomial& o) {
    for (const auto& [e, c] : o.coeffs_) add(e, c);
    return *this;
  }
  LaurentPolynomial& operator-=(const LaurentPolynomial& o) {
    for (const auto& [e, c] : o.coeffs_) add(e, -c);
    return *this;
  }
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    LaurentPolynomial out;
    for (const auto& [ea, ca] : a.coeffs_) {
      for (const auto& [eb, cb] : b.coeffs_) out.add(ea + eb, ca * cb);
    }
    return out;
  }
  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

  /// Exact quotient by (1 - t), or nullopt when (1 - t) does not divide.
  std::optional<LaurentPolynomial> divided_by_one_minus_t() const {
    LaurentPolynomial q;
    if (coeffs_.empty()) return q;
    Integer running = 0;
    for (int e = min_exponent(); e < max_exponent(); ++e) {
      running += coefficient(e);
      q.add(e, running);
    }
    if (running + coefficient(max_exponent()) != 0) return std::nullopt;
    return q;
  }

  /// "1 - 3t + 3t^2 - t^3".
  std::string to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : coeffs_) {
      Integer mag = c < 0 ? Integer(-c) : c;
      if (first) {
        if (c < 0) os << "-";
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      first = false;
      const bool show_coeff = mag != 1 || e == 0;
      if (show_coeff) os << mag;
      if (e != 0) {
        os << "t";
        if (e != 1) os << "^" << e;
      }
    }
    return os.str();
  }

 private:
  std::map<int, Integer> coeffs_;
};

using HilbertNumerator = LaurentPolynomial;

/// 1 - t^d.
inline LaurentPolynomial one_minus_t_power(int d) { return LaurentPolynomial{{0, 1}, {d, -1}}; }

/// prod_j (1 - t^{d_j}): the numerator of the Hilbert series of the ambient.
inline HilbertNumerator ambient_numerator(const CompleteIntersection& y) {
  LaurentPolynomial num = LaurentPolynomial::monomial(0);
  for (int d : y.degrees()) num = num * one_minus_t_power(d);
  return num;
}

/// sum_i (-1)^i sum_{a in M_i} t^{-a}: the resolution's contribution to the
/// Hilbert series of the resolved sheaf, relative to the ambient's.
inline LaurentPolynomial alternating_twist_series(const FreeResolution& res) {
  LaurentPolynomial s;
  for (std::size_t i = 0; i < res.length(); ++i) {
    for (int a : res.term(i).twists()) s.add(-a, i % 2 == 0 ? Integer(1) : Integer(-1));
  }
  return s;
}

/// Numerator of the Hilbert series of O_C over (1 - t)^{N+1}, from a
/// resolution of the ideal sheaf of C.
inline HilbertNumerator numerator_from_resolution(const FreeResolution& res) {
  if (res.target() != TargetKind::curve_ideal) {
    throw InvalidArgument("numerator_from_resolution expects an ideal sheaf resolution");
  }
  return ambient_numerator(res.ambient()) * (LaurentPolynomial::monomial(0) - alternating_twist_series(res));
}

/// Coefficient of t^n in num / (1 - t)^{N+1}.
inline Integer hilbert_function_from_numerator(int ambient_dim, const HilbertNumerator& num, int n) {
  Integer total = 0;
  for (const auto& [e, c] : num.terms()) {
    if (n - e < 0) continue;
    total += c * ext_binomial(n - e + ambient_dim, ambient_dim);
  }
  return total;
}

/// Rational coefficients, constant term first.
struct HilbertPolynomial {
  std::vector<Rational> coefficients;

  int degree() const { return coefficients.empty() ? -1 : static_cast<int>(coefficients.size()) - 1; }

  Rational operator()(long long n) const {
    Rational v = 0;
    Rational power = 1;
    for (const auto& c : coefficients) {
      v += c * power;
      power *= n;
    }
    return v;
  }

  friend bool operator==(const HilbertPolynomial&, const HilbertPolynomial&) = default;

  std::string to_string() const {
    if (coefficients.empty()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
      const Rational& c = coefficients[static_cast<std::size_t>(i)];
      if (c == 0) continue;
      const bool neg = c < 0;
      Rational mag = neg ? Rational(-c) : c;
      if (out.empty()) out += neg ? "-" : "";
      else out += neg ? " - " : " + ";
      if (i == 0 || mag != 1) out += cicy::to_string(mag);
      if (i >= 1) out += "n";
      if (i > 1) out += "^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
  }
};

/// Hilbert polynomial of a curve whose Hilbert series is num / (1 - t)^{N+1}.
/// num must be divisible by (1 - t)^{N-1}; then P(n) = sum_e q_e (n - e + 1)
/// for the quotient q.
inline HilbertPolynomial hilbert_polynomial(int ambient_dim, const HilbertNumerator& num) {
  LaurentPolynomial q = num;
  for (int i = 0; i < ambient_dim - 1; ++i) {
    auto next = q.divided_by_one_minus_t();
    if (!next) {
      throw NotACurve("numerator " + num.to_string() + " is not divisible by (1-t)^" +
                      std::to_string(ambient_dim - 1));
    }
    q = std::move(*next);
  }
  Rational constant = 0;
  Rational linear = 0;
  for (const auto& [e, c] : q.terms()) {
    linear += Rational(c);
    constant += Rational(c * (1 - e));
  }
  HilbertPolynomial p{{constant, linear}};
  while (!p.coefficients.empty() && p.coefficients.back() == 0) p.coefficients.pop_back();
  return p;
}

/// (degree, arithmetic genus) from P(n) = d n + 1 - g.
inline CurveInvariants curve_invariants_from_polynomial(const HilbertPolynomial& p) {
  if (p.degree() != 1 || !is_integral(p.coefficients[0]) || !is_integral(p.coefficients[1]) ||
      p.coefficients[1] < 1) {
    throw NotACurve("Hilbert polynomial " + p.to_string() + " is not that of a curve");
  }
  const Integer d = boost::multiprecision::numerator(p.coefficients[1]);
  const Integer g = 1 - boost::multiprecision::numerator(p.coefficients[0]);
  return {narrow<int>(d), narrow<int>(g)};
}

inline CurveInvariants curve_invariants_from_resolution(const FreeResolution& res) {
  return curve_invariants_from_polynomial(
      hilbert_polynomial(res.ambient().ambient_dim(), numerator_from_resolution(res)));
}

/// Rank on the hypersurface section of degree d of a sheaf resolved over its
/// ambient: the resolved sheaf is torsion there, and its rank on the section
/// is (sum_i (-1)^i twist_sum(M_i)) / d.
inline int sheaf_rank_on_hypersurface(const FreeResolution& res, int d) {
  if (d < 1) throw InvalidArgument("hypersurface degree must be >= 1");
  if (res.alternating_rank() != 0) {
    throw InvalidArgument("resolved sheaf is not torsion on the ambient");
  }
  int moment = 0;
  for (std::size_t i = 0; i < res.length(); ++i) moment += (i % 2 == 0 ? 1 : -1) * res.term(i).twist_sum();
  if (moment % d != 0) {
    throw InvalidArgument("twist moment " + std::to_string(moment) + " is not divisible by " + std::to_string(d));
  }
  return moment / d;
}

struct SerreReport {
  bool consistent = false;
  std::optional<CurveInvariants> from_resolution;
  std::optional<CurveInvariants> expected;
  std::string detail;
};

/// Compares the curve read off `res` with the Serre-correspondence prediction
/// for a bundle (c1, c2) on the threefold `x`. Mismatches are reported, not
/// thrown.
inline SerreReport check_serre_consistency(const FreeResolution& res, const CompleteIntersection& x, int c1, int c2) {
  SerreReport report;
  const auto& amb = res.ambient();
  const bool nested = amb.ambient_dim() == x.ambient_dim() && amb.codimension() + 1 == x.codimension() &&
                      std::includes(x.degrees().begin(), x.degrees().end(), amb.degrees().begin(),
                                    amb.degrees().end());
  if (!nested) {
    report.detail = "resolution ambient " + amb.name() + " is not a fourfold containing " + x.name();
    return report;
  }
  try {
    report.from_resolution = curve_invariants_from_resolution(res);
  } catch (const Error& e) {
    report.detail = e.what();
    return report;
  }
  try {
    report.expected = subcanonical_invariants(c1, c2, x.canonical_twist());
  } catch (const Error& e) {
    report.detail = e.what();
    return report;
  }
  report.consistent = *report.from_resolution == *report.expected;
  std::ostringstream os;
  os << "resolution gives (degree " << report.from_resolution->degree << ", genus " << report.from_resolution->genus
     << "); bundle (c1=" << c1 << ", c2=" << c2 << ") predicts (degree " << report.expected->degree << ", genus "
     << report.expected->genus << ")";
  report.detail = os.str();
  return report;
}

inline SerreReport check_serre_consistency(const FreeResolution& res, const Cicy& x, int c1, int c2) {
  return check_serre_consistency(res, x.base(), c1, c2);
}

}  // namespace cicy
