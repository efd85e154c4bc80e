#pragma once

// Admissible Chern classes of normalized indecomposable rank-2 ACM bundles on
// each CICY threefold, re-derived from Riemann-Roch and Serre duality on top of
// line bundle cohomology, with existence metadata and a comparison against the
// stored reference table.

#include "cicy/cohomology.hpp"
#include "cicy/core_model.hpp"
#include "cicy/grr.hpp"

#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace cicy {

/// Allowed c2 values: [lower, upper], optionally only even values. A missing
/// lower bound means none is derivable.
struct C2Range {
  std::optional<int> lower;
  int upper = 0;
  bool even_only = false;
  /// Where the lower bound comes from ("computed", or a named rule).
  std::string lower_source = "computed";

  bool contains(int c2) const {
    if (c2 < 1 || c2 > upper) return false;
    if (lower && c2 < *lower) return false;
    return !even_only || c2 % 2 == 0;
  }

  /// Enumerates the range ascending; empty when the lower end is unknown.
  std::vector<int> values() const {
    std::vector<int> out;
    if (!lower) return out;
    for (int v = *lower; v <= upper; ++v) {
      if (contains(v)) out.push_back(v);
    }
    return out;
  }

  bool is_single() const { return lower && *lower == upper; }

  std::string to_string() const {
    if (is_single()) return std::to_string(upper);
    std::string s = lower ? std::to_string(*lower) + " <= c2 <= " + std::to_string(upper)
                          : "c2 <= " + std::to_string(upper);
    if (even_only) s += ", even";
    return s;
  }
};

struct TraceStep {
  /// "module.operation" that produced the value.
  std::string op;
  std::string detail;
};

enum class ExistenceStatus { proven, proven_external, excepted, open };

inline std::string_view to_string(ExistenceStatus s) {
  switch (s) {
    case ExistenceStatus::proven: return "proven";
    case ExistenceStatus::proven_external: return "proven (external)";
    case ExistenceStatus::excepted: return "excepted";
    case ExistenceStatus::open: return "open";
  }
  return "open";
}

struct Existence {
  ExistenceStatus status = ExistenceStatus::open;
  std::string note;
};

enum class ExistenceKind { proven, proven_except, open };

inline std::string_view to_string(ExistenceKind k) {
  switch (k) {
    case ExistenceKind::proven: return "proven";
    case ExistenceKind::proven_except: return "proven_except";
    case ExistenceKind::open: return "open";
  }
  return "open";
}

struct ExistenceSummary {
  ExistenceKind kind = ExistenceKind::open;
  /// c2 values without an existence proof when kind is proven_except.
  std::vector<int> exceptions;
  std::string note;
};

struct ClassificationEntry {
  int c1 = 0;
  C2Range c2;
  std::vector<TraceStep> derivation;
  /// Named geometric bounds used in addition to the computation.
  std::vector<std::string> rules;
  ExistenceSummary existence;
};

/// Normalized rank-2 ACM bundles outside this c1 range split.
constexpr std::pair<int, int> splitting_range() noexcept { return {-2, 4}; }

constexpr bool in_splitting_range(int c1) noexcept {
  return c1 >= splitting_range().first && c1 <= splitting_range().second;
}

namespace detail {

// Solves chi(E(n)) = target for c2 with c1 fixed; chi is affine in c2.
inline std::optional<int> solve_c2(const Cicy& x, int c1, int n, const Integer& target) {
  const Rational at0 = chi_twisted_rational(x, c1, 0, n);
  const Rational slope = chi_twisted_rational(x, c1, 1, n) - at0;
  if (slope == 0) return std::nullopt;
  const Rational c2 = (Rational(target) - at0) / slope;
  if (!is_integral(c2)) return std::nullopt;
  const int v = narrow<int>(boost::multiprecision::numerator(c2));
  if (!detail::try_chi_twisted(x, c1, v, n)) return std::nullopt;
  return v;
}

inline std::string chi_label(int c1, int n) {
  std::string e = n == 0 ? "E" : "E(" + std::to_string(n) + ")";
  return "chi(" + e + ") [c1=" + std::to_string(c1) + "]";
}

inline int require_solution(const Cicy& x, int c1, int n, const Integer& target, std::vector<TraceStep>& trace) {
  auto c2 = solve_c2(x, c1, n, target);
  if (!c2) {
    throw InvalidArgument("no integral c2 solves " + chi_label(c1, n) + " = " + to_string(target) + " on " +
                          x.name());
  }
  trace.push_back({"grr.chi_twisted", "solve " + chi_label(c1, n) + " = " + to_string(target) + " -> c2 = " +
                                          std::to_string(*c2)});
  return *c2;
}

}  // namespace detail

/// Existence of a bundle (c1, c2) on a general X; metadata, never computed.
inline Existence existence_of(const Cicy& x, int c1, int c2) {
  if (x.r() == 16 && c1 == 0 && c2 == 3) {
    return {ExistenceStatus::excepted, "no smooth elliptic cubic is known on a general X_16"};
  }
  if (c1 >= -2 && c1 <= 0) {
    return {ExistenceStatus::proven, "lines, conics and smooth elliptic curves on a general " + x.name()};
  }
  const bool canonical = (c1 == 1) && (((x.r() == 8 || x.r() == 9) && (c2 == 6 || c2 == 10)) ||
                                       (x.r() == 12 && (c2 == 8 || c2 == 12)));
  if (canonical) {
    return {ExistenceStatus::proven, c2 == 10 || c2 == 12 ? "smooth canonical curves"
                                                          : "restriction of a bundle resolution to " + x.name()};
  }
  if (x.r() == 5) return {ExistenceStatus::proven_external, "prior classification on the general quintic"};
  return {ExistenceStatus::open, ""};
}

namespace detail {

inline ExistenceSummary summarize_existence(const Cicy& x, int c1, const C2Range& range) {
  ExistenceSummary s;
  const auto values = range.values();
  if (values.empty()) {
    // Unknown lower end: only the quintic has all of its values settled.
    s.kind = x.r() == 5 ? ExistenceKind::proven : ExistenceKind::open;
    s.note = x.r() == 5 ? std::string(to_string(ExistenceStatus::proven_external)) : "";
    return s;
  }
  std::vector<int> missing;
  bool external = false;
  for (int c2 : values) {
    const auto e = existence_of(x, c1, c2);
    if (e.status == ExistenceStatus::open || e.status == ExistenceStatus::excepted) missing.push_back(c2);
    if (e.status == ExistenceStatus::proven_external) external = true;
  }
  if (missing.size() == values.size()) {
    s.kind = ExistenceKind::open;
  } else if (missing.empty()) {
    s.kind = ExistenceKind::proven;
  } else {
    s.kind = ExistenceKind::proven_except;
    s.exceptions = missing;
  }
  if (external) s.note = std::string(to_string(ExistenceStatus::proven_external));
  return s;
}

}  // namespace detail

/// Re-derives, for c1 = -2..4, the c2 values a normalized indecomposable
/// rank-2 ACM bundle on x can have. Each entry carries the chain of h^0 and
/// chi evaluations that produced it.
inline std::vector<ClassificationEntry> admissible_chern(const Cicy& x) {
  const CompleteIntersection& v = x.base();
  std::vector<ClassificationEntry> out;

  auto h0_line = [&](int n, std::vector<TraceStep>& trace) {
    Integer h = hilbert_function_ci(v, n);
    trace.push_back({"cohomology.hilbert_function_ci", "h0(O_X(" + std::to_string(n) + ")) = " + to_string(h)});
    return h;
  };

  // c1 = -2, -1: h0(E) = 1 and h3(E) = h0(E(-c1)) = h0(O_X(-c1)), so
  // chi(E) = 1 - h0(O_X(-c1)).
  for (int c1 : {-2, -1}) {
    ClassificationEntry e{c1, {}, {}, {}, {}};
    const Integer h3 = h0_line(-c1, e.derivation);
    const Integer chi = 1 - h3;
    e.derivation.push_back({"grr.acm_h0", "h0(E) = 1, h3(E) = h0(E(" + std::to_string(-c1) + ")) = " +
                                              to_string(h3) + ", chi(E) = " + to_string(chi)});
    const int c2 = detail::require_solution(x, c1, 0, chi, e.derivation);
    e.c2 = {c2, c2, false, "computed"};
    out.push_back(std::move(e));
  }

  // c1 = 0: chi(E(1)) = h0(E(1)) = h0(O_X(1)) + h0(I_C(1)).
  {
    ClassificationEntry e{0, {}, {}, {}, {}};
    const Integer h1 = h0_line(1, e.derivation);
    e.derivation.push_back({"grr.acm_h0", "h3(E(1)) = h0(E(-1)) = 0, chi(E(1)) = " + to_string(h1) +
                                              " + h0(I_C(1))"});
    const int upper = detail::require_solution(x, 0, 1, h1, e.derivation);
    const int step = detail::require_solution(x, 0, 1, h1 + 1, e.derivation) - upper;
    e.c2 = {3, upper, step == -2, "rule: an elliptic curve has degree >= 3"};
    e.rules.push_back("genus-one curves have degree >= 3, so h0(I_C(1)) <= c2_max - 3");
    out.push_back(std::move(e));
  }

  // c1 = 1, 2: h3(E) = h0(E(-c1)) = 0, so chi(E) = h0(E) = 1 + h0(I_C(c1)).
  for (int c1 : {1, 2}) {
    ClassificationEntry e{c1, {}, {}, {}, {}};
    e.derivation.push_back({"grr.acm_h0", "h3(E) = h0(E(" + std::to_string(-c1) + ")) = 0, chi(E) = 1 + h0(I_C(" +
                                              std::to_string(c1) + "))"});
    const int upper = detail::require_solution(x, c1, 0, 1, e.derivation);
    const int step = detail::require_solution(x, c1, 0, 2, e.derivation) - upper;
    e.c2.upper = upper;
    e.c2.even_only = (step == -2) && upper % 2 == 0;
    if (c1 == 1) {
      e.c2.lower = 4;
      e.c2.lower_source = "rule: a canonical curve here has degree >= 4";
      e.rules.push_back("canonical curves have degree >= 4");
    } else if (x.r() == 5) {
      e.c2.lower = 11;
      e.c2.lower_source = "external: quintic classification gives c2 >= 11";
      e.rules.push_back("quintic lower bound c2 >= 11 from the prior classification");
    } else {
      e.c2.lower_source = "lower bound unknown";
    }
    out.push_back(std::move(e));
  }

  // c1 = 3, 4: h0(E(-1)) = 0 and h3(E(-1)) = h0(E(1-c1)) = 0, so chi(E(-1)) = 0.
  for (int c1 : {3, 4}) {
    ClassificationEntry e{c1, {}, {}, {}, {}};
    e.derivation.push_back({"grr.acm_h0", "h0(E(-1)) = 0, h3(E(-1)) = h0(E(" + std::to_string(1 - c1) +
                                              ")) = 0, chi(E(-1)) = 0"});
    const int c2 = detail::require_solution(x, c1, -1, 0, e.derivation);
    e.c2 = {c2, c2, false, "computed"};
    out.push_back(std::move(e));
  }

  for (auto& e : out) e.existence = detail::summarize_existence(x, e.c1, e.c2);
  return out;
}

/// Every finitely enumerable (c1, c2) with its existence status.
inline std::map<std::pair<int, int>, Existence> existence_annotations(const Cicy& x) {
  std::map<std::pair<int, int>, Existence> out;
  for (const auto& e : admissible_chern(x)) {
    for (int c2 : e.c2.values()) out[{e.c1, c2}] = existence_of(x, e.c1, c2);
  }
  return out;
}

/// A row of the reference classification; a missing lower bound means the
/// table states none.
struct Theorem1Row {
  int c1 = 0;
  C2Range c2;
};

/// The reference table for X_r with k = floor(r/4).
inline std::vector<Theorem1Row> theorem1_table(const Cicy& x) {
  const int r = x.r();
  const int k = x.k();
  static const std::map<int, int> c1_four{{5, 30}, {8, 44}, {9, 48}, {12, 62}, {16, 80}};
  return {
      {-2, {1, 1, false, "table"}},
      {-1, {2, 2, false, "table"}},
      {0, {3, 4 + k, false, "table"}},
      {1, {4, 6 + 2 * k, true, "table"}},
      {2, {std::nullopt, 7 + 2 * k + r, false, "table"}},
      {3, {8 + 2 * k + 2 * r, 8 + 2 * k + 2 * r, false, "table"}},
      {4, {c1_four.at(r), c1_four.at(r), false, "table"}},
  };
}

struct Theorem1Comparison {
  int c1 = 0;
  std::string computed;
  std::string stored;
  bool agree = false;
};

struct Theorem1Report {
  std::string cicy;
  std::vector<Theorem1Comparison> rows;
  bool all_agree = false;
};

inline Theorem1Report verify_against_theorem1(const Cicy& x, const std::vector<Theorem1Row>& table) {
  Theorem1Report report{x.name(), {}, true};
  const auto computed = admissible_chern(x);
  for (const auto& row : table) {
    Theorem1Comparison cmp{row.c1, "(missing)", row.c2.to_string(), false};
    for (const auto& e : computed) {
      if (e.c1 != row.c1) continue;
      cmp.computed = e.c2.to_string();
      cmp.agree = e.c2.upper == row.c2.upper && e.c2.even_only == row.c2.even_only &&
                  (!row.c2.lower || e.c2.lower == row.c2.lower);
    }
    report.all_agree = report.all_agree && cmp.agree;
    report.rows.push_back(std::move(cmp));
  }
  if (table.size() != computed.size()) report.all_agree = false;
  return report;
}

inline Theorem1Report verify_against_theorem1(const Cicy& x) { return verify_against_theorem1(x, theorem1_table(x)); }

/// Aligned plain-text table of the classification.
inline std::string format_classification(const Cicy& x, const std::vector<ClassificationEntry>& entries,
                                         bool with_trace = true) {
  std::ostringstream os;
  os << x.name() << " = " << x.base().name() << "  (r=" << x.r() << ", k=" << x.k() << ")\n";
  os << std::left << std::setw(5) << "c1" << std::setw(34) << "c2" << "existence\n";
  for (const auto& e : entries) {
    std::string ex(to_string(e.existence.kind));
    if (!e.existence.exceptions.empty()) {
      ex += " {";
      for (std::size_t i = 0; i < e.existence.exceptions.size(); ++i) {
        ex += (i ? "," : "") + std::to_string(e.existence.exceptions[i]);
      }
      ex += "}";
    }
    if (!e.existence.note.empty()) ex += " [" + e.existence.note + "]";
    std::string c2 = e.c2.to_string();
    if (!e.c2.lower && !e.c2.is_single()) c2 += " (lower bound unknown)";
    os << std::left << std::setw(5) << e.c1 << std::setw(34) << c2 << ex << "\n";
    if (with_trace) {
      for (const auto& step : e.derivation) os << "       " << step.op << ": " << step.detail << "\n";
      for (const auto& rule : e.rules) os << "       rule: " << rule << "\n";
    }
  }
  return os.str();
}

}  // namespace cicy
