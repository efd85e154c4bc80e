#pragma once

// Golden-file fixtures and the checks that regenerate them.
//
// Layout of a fixture directory:
//   resolutions/<group>/<name>.json   curve (and bundle) resolutions
//   theorem1.json                     transcribed classification tables
//   chi_checks.json                   chi and h^0 spot values
//   restrictions.json                 restriction constructions
//   interchange/*.json                bundle resolutions used as inputs

#include "cicy/classify.hpp"
#include "cicy/core_model.hpp"
#include "cicy/grr.hpp"
#include "cicy/hilbert.hpp"
#include "cicy/interchange.hpp"
#include "cicy/resolutions.hpp"

#include <algorithm>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace cicy {

#ifdef CICY_ACM_FIXTURE_DIR
inline constexpr const char* kDefaultFixtureDir = CICY_ACM_FIXTURE_DIR;
#else
inline constexpr const char* kDefaultFixtureDir = "fixtures";
#endif

inline const std::vector<std::string>& resolution_fixture_groups() {
  static const std::vector<std::string> groups{"quintic", "x8", "x9", "x12", "quartic"};
  return groups;
}

inline const std::vector<std::string>& fixture_groups() {
  static const std::vector<std::string> groups{"quintic", "x8",      "x9",  "x12",
                                               "quartic", "theorem1", "chi", "restriction"};
  return groups;
}

struct ResolutionFixture {
  std::string name;
  std::string group;
  std::string path;
  std::vector<int> threefold;
  int hypersurface = 0;
  int c1 = 0;
  int c2 = 0;
  std::vector<int> generators;
  FreeResolution curve;
  std::optional<FreeResolution> bundle;
  bool applicable = false;

  CompleteIntersection fourfold() const {
    return CompleteIntersection::threefold(threefold).without_degree(hypersurface);
  }
};

inline ResolutionFixture resolution_fixture_from_json(const Json& j, const std::string& path) {
  const std::string where = path;
  auto field = [&](const char* key) -> const Json& { return detail::require_field(j, key, where); };
  auto str = [&](const char* key) {
    const Json& v = field(key);
    if (!v.is_string()) throw ParseError(where + ": field '" + key + "' must be a string");
    return v.get<std::string>();
  };
  const Json& applicable = field("applicable");
  if (!applicable.is_boolean()) throw ParseError(where + ": field 'applicable' must be a boolean");
  std::optional<FreeResolution> bundle;
  if (j.contains("bundle")) bundle = resolution_from_json(j.at("bundle"));
  return ResolutionFixture{str("name"),
                           str("group"),
                           path,
                           detail::require_int_list(field("threefold"), where + ".threefold"),
                           detail::require_int(field("hypersurface"), where + ".hypersurface"),
                           detail::require_int(field("c1"), where + ".c1"),
                           detail::require_int(field("c2"), where + ".c2"),
                           detail::require_int_list(field("generators"), where + ".generators"),
                           resolution_from_json(field("curve")),
                           std::move(bundle),
                           applicable.get<bool>()};
}

inline Json to_json(const ResolutionFixture& f) {
  Json j{{"schema", kSchemaVersion},
         {"name", f.name},
         {"group", f.group},
         {"threefold", f.threefold},
         {"hypersurface", f.hypersurface},
         {"c1", f.c1},
         {"c2", f.c2},
         {"generators", f.generators},
         {"applicable", f.applicable},
         {"curve", to_json(f.curve)}};
  if (f.bundle) j["bundle"] = to_json(*f.bundle);
  return j;
}

/// One pass/fail line of a verification run.
struct FixtureCheck {
  std::string group;
  std::string fixture;
  std::string check;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<std::string> groups;
  std::vector<FixtureCheck> checks;

  bool all_passed() const {
    return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
  }
  bool group_passed(const std::string& g) const {
    bool any = false;
    for (const auto& c : checks) {
      if (c.group != g) continue;
      any = true;
      if (!c.passed) return false;
    }
    return any;
  }
};

namespace detail {

// Runs `body`; any library or parse error becomes a failed check.
inline FixtureCheck run_check(const std::string& group, const std::string& fixture, const std::string& check,
                              const std::function<std::pair<bool, std::string>()>& body) {
  FixtureCheck c{group, fixture, check, false, ""};
  try {
    auto [ok, detail] = body();
    c.passed = ok;
    c.detail = std::move(detail);
  } catch (const std::exception& e) {
    c.detail = e.what();
  }
  return c;
}

inline std::string expected_got(const std::string& expected, const std::string& got) {
  return "expected " + expected + ", got " + got;
}

inline std::vector<std::filesystem::path> sorted_json_files(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  if (!std::filesystem::is_directory(dir)) return files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  return files;
}

}  // namespace detail

/// Regenerates a resolution fixture from its generator degrees and compares
/// every stored resolution and invariant.
inline std::vector<FixtureCheck> check_resolution_fixture(const ResolutionFixture& f) {
  std::vector<FixtureCheck> out;
  const std::string& g = f.group;
  const std::string& n = f.name;
  const CompleteIntersection y = f.fourfold();

  out.push_back(detail::run_check(g, n, "curve", [&] {
    const auto built = ag_curve_resolution(f.generators, y);
    return std::pair{built == f.curve, detail::expected_got(f.curve.to_string(), built.to_string())};
  }));
  out.push_back(detail::run_check(g, n, "applicable", [&] {
    const bool got = theorem_applicable(f.generators, f.hypersurface, f.c1);
    return std::pair{got == f.applicable, detail::expected_got(f.applicable ? "true" : "false", got ? "true" : "false")};
  }));
  if (f.bundle) {
    out.push_back(detail::run_check(g, n, "bundle", [&] {
      const auto built = bundle_resolution(f.generators, f.hypersurface, y);
      const bool ok = built.resolution == *f.bundle && built.c1 == f.c1;
      return std::pair{ok, detail::expected_got(f.bundle->to_string() + " with c1=" + std::to_string(f.c1),
                                                built.resolution.to_string() + " with c1=" + std::to_string(built.c1))};
    }));
    out.push_back(detail::run_check(g, n, "rank", [&] {
      const int rank = sheaf_rank_on_hypersurface(*f.bundle, f.hypersurface);
      return std::pair{rank == 2, detail::expected_got("rank 2", "rank " + std::to_string(rank))};
    }));
    if (g == "quintic" && f.applicable) {
      out.push_back(detail::run_check(g, n, "quintic_inverse", [&] {
        const auto built = curve_resolution_from_bundle_quintic(f.c1, f.bundle->term(0));
        return std::pair{built == f.curve, detail::expected_got(f.curve.to_string(), built.to_string())};
      }));
    }
  }
  out.push_back(detail::run_check(g, n, "serre", [&] {
    const auto report = check_serre_consistency(f.curve, CompleteIntersection::threefold(f.threefold), f.c1, f.c2);
    return std::pair{report.consistent, report.detail};
  }));
  return out;
}

inline std::vector<ResolutionFixture> load_resolution_fixtures(const std::filesystem::path& dir,
                                                               const std::string& group) {
  std::vector<ResolutionFixture> out;
  for (const auto& p : detail::sorted_json_files(dir / "resolutions" / group)) {
    out.push_back(resolution_fixture_from_json(read_json_file(p.string()), p.string()));
  }
  return out;
}

/// Transcribed classification rows for one CICY type.
struct Theorem1Fixture {
  std::vector<int> type;
  std::vector<Theorem1Row> rows;
};

inline std::vector<Theorem1Fixture> theorem1_fixtures_from_json(const Json& j, const std::string& where) {
  std::vector<Theorem1Fixture> out;
  const Json& tables = detail::require_field(j, "tables", where);
  if (!tables.is_array()) throw ParseError(where + ": 'tables' must be a list");
  for (const auto& t : tables) {
    Theorem1Fixture f{detail::require_int_list(detail::require_field(t, "type", where), where + ".type"), {}};
    for (const auto& row : detail::require_field(t, "rows", where)) {
      Theorem1Row r;
      r.c1 = detail::require_int(detail::require_field(row, "c1", where), where + ".c1");
      const Json& lower = detail::require_field(row, "lower", where);
      if (!lower.is_null()) r.c2.lower = detail::require_int(lower, where + ".lower");
      r.c2.upper = detail::require_int(detail::require_field(row, "upper", where), where + ".upper");
      const Json& even = detail::require_field(row, "even_only", where);
      if (!even.is_boolean()) throw ParseError(where + ": 'even_only' must be a boolean");
      r.c2.even_only = even.get<bool>();
      r.c2.lower_source = "table";
      f.rows.push_back(std::move(r));
    }
    out.push_back(std::move(f));
  }
  return out;
}

inline std::vector<FixtureCheck> check_theorem1_fixture(const std::filesystem::path& file) {
  std::vector<FixtureCheck> out;
  const std::string name = file.filename().string();
  std::vector<Theorem1Fixture> tables;
  out.push_back(detail::run_check("theorem1", name, "parse", [&] {
    tables = theorem1_fixtures_from_json(read_json_file(file.string()), file.string());
    return std::pair{tables.size() == cicy_catalog().size(),
                     std::to_string(tables.size()) + " tables for " + std::to_string(cicy_catalog().size()) + " CICYs"};
  }));
  for (const auto& t : tables) {
    out.push_back(detail::run_check("theorem1", name, "type " + detail::join(t.type), [&] {
      const Cicy x = make_cicy(t.type);
      const auto report = verify_against_theorem1(x, t.rows);
      std::string detail;
      for (const auto& row : report.rows) {
        if (!row.agree) {
          detail += "c1=" + std::to_string(row.c1) + ": computed " + row.computed + ", stored " + row.stored + "; ";
        }
      }
      return std::pair{report.all_agree, detail.empty() ? x.name() + " agrees" : detail};
    }));
  }
  return out;
}

inline std::vector<FixtureCheck> check_chi_fixture(const std::filesystem::path& file) {
  std::vector<FixtureCheck> out;
  const std::string name = file.filename().string();
  Json doc;
  out.push_back(detail::run_check("chi", name, "parse", [&] {
    doc = read_json_file(file.string());
    const Json& checks = detail::require_field(doc, "checks", name);
    return std::pair{checks.is_array() && !checks.empty(), std::string("checks list")};
  }));
  if (!out.back().passed) return out;
  for (const auto& c : doc.at("checks")) {
    std::string label = c.contains("name") && c.at("name").is_string() ? c.at("name").get<std::string>() : "?";
    out.push_back(detail::run_check("chi", name, label, [&] {
      const Cicy x = make_cicy(detail::require_int_list(detail::require_field(c, "type", label), label));
      const int c1 = detail::require_int(detail::require_field(c, "c1", label), label);
      const int c2 = detail::require_int(detail::require_field(c, "c2", label), label);
      const int n = detail::require_int(detail::require_field(c, "twist", label), label);
      const Json& q = detail::require_field(c, "quantity", label);
      const Integer expected = detail::require_field(c, "value", label).get<long long>();
      std::optional<Integer> got;
      if (q == "chi") {
        got = chi_twisted(x, c1, c2, n);
      } else if (q == "h0") {
        got = acm_h0(x, c1, c2, n);
      } else if (q == "ideal_h0") {
        got = ideal_h0(x, c1, c2, n);
      } else {
        throw ParseError(label + ": unknown quantity " + q.dump());
      }
      return std::pair{got && *got == expected,
                       detail::expected_got(to_string(expected), got ? to_string(*got) : "undetermined")};
    }));
  }
  return out;
}

inline std::vector<FixtureCheck> check_restriction_fixture(const std::filesystem::path& file) {
  std::vector<FixtureCheck> out;
  const std::string name = file.filename().string();
  Json doc;
  out.push_back(detail::run_check("restriction", name, "parse", [&] {
    doc = read_json_file(file.string());
    const Json& list = detail::require_field(doc, "restrictions", name);
    return std::pair{list.is_array() && !list.empty(), std::string("restrictions list")};
  }));
  if (!out.back().passed) return out;
  for (const auto& c : doc.at("restrictions")) {
    std::string label = c.contains("name") && c.at("name").is_string() ? c.at("name").get<std::string>() : "?";
    out.push_back(detail::run_check("restriction", name, label, [&] {
      const Json& source = detail::require_field(c, "source", label);
      if (!source.is_string()) throw ParseError(label + ": 'source' must be a path");
      const auto res = read_resolution_file((file.parent_path() / source.get<std::string>()).string());
      const Cicy x = make_cicy(detail::require_int_list(detail::require_field(c, "type", label), label));
      const int d = detail::require_int(detail::require_field(c, "hypersurface", label), label);
      const int rank = detail::require_int(detail::require_field(c, "rank", label), label);
      const auto result = restrict_construction(res, d, x);
      bool ok = result.new_rank == rank;
      std::string got = "rank " + std::to_string(result.new_rank);
      std::string expected = "rank " + std::to_string(rank);
      if (c.contains("c1") || c.contains("c2")) {
        const int c1 = detail::require_int(detail::require_field(c, "c1", label), label);
        const int c2 = detail::require_int(detail::require_field(c, "c2", label), label);
        expected += " (" + std::to_string(c1) + "," + std::to_string(c2) + ")";
        if (result.inferred_chern) {
          got += " (" + std::to_string(result.inferred_chern->first) + "," +
                 std::to_string(result.inferred_chern->second) + ")";
        }
        ok = ok && result.inferred_chern == std::pair{c1, c2};
      }
      if (c.contains("shift")) {
        const int s = detail::require_int(c.at("shift"), label);
        expected += " shift " + std::to_string(s);
        got += " shift " + std::to_string(result.normalization_shift);
        ok = ok && result.normalization_shift == s;
      }
      return std::pair{ok, detail::expected_got(expected, got)};
    }));
  }
  return out;
}

/// Runs every fixture check in `dir`, or only those of `only_group`.
inline VerifyReport run_verification(const std::filesystem::path& dir, const std::optional<std::string>& only_group = {}) {
  if (only_group &&
      std::find(fixture_groups().begin(), fixture_groups().end(), *only_group) == fixture_groups().end()) {
    throw InvalidArgument("unknown fixture group '" + *only_group + "'");
  }
  VerifyReport report;
  auto missing = [&](const std::string& group, const std::filesystem::path& where) {
    report.checks.push_back({group, where.string(), "present", false, "no fixtures found"});
  };
  for (const auto& group : fixture_groups()) {
    if (only_group && *only_group != group) continue;
    report.groups.push_back(group);
    const auto before = report.checks.size();
    if (group == "theorem1" || group == "chi" || group == "restriction") {
      const auto file = dir / (group == "theorem1" ? "theorem1.json"
                               : group == "chi"    ? "chi_checks.json"
                                                   : "restrictions.json");
      if (!std::filesystem::exists(file)) {
        missing(group, file);
        continue;
      }
      auto checks = group == "theorem1" ? check_theorem1_fixture(file)
                    : group == "chi"    ? check_chi_fixture(file)
                                        : check_restriction_fixture(file);
      report.checks.insert(report.checks.end(), checks.begin(), checks.end());
      continue;
    }
    for (const auto& p : detail::sorted_json_files(dir / "resolutions" / group)) {
      const std::string stem = p.stem().string();
      std::optional<ResolutionFixture> f;
      report.checks.push_back(detail::run_check(group, stem, "parse", [&] {
        f = resolution_fixture_from_json(read_json_file(p.string()), p.string());
        return std::pair{f->group == group && f->name == stem, "fixture '" + f->name + "' in group '" + f->group + "'"};
      }));
      if (!f) continue;
      auto checks = check_resolution_fixture(*f);
      for (auto& c : checks) c.fixture = stem;
      report.checks.insert(report.checks.end(), checks.begin(), checks.end());
    }
    if (report.checks.size() == before) missing(group, dir / "resolutions" / group);
  }
  return report;
}

}  // namespace cicy
