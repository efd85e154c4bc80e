// cicy-acm: command-line front end to the cicy library.
//
// Exit codes: 0 success, 1 domain error, 2 usage error.

#include "cicy/cicy.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <optional>
#include <regex>
#include <string>
#include <vector>

namespace {

using cicy::Json;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TwistRange {
  int lo = 0;
  int hi = 0;
};

// "a..b" or a single integer.
TwistRange parse_twists(const std::string& text) {
  static const std::regex range(R"(\s*(-?\d+)\s*(?:\.\.\s*(-?\d+)\s*)?)");
  std::smatch m;
  if (!std::regex_match(text, m, range)) throw UsageError("--twists expects a..b or an integer, got '" + text + "'");
  TwistRange r{std::stoi(m[1]), m[2].matched ? std::stoi(m[2]) : std::stoi(m[1])};
  if (r.lo > r.hi) throw UsageError("--twists range is empty: " + text);
  return r;
}

Json integer_json(const cicy::Integer& v) {
  try {
    return cicy::narrow<long long>(v);
  } catch (const std::overflow_error&) {
    return cicy::to_string(v);
  }
}

Json optional_json(const std::optional<cicy::Integer>& v) { return v ? integer_json(*v) : Json(nullptr); }

std::string optional_text(const std::optional<cicy::Integer>& v) { return v ? cicy::to_string(*v) : "?"; }

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

struct Options {
  std::vector<int> type;
  std::string format = "text";
  int c1 = 0;
  int c2 = 0;
  std::string twists = "0";
  std::vector<int> gens;
  std::optional<int> hypersurface;
  std::string emit;
  bool raw = false;
  std::string file;
  std::optional<std::string> group;
  std::string fixtures = cicy::kDefaultFixtureDir;
  bool verbose = false;
};

int cmd_classify(const Options& o) {
  const cicy::Cicy x = cicy::make_cicy(o.type);
  const auto entries = cicy::admissible_chern(x);
  if (o.format == "json") {
    print_json(cicy::classification_to_json(x, entries));
  } else {
    std::cout << cicy::format_classification(x, entries);
  }
  return kExitOk;
}

int cmd_chi(const Options& o) {
  const cicy::Cicy x = cicy::make_cicy(o.type);
  const TwistRange tw = parse_twists(o.twists);
  Json rows = Json::array();
  std::string text = x.name() + "  c1=" + std::to_string(o.c1) + " c2=" + std::to_string(o.c2) + "\n" +
                     "n\tchi(E(n))\th0(E(n))\th3(E(n))\n";
  for (int n = tw.lo; n <= tw.hi; ++n) {
    const cicy::Integer chi = cicy::chi_twisted(x, o.c1, o.c2, n);
    const auto table = cicy::bundle_cohomology(x, o.c1, o.c2, n);
    rows.push_back(Json{{"twist", n}, {"chi", integer_json(chi)}, {"h0", optional_json(table.h(0))},
                        {"h3", optional_json(table.h(3))}});
    text += std::to_string(n) + "\t" + cicy::to_string(chi) + "\t" + optional_text(table.h(0)) + "\t" +
            optional_text(table.h(3)) + "\n";
  }
  if (o.format == "json") {
    print_json(Json{{"schema", cicy::kSchemaVersion}, {"cicy", x.name()}, {"c1", o.c1}, {"c2", o.c2}, {"rows", rows}});
  } else {
    std::cout << text;
  }
  return kExitOk;
}

// The fourfold Y: the threefold of --type (default: the hypersurface of
// degree --hypersurface in P^4) with the degree-d equation removed, or P^4.
cicy::CompleteIntersection fourfold(const Options& o) {
  if (!o.hypersurface) {
    if (!o.type.empty()) throw UsageError("--type needs --hypersurface to pick the fourfold");
    return cicy::CompleteIntersection::projective_space(4);
  }
  const auto x = cicy::CompleteIntersection::threefold(o.type.empty() ? std::vector<int>{*o.hypersurface} : o.type);
  if (!x.contains_degree(*o.hypersurface)) {
    throw cicy::InvalidArgument(x.name() + " has no equation of degree " + std::to_string(*o.hypersurface));
  }
  return x.without_degree(*o.hypersurface);
}

void emit_resolution(const Options& o, const cicy::FreeResolution& res, Json extra) {
  if (!o.emit.empty()) cicy::write_json_file(o.emit, cicy::to_json(res));
  if (o.format == "json") {
    Json doc = cicy::to_json(res);
    for (auto& [k, v] : extra.items()) doc[k] = v;
    print_json(doc);
  }
}

int cmd_resolve_curve(const Options& o) {
  const auto y = fourfold(o);
  const auto data = cicy::AGCurveData::from_generators(o.gens);
  const auto res = cicy::ag_curve_resolution(data, y);
  const auto inv = cicy::curve_invariants_from_resolution(res);
  const auto matrix = cicy::degree_matrix(data);
  emit_resolution(o, res, Json{{"socle", data.socle()}, {"degree", inv.degree}, {"genus", inv.genus},
                               {"degree_matrix", matrix.entries}});
  if (o.format != "json") {
    std::cout << "curve in " << y.name() << ", b=" << data.b() << ", c=" << data.socle() << "\n"
              << res.to_string() << "\n"
              << "degree " << inv.degree << ", arithmetic genus " << inv.genus << "\n"
              << "degree matrix:\n"
              << matrix.display(o.raw) << "minimality: " << cicy::to_string(cicy::minimality_check(res)) << "\n";
  }
  return kExitOk;
}

int cmd_resolve_bundle(const Options& o) {
  cicy::AGCurveData::from_generators(o.gens);
  if (!o.hypersurface) throw UsageError("resolve bundle needs --hypersurface");
  const auto y = fourfold(o);
  const auto b = cicy::bundle_resolution(o.gens, *o.hypersurface, y);
  emit_resolution(o, b.resolution, Json{{"c1", b.c1}, {"socle", b.socle}, {"hypersurface", b.hypersurface_degree}});
  if (o.format != "json") {
    std::cout << "bundle on the degree-" << *o.hypersurface << " section of " << y.name() << ", c=" << b.socle
              << ", c1=" << b.c1 << "\n"
              << b.resolution.to_string() << "\n"
              << "minimality: " << cicy::to_string(cicy::minimality_check(b.resolution)) << "\n";
  }
  return kExitOk;
}

int cmd_resolve_from_bundle(const Options& o) {
  const auto res = cicy::curve_resolution_from_bundle_quintic(o.c1, o.gens);
  const auto inv = cicy::curve_invariants_from_resolution(res);
  emit_resolution(o, res, Json{{"c1", o.c1}, {"degree", inv.degree}, {"genus", inv.genus}});
  if (o.format != "json") {
    std::cout << "curve of a bundle on the quintic with c1=" << o.c1 << "\n"
              << res.to_string() << "\n"
              << "degree " << inv.degree << ", arithmetic genus " << inv.genus << "\n";
  }
  return kExitOk;
}

int cmd_restrict(const Options& o) {
  if (!o.hypersurface) throw UsageError("restrict needs --hypersurface");
  const auto res = cicy::read_resolution_file(o.file);
  const cicy::Cicy x = cicy::make_cicy(o.type);
  const auto r = cicy::restrict_construction(res, *o.hypersurface, x);
  Json doc{{"schema", cicy::kSchemaVersion},
           {"cicy", x.name()},
           {"source_chern", {r.source_chern.first, r.source_chern.second}},
           {"split_kernel", cicy::to_json(r.split_kernel)},
           {"new_rank", r.new_rank},
           {"normalization_shift", r.normalization_shift}};
  doc["inferred_chern"] = r.inferred_chern ? Json{r.inferred_chern->first, r.inferred_chern->second} : Json(nullptr);
  if (!r.candidate_structures.empty()) doc["candidate_structures"] = r.candidate_structures;
  if (o.format == "json") {
    print_json(doc);
    return kExitOk;
  }
  std::cout << "E on " << x.name() << ": c1=" << r.source_chern.first << ", c2=" << r.source_chern.second << "\n"
            << "0 -> E(" << r.four_term.kernel_twist << ") -> " << r.four_term.syzygies.to_string("O_X") << " -> "
            << r.four_term.generators.to_string("O_X") << " -> E -> 0\n"
            << "0 -> E(" << r.four_term.kernel_twist << ") -> " << r.split_kernel.to_string("O_X") << " -> F("
            << r.normalization_shift << ") -> 0\n"
            << "rank F = " << r.new_rank << "\n";
  if (r.inferred_chern) {
    std::cout << "F normalized: c1=" << r.inferred_chern->first << ", c2=" << r.inferred_chern->second << "\n";
  }
  for (const auto& s : r.candidate_structures) std::cout << "possible: " << s << "\n";
  return kExitOk;
}

int cmd_verify(const Options& o) {
  const auto report = cicy::run_verification(o.fixtures, o.group);
  for (const auto& c : report.checks) {
    if (c.passed && !o.verbose) continue;
    std::cout << (c.passed ? "PASS " : "FAIL ") << c.group << "/" << c.fixture << " [" << c.check << "]";
    if (!c.passed) std::cout << ": " << c.detail;
    std::cout << "\n";
  }
  for (const auto& g : report.groups) {
    const auto n = std::count_if(report.checks.begin(), report.checks.end(), [&](const auto& c) { return c.group == g; });
    std::cout << "group " << g << ": " << (report.group_passed(g) ? "pass" : "FAIL") << " (" << n << " checks)\n";
  }
  return report.all_passed() ? kExitOk : kExitDomain;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rank-2 ACM bundles on complete-intersection Calabi-Yau threefolds"};
  app.require_subcommand(1);
  Options o;

  auto add_type = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--type", o.type, "degrees d1,d2,... of the threefold")->delimiter(',');
    if (required) opt->required();
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  };

  auto* classify = app.add_subcommand("classify", "admissible Chern classes with derivations");
  add_type(classify, true);
  add_format(classify);

  auto* chi = app.add_subcommand("chi", "chi and h^0 of twists of a rank-2 ACM bundle");
  add_type(chi, true);
  chi->add_option("--c1", o.c1)->required();
  chi->add_option("--c2", o.c2)->required();
  chi->add_option("--twists", o.twists, "a..b or n");
  add_format(chi);

  auto* resolve = app.add_subcommand("resolve", "resolution shapes from generator degrees");
  resolve->require_subcommand(1);
  auto add_resolve_common = [&](CLI::App* sub) {
    sub->add_option("--gens", o.gens, "generator degrees r1,r2,...")->delimiter(',')->required();
    sub->add_option("--emit", o.emit, "write the interchange document to this path");
    add_format(sub);
  };
  auto* curve = resolve->add_subcommand("curve", "ideal sheaf of an AG curve");
  add_resolve_common(curve);
  add_type(curve, false);
  curve->add_option("--hypersurface", o.hypersurface);
  curve->add_flag("--raw", o.raw, "print negative degree-matrix entries");
  auto* bundle = resolve->add_subcommand("bundle", "rank-2 bundle on a hypersurface section");
  add_resolve_common(bundle);
  add_type(bundle, false);
  bundle->add_option("--hypersurface", o.hypersurface);
  auto* from_bundle = resolve->add_subcommand("from-bundle", "curve of a quintic bundle from its L0 twists");
  add_resolve_common(from_bundle);
  from_bundle->add_option("--c1", o.c1)->required();

  auto* restrict = app.add_subcommand("restrict", "restrict a bundle resolution to a threefold");
  restrict->add_option("file", o.file, "interchange document")->required();
  restrict->add_option("--hypersurface", o.hypersurface)->required();
  add_type(restrict, true);
  add_format(restrict);

  auto* verify = app.add_subcommand("verify", "regenerate and check the fixture corpus");
  verify->add_option("--group", o.group, "run one fixture group")->check(CLI::IsMember(cicy::fixture_groups()));
  verify->add_option("--fixtures", o.fixtures, "fixture directory");
  verify->add_flag("--verbose", o.verbose, "also list passing checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (classify->parsed()) return cmd_classify(o);
    if (chi->parsed()) return cmd_chi(o);
    if (curve->parsed()) return cmd_resolve_curve(o);
    if (bundle->parsed()) return cmd_resolve_bundle(o);
    if (from_bundle->parsed()) return cmd_resolve_from_bundle(o);
    if (restrict->parsed()) return cmd_restrict(o);
    if (verify->parsed()) return cmd_verify(o);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const cicy::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const cicy::Error& e) {
    std::cerr << "error (" << e.kind() << "): " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}
