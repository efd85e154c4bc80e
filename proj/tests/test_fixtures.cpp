#include "cicy/fixtures.hpp"

#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>

using namespace cicy;
namespace fs = std::filesystem;

namespace {

fs::path copy_fixtures(const std::string& name) {
  const fs::path dst = fs::temp_directory_path() / name;
  fs::remove_all(dst);
  fs::copy(kDefaultFixtureDir, dst, fs::copy_options::recursive);
  return dst;
}

}  // namespace

TEST_CASE("fixture groups") {
  CHECK(resolution_fixture_groups().size() == 5);
  CHECK(fixture_groups().size() == 8);
  CHECK_THROWS_AS(run_verification(kDefaultFixtureDir, std::string("nonsense")), InvalidArgument);
}

TEST_CASE("every fixture group except x12 verifies") {
  const auto report = run_verification(kDefaultFixtureDir);
  CHECK(report.groups == fixture_groups());
  for (const auto& g : fixture_groups()) {
    INFO(g);
    if (g == "x12") continue;
    CHECK(report.group_passed(g));
  }
  for (const auto& c : report.checks) {
    INFO(c.group << "/" << c.fixture << " " << c.check << ": " << c.detail);
    if (c.fixture != "x12_c1_0_c2_5_elliptic" || c.check != "serre") CHECK(c.passed);
  }
}

TEST_CASE("the elliptic quintic fixture on X_12 disagrees with its curve") {
  const auto report = run_verification(kDefaultFixtureDir, std::string("x12"));
  CHECK_FALSE(report.group_passed("x12"));
  int failures = 0;
  for (const auto& c : report.checks) {
    if (c.passed) continue;
    ++failures;
    CHECK(c.fixture == "x12_c1_0_c2_5_elliptic");
    CHECK(c.check == "serre");
    CHECK(c.detail.find("degree 8, genus 5") != std::string::npos);
  }
  CHECK(failures == 1);
}

TEST_CASE("fixture counts") {
  const auto count = [](const std::string& g) {
    return load_resolution_fixtures(kDefaultFixtureDir, g).size();
  };
  CHECK(count("quintic") == 14);
  CHECK(count("x8") == 7);
  CHECK(count("x9") == 2);
  CHECK(count("x12") == 2);
  CHECK(count("quartic") == 1);
}

TEST_CASE("corrupting a fixture flips verification") {
  const fs::path dir = copy_fixtures("cicy_acm_fixture_corruption");
  REQUIRE(run_verification(dir, std::string("quintic")).all_passed());

  const fs::path file = dir / "resolutions" / "quintic" / "quintic_c1_2_c2_11.json";
  Json j = read_json_file(file.string());
  j["c2"] = 12;
  write_json_file(file.string(), j);
  const auto report = run_verification(dir, std::string("quintic"));
  CHECK_FALSE(report.all_passed());
  bool flagged = false;
  for (const auto& c : report.checks) flagged = flagged || (!c.passed && c.fixture == "quintic_c1_2_c2_11");
  CHECK(flagged);

  // A broken JSON file is a failed check, not a crash.
  std::ofstream(dir / "chi_checks.json") << "{ not json";
  CHECK_FALSE(run_verification(dir, std::string("chi")).all_passed());

  // So is a missing group.
  fs::remove_all(dir / "resolutions" / "x9");
  const auto gone = run_verification(dir, std::string("x9"));
  CHECK_FALSE(gone.all_passed());
  REQUIRE(gone.checks.size() == 1);
  CHECK(gone.checks[0].check == "present");

  fs::remove_all(dir);
}

TEST_CASE("corrupting table and chi fixtures flips verification") {
  const fs::path dir = copy_fixtures("cicy_acm_fixture_corruption_2");
  REQUIRE(run_verification(dir, std::string("theorem1")).all_passed());
  REQUIRE(run_verification(dir, std::string("chi")).all_passed());
  REQUIRE(run_verification(dir, std::string("restriction")).all_passed());

  Json t = read_json_file((dir / "theorem1.json").string());
  t["tables"][0]["rows"][2]["upper"] = 99;
  write_json_file((dir / "theorem1.json").string(), t);
  CHECK_FALSE(run_verification(dir, std::string("theorem1")).all_passed());

  Json r = read_json_file((dir / "restrictions.json").string());
  r["restrictions"][0]["c2"] = 7;
  write_json_file((dir / "restrictions.json").string(), r);
  CHECK_FALSE(run_verification(dir, std::string("restriction")).all_passed());

  fs::remove_all(dir);
}
