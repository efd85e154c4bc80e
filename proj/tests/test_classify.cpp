#include "cicy/classify.hpp"
#include "oracles.hpp"

#include <catch_amalgamated.hpp>

#include <algorithm>

using namespace cicy;

namespace {

// All c2 in [1, 400] for which 12 chi(E(n)) hits 12 * target.
std::vector<int> c2_solutions(int r, int c1, int n, long long target) {
  std::vector<int> out;
  for (int c2 = 1; c2 <= 400; ++c2) {
    if (oracle::twelve_chi(r, c1, c2, n) == 12 * target) out.push_back(c2);
  }
  return out;
}

const ClassificationEntry& row(const std::vector<ClassificationEntry>& rows, int c1) {
  auto it = std::find_if(rows.begin(), rows.end(), [&](const auto& e) { return e.c1 == c1; });
  REQUIRE(it != rows.end());
  return *it;
}

}  // namespace

TEST_CASE("c2 ranges") {
  const C2Range even{4, 10, true, "computed"};
  CHECK(even.values() == std::vector<int>{4, 6, 8, 10});
  CHECK(even.to_string() == "4 <= c2 <= 10, even");
  CHECK_FALSE(even.contains(5));
  CHECK_FALSE(even.contains(12));

  const C2Range single{20, 20, false, "computed"};
  CHECK(single.is_single());
  CHECK(single.to_string() == "20");

  const C2Range open{std::nullopt, 19, false, "lower bound unknown"};
  CHECK(open.values().empty());
  CHECK(open.contains(1));
  CHECK(open.to_string() == "c2 <= 19");
}

TEST_CASE("classification on the quintic") {
  const auto rows = admissible_chern(make_cicy({5}));
  REQUIRE(rows.size() == 7);
  CHECK(row(rows, -2).c2.values() == std::vector<int>{1});
  CHECK(row(rows, -1).c2.values() == std::vector<int>{2});
  CHECK(row(rows, 0).c2.values() == std::vector<int>{3, 4, 5});
  CHECK(row(rows, 1).c2.values() == std::vector<int>{4, 6, 8});
  CHECK(row(rows, 2).c2.values() == std::vector<int>{11, 12, 13, 14});
  CHECK(row(rows, 3).c2.values() == std::vector<int>{20});
  CHECK(row(rows, 4).c2.values() == std::vector<int>{30});

  for (const auto& e : rows) {
    CHECK(in_splitting_range(e.c1));
    CHECK(e.existence.kind == ExistenceKind::proven);
  }
  CHECK(row(rows, 2).existence.note == "proven (external)");
}

TEST_CASE("classification on X_8 and X_16") {
  const auto x8 = admissible_chern(make_cicy({2, 4}));
  CHECK(row(x8, 0).c2.values() == std::vector<int>{3, 4, 5, 6});
  CHECK(row(x8, 1).c2.values() == std::vector<int>{4, 6, 8, 10});
  CHECK_FALSE(row(x8, 2).c2.lower);
  CHECK(row(x8, 2).c2.upper == 19);
  CHECK(row(x8, 2).c2.lower_source == "lower bound unknown");
  CHECK(row(x8, 3).c2.values() == std::vector<int>{28});
  CHECK(row(x8, 1).existence.kind == ExistenceKind::proven_except);
  CHECK(row(x8, 1).existence.exceptions == std::vector<int>{4, 8});
  CHECK(row(x8, 2).existence.kind == ExistenceKind::open);
  CHECK(row(x8, 4).existence.kind == ExistenceKind::open);

  const auto x16 = admissible_chern(make_cicy({2, 2, 2, 2}));
  CHECK(row(x16, 0).c2.values() == std::vector<int>{3, 4, 5, 6, 7, 8});
  CHECK(row(x16, 0).existence.kind == ExistenceKind::proven_except);
  CHECK(row(x16, 0).existence.exceptions == std::vector<int>{3});
  CHECK(row(x16, 1).c2.upper == 14);
  CHECK(row(x16, 2).c2.upper == 31);
  CHECK(row(x16, 3).c2.values() == std::vector<int>{48});
}

TEST_CASE("c1 = 4 values across the catalog") {
  std::vector<int> got;
  for (const auto& x : cicy_catalog()) got.push_back(row(admissible_chern(x), 4).c2.upper);
  std::sort(got.begin(), got.end());
  CHECK(got == std::vector<int>{30, 44, 48, 62, 80});
}

TEST_CASE("classification agrees with a brute-force chi search") {
  for (const auto& x : cicy_catalog()) {
    INFO(x.name());
    const int r = x.r();
    const auto rows = admissible_chern(x);
    const auto hx = [&](int n) { return oracle::inclusion_exclusion_hf(x.ambient_dim(), x.degrees(), n); };

    CHECK(c2_solutions(r, -2, 0, 1 - hx(2)) == std::vector<int>{row(rows, -2).c2.upper});
    CHECK(c2_solutions(r, -1, 0, 1 - hx(1)) == std::vector<int>{row(rows, -1).c2.upper});
    // c1 = 0: c2 is largest when h0(I_C(1)) = 0.
    CHECK(c2_solutions(r, 0, 1, hx(1)) == std::vector<int>{row(rows, 0).c2.upper});
    CHECK(c2_solutions(r, 1, 0, 1) == std::vector<int>{row(rows, 1).c2.upper});
    CHECK(c2_solutions(r, 2, 0, 1) == std::vector<int>{row(rows, 2).c2.upper});
    CHECK(c2_solutions(r, 3, -1, 0) == std::vector<int>{row(rows, 3).c2.upper});
    CHECK(c2_solutions(r, 4, -1, 0) == std::vector<int>{row(rows, 4).c2.upper});
    // c1 = 1: each extra section of I_C(1) lowers c2 by 2.
    CHECK(c2_solutions(r, 1, 0, 2) == std::vector<int>{row(rows, 1).c2.upper - 2});
  }
}

TEST_CASE("classification matches the reference table") {
  for (const auto& x : cicy_catalog()) {
    const auto report = verify_against_theorem1(x);
    INFO(x.name());
    CHECK(report.all_agree);
    CHECK(report.rows.size() == 7);
  }

  // Independent transcription: k = floor(r/4).
  for (const auto& x : cicy_catalog()) {
    const int r = x.r();
    const int k = r / 4;
    const auto rows = admissible_chern(x);
    CHECK(row(rows, 0).c2.upper == 4 + k);
    CHECK(row(rows, 1).c2.upper == 6 + 2 * k);
    CHECK(row(rows, 2).c2.upper == 7 + 2 * k + r);
    CHECK(row(rows, 3).c2.upper == 8 + 2 * k + 2 * r);
  }

  auto table = theorem1_table(make_cicy({5}));
  table[3].c2.upper = 10;
  CHECK_FALSE(verify_against_theorem1(make_cicy({5}), table).all_agree);
  table.pop_back();
  table[3].c2.upper = 8;
  CHECK_FALSE(verify_against_theorem1(make_cicy({5}), table).all_agree);
}

TEST_CASE("derivation traces cite only library computations") {
  for (const auto& x : cicy_catalog()) {
    for (const auto& e : admissible_chern(x)) {
      REQUIRE_FALSE(e.derivation.empty());
      for (const auto& step : e.derivation) {
        const bool known = step.op == "grr.chi_twisted" || step.op == "grr.acm_h0" ||
                           step.op == "cohomology.hilbert_function_ci";
        CHECK(known);
      }
      const bool solved = std::any_of(e.derivation.begin(), e.derivation.end(),
                                      [](const auto& s) { return s.op == "grr.chi_twisted"; });
      CHECK(solved);
    }
  }
}

TEST_CASE("existence metadata") {
  const Cicy x16 = make_cicy({2, 2, 2, 2});
  CHECK(existence_of(x16, 0, 3).status == ExistenceStatus::excepted);
  CHECK(existence_of(x16, 0, 4).status == ExistenceStatus::proven);
  CHECK(existence_of(make_cicy({2, 4}), 1, 6).status == ExistenceStatus::proven);
  CHECK(existence_of(make_cicy({3, 3}), 1, 10).status == ExistenceStatus::proven);
  CHECK(existence_of(make_cicy({2, 2, 3}), 1, 8).status == ExistenceStatus::proven);
  CHECK(existence_of(make_cicy({2, 2, 3}), 1, 6).status == ExistenceStatus::open);
  CHECK(existence_of(make_cicy({5}), 3, 20).status == ExistenceStatus::proven_external);
  CHECK(existence_of(make_cicy({2, 4}), 3, 28).status == ExistenceStatus::open);

  const auto ann = existence_annotations(make_cicy({2, 4}));
  CHECK(ann.at({1, 6}).status == ExistenceStatus::proven);
  CHECK(ann.at({1, 4}).status == ExistenceStatus::open);
  CHECK(ann.count({2, 10}) == 0);
  CHECK(ann.count({-2, 1}) == 1);
}

TEST_CASE("formatted classification") {
  const Cicy x8 = make_cicy({2, 4});
  const auto text = format_classification(x8, admissible_chern(x8));
  CHECK(text.find("X_8") == 0);
  CHECK(text.find("c2 <= 19 (lower bound unknown)") != std::string::npos);
  CHECK(text.find("proven_except {4,8}") != std::string::npos);
  CHECK(text.find("grr.chi_twisted") != std::string::npos);
  CHECK(format_classification(x8, admissible_chern(x8), false).find("grr.") == std::string::npos);
}
