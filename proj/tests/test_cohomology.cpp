#include "cicy/cohomology.hpp"
#include "oracles.hpp"

#include <catch_amalgamated.hpp>

using namespace cicy;

namespace {

std::vector<std::vector<int>> sub_multisets(const std::vector<int>& degrees) {
  std::vector<std::vector<int>> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << degrees.size()); ++mask) {
    std::vector<int> s;
    for (std::size_t i = 0; i < degrees.size(); ++i) {
      if (mask & (std::size_t{1} << i)) s.push_back(degrees[i]);
    }
    out.push_back(s);
  }
  return out;
}

}  // namespace

TEST_CASE("ext_binomial") {
  CHECK(ext_binomial(6, 2) == 15);
  CHECK(ext_binomial(1, 3) == 0);
  CHECK(ext_binomial(-2, 3) == -4);
  CHECK(ext_binomial(5, 0) == 1);
  CHECK_THROWS_AS(ext_binomial(5, -1), InvalidArgument);
}

TEST_CASE("line bundles on projective space") {
  auto t = pn_line_cohomology(4, 2);
  CHECK(t.h(0) == Integer(15));
  for (int i = 1; i <= 4; ++i) CHECK(t.h(i) == Integer(0));

  t = pn_line_cohomology(4, -5);
  CHECK(t.h(4) == Integer(1));
  CHECK(t.h(0) == Integer(0));

  CHECK(pn_line_cohomology(5, 1).h(0) == Integer(6));

  for (int n_dim = 1; n_dim <= 6; ++n_dim) {
    for (int n = -12; n <= 12; ++n) {
      CHECK(pn_line_cohomology(n_dim, n).h(n_dim) == pn_line_cohomology(n_dim, -n - n_dim - 1).h(0));
    }
  }
}

TEST_CASE("hilbert_function_ci spot values") {
  CHECK(hilbert_function_ci(make_cicy({2, 4}).base(), 2) == 20);
  CHECK(hilbert_function_ci(make_cicy({5}).base(), 2) == 15);
  for (const auto& x : cicy_catalog()) {
    CHECK(hilbert_function_ci(x.base(), 0) == 1);
    CHECK(hilbert_function_ci(x.base(), -3) == 0);
  }
}

TEST_CASE("hilbert_function_ci matches the monomial staircase") {
  for (const auto& x : cicy_catalog()) {
    for (const auto& sub : sub_multisets(x.degrees())) {
      const CompleteIntersection v(x.ambient_dim(), sub);
      for (int n = 0; n <= 8; ++n) {
        INFO(v.name() << " n=" << n);
        CHECK(hilbert_function_ci(v, n) == oracle::staircase_hf(v.ambient_dim(), v.degrees(), n));
        CHECK(hilbert_function_ci(v, n) == oracle::inclusion_exclusion_hf(v.ambient_dim(), v.degrees(), n));
      }
    }
  }
  // Small complete intersections beyond the catalog.
  for (int n_dim = 1; n_dim <= 4; ++n_dim) {
    for (int a = 1; a <= 4; ++a) {
      for (int b = 1; b <= 4 && a * b <= 16; ++b) {
        if (n_dim < 2) continue;
        const CompleteIntersection v(n_dim, {a, b});
        for (int n = 0; n <= 8; ++n) CHECK(hilbert_function_ci(v, n) == oracle::staircase_hf(n_dim, v.degrees(), n));
      }
    }
  }
}

TEST_CASE("structure sheaf cohomology") {
  auto t = ci_structure_cohomology(make_cicy({3, 3}).base(), 0);
  CHECK(t.h(0) == Integer(1));
  CHECK(t.h(1) == Integer(0));
  CHECK(t.h(2) == Integer(0));
  CHECK(t.h(3) == Integer(1));

  t = ci_structure_cohomology(make_cicy({2, 4}).base(), 1);
  CHECK(t.h(0) == Integer(6));
  CHECK(t.h(3) == Integer(0));

  t = ci_structure_cohomology(make_cicy({2, 2, 2, 2}).base(), 2);
  CHECK(t.h(0) == Integer(32));
  CHECK(t.h(3) == Integer(0));

  // Zero-dimensional: a length-6 scheme in every twist.
  const CompleteIntersection points(2, {2, 3});
  CHECK(ci_structure_cohomology(points, 5).h(0) == Integer(6));
}

TEST_CASE("chi of line bundles on CICYs") {
  CHECK(chi_line_bundle(make_cicy({5}).base(), 0) == 0);
  CHECK(chi_line_bundle(make_cicy({2, 4}).base(), 2) == 20);
  CHECK(chi_line_bundle(make_cicy({2, 2, 3}).base(), -1) == -7);

  for (const auto& x : cicy_catalog()) {
    for (int n = -10; n <= 10; ++n) {
      INFO(x.name() << " n=" << n);
      CHECK(chi_line_bundle(x.base(), n) == -chi_line_bundle(x.base(), -n));
      const auto t = ci_structure_cohomology(x.base(), n);
      CHECK(chi_line_bundle(x.base(), n) == *t.h(0) - *t.h(1) + *t.h(2) - *t.h(3));
    }
  }
}
