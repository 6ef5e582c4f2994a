#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "core/errors.hpp"
#include "core/paths.hpp"
#include "core/tableaux.hpp"

using namespace treechild;
using namespace treechild::paths;

TEST_CASE("b paths with no weighted steps are Catalan") {
  for (long n = 0; n <= 12; ++n) CHECK(b_path_count(n, 0) == catalan(n));
}

TEST_CASE("c paths with k=0 are odd double factorials") {
  for (long n = 0; n <= 12; ++n)
    CHECK(c_path_count(n, 0) == odd_double_factorial(n));
}

TEST_CASE("frozen b values") {
  CHECK(b_path_count(2, 1) == 7);
  CHECK(b_path_count(3, 1) == 38);
  CHECK(b_path_count(3, 2) == 106);
}

TEST_CASE("frozen c values") {
  CHECK(c_path_count(2, 1) == 7);
  // c_{3,1} = c_{3,0} + 6 c_{2,1} = 15 + 42
  CHECK(c_path_count(3, 1) == 57);
}

TEST_CASE("c recurrence holds for all computed cells") {
  for (long n = 1; n <= 25; ++n)
    for (long k = 1; k <= n; ++k) {
      const Int prev = k <= n - 1 ? c_path_count(n - 1, k) : Int(0);
      CHECK(c_path_count(n, k) ==
            c_path_count(n, k - 1) + (2 * n + k - 1) * prev);
    }
}

TEST_CASE("paths agree with the tableau recurrence") {
  tableaux::YTable table;
  for (int n = 0; n <= 60; ++n)
    for (int k = 0; k <= std::min(n, 10); ++k) {
      CHECK(b_path_count(n, k) == table.value(n, n - k, k));
      CHECK(c_path_count(n, k) == table.value(k, 0, n));
    }
}

TEST_CASE("diagonal values recover a_n") {
  const long a[] = {1, 1, 7, 106, 2575, 87595, 3864040, 210455470};
  for (long n = 0; n <= 7; ++n) {
    CHECK(b_path_count(n, n) == a[n]);
    CHECK(c_path_count(n, n) == a[n]);
  }
}

TEST_CASE("identity restated over paths") {
  for (long n = 0; n <= 25; ++n)
    for (long k = 0; k <= n; ++k)
      CHECK(b_path_count(n, k) * factorial(n + 1 - k) ==
            c_path_count(n, k) * pow2(n - k));
}

TEST_CASE("Dyck view equals the 2D view") {
  for (long n = 0; n <= 20; ++n)
    for (long k = 0; k <= std::min(n, 5L); ++k)
      CHECK(b_dyck_count(n, k) == b_path_count(n, k));
}

TEST_CASE("worked example path weights") { CHECK(figure_weight_check()); }

TEST_CASE("degenerate single-step weights") {
  // a single J2 to (0,1) has weight 0+1+1-1 = 1
  CHECK(c_path_count(1, 0) == 1);
  // vertical three-J2 path: weights 1,3,5 multiply to c_{3,0}
  CHECK(c_path_count(3, 0) == 15);
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(b_path_count(2, 3), InvalidInputError);
  CHECK_THROWS_AS(c_path_count(2, 3), InvalidInputError);
  CHECK_THROWS_AS(b_path_count(-1, 0), InvalidInputError);
}
