#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "core/errors.hpp"
#include "core/laws.hpp"
#include "core/paths.hpp"

using namespace treechild;
using namespace treechild::laws;

namespace {

Poly xpow(int deg, long c) { return Poly::monomial(deg, Rat(c)); }

}  // namespace

TEST_CASE("G displayed coefficients") {
  const auto g = g_series(8);
  CHECK(g.coeff(0) == Poly());
  CHECK(g.coeff(2) == xpow(1, 1));
  CHECK(g.coeff(4) == xpow(2, 5) + xpow(1, 2));
  CHECK(g.coeff(6) == xpow(3, 21) + xpow(2, 12) + xpow(1, 5));
  CHECK(g.coeff(3) == Poly());
}

TEST_CASE("H displayed coefficients") {
  const auto h = h_series(4);
  CHECK(h.coeff(1) == xpow(1, 1));
  // (x^2+2x+4) x
  CHECK(h.coeff(2) == xpow(3, 1) + xpow(2, 2) + xpow(1, 4));
  // (2x^4+4x^3+7x^2+10x+15) x
  CHECK(h.coeff(3) ==
        xpow(5, 2) + xpow(4, 4) + xpow(3, 7) + xpow(2, 10) + xpow(1, 15));
}

TEST_CASE("V displayed coefficients") {
  const auto v = v_series(4);
  CHECK(v.coeff(1) == xpow(3, 1));
  // (3x^5+3x^4+x^3)/2
  CHECK(v.coeff(2) ==
        (xpow(5, 3) + xpow(4, 3) + xpow(3, 1)).scaled(make_rat(1, 2)));
  // (15x^7+15x^6+15x^5+9x^4+3x^3)/6
  CHECK(v.coeff(3) == (xpow(7, 15) + xpow(6, 15) + xpow(5, 15) + xpow(4, 9) +
                       xpow(3, 3))
                          .scaled(make_rat(1, 6)));
}

TEST_CASE("marginals tie back to the path counts") {
  const auto g = g_series(41);
  const auto h = h_series(21);
  const auto v = v_series(21);
  Rat fact(1);
  for (long n = 1; n <= 20; ++n) {
    fact *= n;
    CHECK(g.coeff(2 * n).eval_one() == Rat(paths::b_path_count(n, 1)));
    CHECK(h.coeff(n).eval_one() == Rat(paths::b_path_count(n, 1)));
    CHECK(v.coeff(n).eval_one() * fact == Rat(paths::c_path_count(n, 1)));
  }
}

TEST_CASE("v rows: worked values and invariants") {
  CHECK(v_row(2) == std::vector<Int>{0, 0, 1, 3, 3});
  for (long n = 1; n <= 200; ++n) {
    const auto row = v_row(n);
    Int sum = 0;
    for (const Int& v : row) sum += v;
    CHECK(sum == paths::c_path_count(n, 1));
    CHECK(row.back() == odd_double_factorial(n));
  }
}

TEST_CASE("dist_X(2) worked example") {
  const auto t = dist_X(2);
  CHECK(t.mass(1) == make_rat(2, 7));
  CHECK(t.mass(2) == make_rat(5, 7));
  CHECK(t.moment(1) == make_rat(12, 7));
}

TEST_CASE("dist_Y(2) worked example") {
  const auto t = dist_Y(2);
  CHECK(t.mass(1) == make_rat(4, 7));
  CHECK(t.mass(2) == make_rat(2, 7));
  CHECK(t.mass(3) == make_rat(1, 7));
}

TEST_CASE("dist_Z worked examples") {
  const auto t = dist_Z(2);
  CHECK(t.mass(3) == make_rat(1, 7));
  CHECK(t.mass(4) == make_rat(3, 7));
  CHECK(t.mass(5) == make_rat(3, 7));
  const auto t1 = dist_Z(1);
  CHECK(t1.mass(3) == 1);
  CHECK(t1.moment(1) == 3);
  CHECK(t1.moment(4) == 81);
}

TEST_CASE("point mass moments") {
  DistTable t;
  t.param = 'X';
  t.n = 1;
  t.numerators = {0, 0, 0, 0, 1};  // point mass at m = 5
  t.total = 1;
  t.support_min = 5;
  for (int r = 1; r <= 4; ++r) {
    Int expect = 1;
    for (int i = 0; i < r; ++i) expect *= 5;
    CHECK(t.moment(r) == Rat(expect));
  }
}

TEST_CASE("masses sum to one exactly") {
  for (long n : {1L, 2L, 3L, 7L, 19L, 40L, 75L}) {
    for (char p : {'X', 'Y', 'Z'}) {
      DistTable t;
      switch (p) {
        case 'X': t = dist_X(n); break;
        case 'Y': t = dist_Y(n); break;
        default: t = dist_Z(n); break;
      }
      Rat sum(0);
      for (long m = t.support_min; m <= t.support_max(); ++m) sum += t.mass(m);
      CHECK(sum == 1);
    }
  }
}

TEST_CASE("route agreement X, n <= 20") {
  for (long n = 1; n <= 20; ++n) {
    const auto a = x_numerators_formula(n);
    const auto b = x_numerators_dp(n);
    const auto c = x_numerators_series(n);
    CHECK(a == b);
    CHECK(a == c);
    Int total = 0;
    for (const auto& v : a) total += v;
    CHECK(total == paths::b_path_count(n, 1));
  }
}

TEST_CASE("route agreement Y, n <= 20") {
  for (long n = 1; n <= 20; ++n) {
    const auto a = y_numerators_formula(n);
    const auto b = y_numerators_dp(n);
    const auto c = y_numerators_series(n);
    CHECK(a == b);
    CHECK(a == c);
  }
}

TEST_CASE("route agreement Z, n <= 20") {
  for (long n = 1; n <= 20; ++n) {
    auto a = v_row(n);
    while (!a.empty() && a.back() == 0) a.pop_back();
    auto b = z_numerators_series(n);
    while (!b.empty() && b.back() == 0) b.pop_back();
    CHECK(a == b);
  }
}

TEST_CASE("supports") {
  const auto x = dist_X(9);
  CHECK(x.support_max() <= 9);
  const auto y = dist_Y(9);
  CHECK(y.support_max() <= 2 * 9);
  const auto z = dist_Z(9);
  CHECK(z.support_max() == 2 * 9 + 1);
  CHECK(z.support_min >= 1);
}

TEST_CASE("convergence report structure on a small list") {
  const auto rep = convergence_report('X', {8, 16, 32}, 3);
  CHECK(rep.rows.size() == 9);
  CHECK(rep.doubling.size() == 6);
  for (const auto& row : rep.rows) {
    CHECK(row.gap >= 0);
    CHECK(row.target > 0);
  }
  CHECK(rep.mean_ratio.has_value());
  CHECK(rep.spread_ratio.has_value());
  const auto repz = convergence_report('Z', {5, 11}, 2);
  CHECK(repz.doubling.empty());  // 11 != 2*5
  CHECK(repz.mean_ratio.has_value());
  CHECK_FALSE(repz.spread_ratio.has_value());
}

TEST_CASE("moment scaling targets") {
  // Beta(2,1), Beta(1,2) and Uniform targets at r=1
  const auto rx = convergence_report('X', {16}, 1);
  CHECK(rx.rows[0].target == make_rat(2, 3));
  const auto ry = convergence_report('Y', {16}, 1);
  CHECK(ry.rows[0].target == make_rat(1, 3));
  const auto rz = convergence_report('Z', {16}, 1);
  CHECK(rz.rows[0].target == make_rat(1, 2));
}

TEST_CASE("invalid inputs") {
  CHECK_THROWS_AS(dist_X(0), InvalidInputError);
  CHECK_THROWS_AS(convergence_report('Q', {4}, 2), InvalidInputError);
  CHECK_THROWS_AS(convergence_report('X', {}, 2), InvalidInputError);
}
