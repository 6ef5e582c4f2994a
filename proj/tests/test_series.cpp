#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "core/errors.hpp"
#include "core/paths.hpp"
#include "core/series.hpp"

using namespace treechild;
using namespace treechild::series;

namespace {

QSeries random_series(unsigned seed, long order, bool unit_head = false) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  QSeries s(order);
  for (long i = 0; i < order; ++i) s.set_coeff(i, make_rat(num(rng), den(rng)));
  if (unit_head) s.set_coeff(0, Rat(1));
  return s;
}

}  // namespace

TEST_CASE("engine: ring axioms on random series") {
  const auto f = random_series(1, 18), g = random_series(2, 18),
             h = random_series(3, 18);
  CHECK((f * g) * h == f * (g * h));
  CHECK(f * g == g * f);
  CHECK(f * (g + h) == f * g + f * h);
}

TEST_CASE("engine: inverse and sqrt") {
  auto f = random_series(4, 16);
  f.set_coeff(0, Rat(3));
  const auto inv = f.inverse();
  CHECK(f * inv == QSeries::constant(Rat(1), 16));

  const auto g = random_series(5, 16, /*unit_head=*/true);
  const auto r = g.sqrt();
  CHECK(r * r == g);
}

TEST_CASE("engine: product rule") {
  const auto f = random_series(6, 14), g = random_series(7, 14);
  const auto lhs = (f * g).derivative();
  const auto rhs = f.derivative() * g.truncated(13) + f.truncated(13) * g.derivative();
  CHECK(lhs == rhs);
}

TEST_CASE("engine: valuation shifts") {
  QSeries f(6);
  f.set_coeff(2, Rat(5));
  f.set_coeff(4, Rat(-1));
  const auto down = f.shifted_down(2);
  CHECK(down.order() == 4);
  CHECK(down.coeff(0) == 5);
  CHECK(down.coeff(2) == -1);
  CHECK(down.shifted_up(2).truncated(6) == f);
  QSeries bad(4);
  bad.set_coeff(1, Rat(1));
  CHECK_THROWS_AS(bad.shifted_down(2), InconsistencyError);
}

TEST_CASE("engine: exact division with valuation") {
  // (z^2 + z^3) / (z + z^2) = z
  QSeries a(8), b(8);
  a.set_coeff(2, Rat(1));
  a.set_coeff(3, Rat(1));
  b.set_coeff(1, Rat(1));
  b.set_coeff(2, Rat(1));
  const auto q = QSeries::divide_exact(a, b);
  CHECK(q.coeff(1) == 1);
  CHECK(q.coeff(0) == 0);
  CHECK((q * b).agrees_with(a));
}

TEST_CASE("D and E") {
  const auto d = dyck_series(10);
  const long expect[] = {1, 1, 2, 5, 14};
  for (long m = 0; m < 5; ++m) {
    CHECK(d.coeff(2 * m) == expect[m]);
    if (2 * m + 1 < 10) CHECK(d.coeff(2 * m + 1) == 0);
  }
  const auto e = e_series(12);
  CHECK(e.coeff(0) == 0);  // E(0) = 0
  // defining equation residual: E - z(1+E^2) = O(z^order)
  const auto rhs = (QSeries::constant(Rat(1), 12) + e * e).shifted_up(1).truncated(12);
  CHECK(e == rhs);
  // D = 1 + z^2 D^2
  const auto d2 = (d * d).shifted_up(2).truncated(10) + QSeries::constant(Rat(1), 10);
  CHECK(d == d2);
}

TEST_CASE("weight operator acts per monomial") {
  QSeries f(6);
  f.set_coeff(3, Rat(1));
  const auto g = apply_length_weight(f, 2);
  CHECK(g.coeff(3) == 4);  // (n+k-1) = 3+2-1
  CHECK(g.order() == 6);
}

TEST_CASE("F_0 is 1 and F_1 matches the pointing construction") {
  const auto f0 = f_k(0, 10);
  CHECK(f0.coeffs[0] == QSeries::constant(Rat(1), 10));
  for (long m = 1; m <= f0.u_degree(); ++m)
    CHECK(f0.coeffs[m] == QSeries::zero(10));

  // F_1(z,u) = z d/dz M_up(z,u): u^m coefficient is z d/dz E^m
  const long order = 16;
  const auto f1 = f_k(1, order);
  const auto e = e_series(order);
  QSeries epow = QSeries::constant(Rat(1), order);
  for (long m = 1; m <= f1.u_degree(); ++m) {
    epow *= e;
    QSeries expected(order);
    for (long q = 1; q < order; ++q) {
      Rat v = epow.coeff(q);
      v *= q;
      expected.set_coeff(q, std::move(v));
    }
    CHECK(f1.coeffs[m] == expected);
  }
  CHECK(f1.coeffs[0] == QSeries::zero(order));
}

TEST_CASE("meander coefficients keep valuation >= u-degree") {
  const auto f3 = f_k(3, 14);
  for (long m = 0; m <= f3.u_degree(); ++m)
    CHECK(f3.coeffs[m].valuation() >= std::min<long>(m, 14));
}

TEST_CASE("B_k displays") {
  const auto b0 = b_k_series(0, 9);
  const long d_expect[] = {1, 1, 2, 5, 14};
  for (long m = 0; m < 5; ++m) CHECK(b0.coeff(2 * m) == d_expect[m]);

  const auto b1 = b_k_series(1, 8);
  CHECK(b1.coeff(0) == 0);
  CHECK(b1.coeff(2) == 1);
  CHECK(b1.coeff(4) == 7);
  CHECK(b1.coeff(6) == 38);

  const auto b2 = b_k_series(2, 10);
  CHECK(b2.coeff(2) == 0);
  CHECK(b2.coeff(4) == 7);
  CHECK(b2.coeff(6) == 106);
  CHECK(b2.coeff(8) == 1010);
}

TEST_CASE("B_k against the path DP") {
  const auto bs = b_series_upto(5, 31);
  for (int k = 0; k <= 5; ++k)
    for (long n = 0; n <= 15; ++n)
      CHECK(bs[k].coeff(2 * n) == paths::b_path_count(n, k));
}

TEST_CASE("gamma table") {
  GammaTable g;
  CHECK(g.value(0, 1) == -1);
  CHECK(g.value(1, 1) == 1);
  CHECK(g.value(1, 2) == -8);
  CHECK(g.value(2, 2) == make_rat(15, 2));
  CHECK(g.value(0, 2) == make_rat(1, 2));
}

TEST_CASE("C_k(2z^2) displays") {
  const auto c0 = substitute_two_z_squared(c_k_series(0, 8));
  const long e0[] = {0, 2, 2, 4, 10};
  for (long m = 1; m < 5; ++m) CHECK(c0.coeff(2 * m) == e0[m]);

  const auto c1 = substitute_two_z_squared(c_k_series(1, 8));
  const long e1[] = {0, 2, 14, 76, 374};
  for (long m = 1; m < 5; ++m) CHECK(c1.coeff(2 * m) == e1[m]);

  const auto c2 = substitute_two_z_squared(c_k_series(2, 8));
  const long e2[] = {0, 14, 212, 2020, 15480};
  for (long m = 1; m < 5; ++m) CHECK(c2.coeff(2 * m) == e2[m]);
}

TEST_CASE("C_k gamma and ODE routes agree (and are cross-checked internally)") {
  for (int k = 0; k <= 8; ++k) {
    const auto a = c_k_series_gamma(k, 20);
    const auto b = c_k_series_ode(k, 20);
    CHECK(a.agrees_with(b));
    CHECK_NOTHROW(c_k_series(k, 20));
  }
}

TEST_CASE("C_k coefficients recover c_{n,k}") {
  for (int k = 0; k <= 5; ++k) {
    const auto c = c_k_series(k, 18);
    for (long n = k; n <= 14; ++n) {
      const long m = n - k + 1;
      if (m >= c.order()) continue;
      CHECK(c.coeff(m) * Rat(factorial(m)) == Rat(paths::c_path_count(n, k)));
    }
  }
}

TEST_CASE("ODE residual vanishes") {
  // (1-2w) C_k' - (3k-1) C_k = C_{k-1}'' to the surviving order
  for (int k = 1; k <= 10; ++k) {
    const auto ck = c_k_series_gamma(k, 20);
    const auto prev = c_k_series_gamma(k - 1, 22);
    const auto lhs = t_apply(ck) - ck.truncated(19).scaled_small(3 * k - 1);
    const auto rhs = prev.derivative().derivative();
    CHECK(lhs.agrees_with(rhs));
  }
}

TEST_CASE("sqrt(1-4z^2) equals (1-E^2)/(1+E^2)") {
  const long order = 24;
  QSeries base(order);
  base.set_coeff(0, Rat(1));
  base.set_coeff(2, Rat(-4));
  const auto root = base.sqrt();
  const auto e = e_series(order);
  const auto e2 = e * e;
  const auto one = QSeries::constant(Rat(1), order);
  CHECK(root == (one - e2) * (one + e2).inverse());
}

TEST_CASE("identity checks") {
  CHECK(verify_gf_identity(0, 12).passed);
  CHECK(verify_gf_identity(1, 10).passed);
  for (int k = 2; k <= 6; ++k) CHECK(verify_gf_identity(k, 2 * k + 14).passed);
  const auto all = verify_gf_identity_upto(6, 0, 2);
  for (const auto& r : all) CHECK(r.passed);
}

TEST_CASE("T operator annihilation") {
  CHECK(t_operator_check(1, 12));
  CHECK(t_operator_check(2, 14));
  CHECK(t_operator_check(3, 16));
}

TEST_CASE("commutation rule spot checks") {
  for (unsigned seed : {11u, 22u, 33u}) CHECK(d2_commutation_check(seed, 14));
  // the monomial z: both sides vanish
  QSeries z(6);
  z.set_coeff(1, Rat(1));
  const auto lhs = t_apply(z).derivative().derivative();
  auto d2 = z.derivative().derivative();
  const auto rhs = t_apply(d2) - d2.truncated(d2.order() - 1).scaled_small(4);
  for (long i = 0; i < lhs.order(); ++i) CHECK(lhs.coeff(i) == 0);
  for (long i = 0; i < rhs.order(); ++i) CHECK(rhs.coeff(i) == 0);
}
