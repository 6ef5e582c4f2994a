#pragma once

#include <string>
#include <vector>

#include "core/power_series.hpp"

namespace treechild::series {

// D(z): Dyck-path generating function, the power-series solution of
// D = 1 + z^2 D^2 (Catalan numbers at even powers).
QSeries dyck_series(long order);

// E(z) = z D(z), the solution of E = z(1 + E^2) with E(0) = 0.
QSeries e_series(long order);

// Bivariate series F(z,u) stored as u-polynomial with z-series coefficients;
// coeffs[m] multiplies u^m. Meander-type objects keep the z-valuation of
// coeffs[m] at >= m, so u-degrees are capped at the z-order.
struct UPolySeries {
  std::vector<QSeries> coeffs;

  long z_order() const { return coeffs.empty() ? 0 : coeffs.front().order(); }
  long u_degree() const { return static_cast<long>(coeffs.size()) - 1; }
  QSeries eval_at(const QSeries& value) const;  // substitute u <- value
};

// Generating function of bicolored Dyck meanders with k weighted up-steps
// whose last step is the k-th weighted one; z marks steps, u the end level.
// Built by the recursion
//   F_k = W_k [ divdiff(F_{k-1}) * M_up ],  F_0 = 1,
// where divdiff maps u^l to sum_i E^i u^(l-i), M_up(z,u) = uE/(1-uE), and
// the step-weight operator W_k scales z^q by q+k-1.
UPolySeries f_k(int k, long order);

// B_k(z) = F_k(z, E) D(z); coefficient of z^(2n) counts b_{n,k}.
QSeries b_k_series(int k, long order);

// All of B_0..B_kmax from one ladder run (cheaper than k separate calls).
std::vector<QSeries> b_series_upto(int k_max, long order);

// Step-weight operator: scales the z^q coefficient by q+k-1 (the series
// form of z^(1-k) d/dz z^(k-1), which costs no precision).
QSeries apply_length_weight(const QSeries& f, int k);

// Exact coefficients gamma_{i,k} of C_k as a combination of powers
// (1-2z)^(-(i+3k-1)/2).
class GammaTable {
 public:
  Rat value(int i, int k);

 private:
  void extend(int k);
  std::vector<std::vector<Rat>> rows_{{}, {Rat(-1), Rat(1)}};  // rows_[k][i]
};

// C_k in its own variable. `c_k_series` builds the closed-form combination
// and the first-order ODE route and insists they agree; a mismatch throws
// InconsistencyError.
QSeries c_k_series_gamma(int k, long order);
QSeries c_k_series_ode(int k, long order);
QSeries c_k_series(int k, long order);

// Substitute w -> 2 z^2 into a series in w.
QSeries substitute_two_z_squared(const QSeries& f);

// T = (1-2z) d/dz; loses one order of precision.
QSeries t_apply(const QSeries& f);

// Applies prod_{j=3k-1}^{4k-1} (T-j) to C_k and checks the result vanishes
// to the surviving order; also spot-checks the commutation rule
// d^2/dz^2 T = (T-4) d^2/dz^2 on pseudo-random series.
bool t_operator_check(int k, long order);
bool d2_commutation_check(unsigned seed, long order);

struct GfIdentityResult {
  int k = 0;
  long order = 0;
  bool passed = false;
  long first_mismatch = -1;  // z-power of the first differing coefficient
};

// Coefficient-exact comparison of 2 B_k(z) against z^(2(k-1)) C_k(2z^2)
// (k = 0 uses the variant 2 z^2 B_0 = C_0(2z^2)).
GfIdentityResult verify_gf_identity(int k, long order);

// Runs the check for k = 0..k_max; order 0 means the per-k default 2k+40.
// C-route construction runs on `jobs` threads.
std::vector<GfIdentityResult> verify_gf_identity_upto(int k_max, long order,
                                                      int jobs = 1);

}  // namespace treechild::series
