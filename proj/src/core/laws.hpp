#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/power_series.hpp"

namespace treechild::laws {

// Bivariate generating functions for the k=1 tableau statistics, expanded in
// the main variable with exact polynomial coefficients in the marker x.
//
//   G(z,x): column of the unique bottom cell (x marks the up-step index of
//           the weighted up-step; even series in z).
//   H(t,x): value in the unique bottom cell (pointer model; t marks the
//           half-length).
//   V(t,x): value in the unique top cell over c_{n,1} tableaux (coefficients
//           carry 1/n!).
PolySeries g_series(long order);
PolySeries h_series(long order);
PolySeries v_series(long order);

// Row n of the top-cell value table: v_{n,i} for i = 1..2n+1 (index i-1).
std::vector<Int> v_row(long n);

// Exact distribution of one statistic at a fixed size n.
struct DistTable {
  char param = '?';
  long n = 0;
  long support_min = 0;             // first m with positive mass
  std::vector<Int> numerators;      // index m-1, m = 1..numerators.size()
  Int total;                        // sum of numerators

  Rat mass(long m) const;
  Rat moment(int r) const;          // E[M^r]
  long support_max() const;
};

struct LawOptions {
  // Up to this n the distribution is computed over every implemented route
  // (closed-form series, path DP, direct recurrence/formula) and the routes
  // must agree exactly.
  long dual_route_limit = 30;
};

DistTable dist_X(long n, const LawOptions& opts = {});
DistTable dist_Y(long n, const LawOptions& opts = {});
DistTable dist_Z(long n, const LawOptions& opts = {});

// Individual routes, exposed for tests and the CLI verification paths.
std::vector<Int> x_numerators_formula(long n);  // ballot-number evaluation
std::vector<Int> x_numerators_dp(long n);       // marker-polynomial path DP
std::vector<Int> x_numerators_series(long n);   // [z^(2n)] G
std::vector<Int> y_numerators_formula(long n);
std::vector<Int> y_numerators_dp(long n);
std::vector<Int> y_numerators_series(long n);   // [t^n] H
std::vector<Int> z_numerators_series(long n);   // n! [t^n] V

struct MomentRow {
  long n = 0;
  int r = 0;
  Rat scaled_moment;  // E[M^r] / n^r (X) or / (2n)^r (Y, Z)
  Rat target;
  Rat gap;            // |scaled - target|
};

struct DoublingRow {
  int r = 0;
  long n_small = 0, n_big = 0;
  Rat gap_small, gap_big;
  bool shrank = false;
};

struct ConvergenceReport {
  char param = '?';
  int r_max = 0;
  std::vector<long> n_list;
  std::vector<MomentRow> rows;
  std::vector<DoublingRow> doubling;
  bool doubling_all_ok = true;

  // Float diagnostics, filled for the largest n in the list.
  // X: mean/n vs 2/3 and stdev/n vs sqrt(2)/6; Z: (n-E)/sqrt(n) vs sqrt(pi)/2.
  std::optional<double> mean_ratio, mean_ratio_target;
  std::optional<double> spread_ratio, spread_ratio_target;
};

ConvergenceReport convergence_report(char param, const std::vector<long>& n_list,
                                     int r_max, const LawOptions& opts = {});

}  // namespace treechild::laws
