#include "core/laws.hpp"

#include <algorithm>
#include <cmath>

#include "core/errors.hpp"

namespace treechild::laws {

namespace {

Poly poly_one() { return Poly(Rat(1)); }
Poly poly_const(long c) { return Poly(Rat(c)); }
Poly poly_x(long scale = 1, int deg = 1) { return Poly::monomial(deg, Rat(scale)); }

PolySeries series_const(Poly p, long order) {
  return PolySeries::constant(std::move(p), order);
}

}  // namespace

PolySeries g_series(long order) {
  if (order < 1) throw InvalidInputError("g_series needs order >= 1");
  // sqrt(1-4z^2) and sqrt(1-4xz^2)
  PolySeries s_base(order);
  s_base.set_coeff(0, poly_one());
  if (order > 2) {
    PolySeries q_base = s_base;
    s_base.set_coeff(2, poly_const(-4));
    q_base.set_coeff(2, poly_x(-4));
    const PolySeries s = s_base.sqrt();
    const PolySeries q = q_base.sqrt();
    const PolySeries num = (series_const(poly_one(), order) - q).scaled(Poly(Rat(2)));
    const PolySeries sum = s + q;
    return num * (q * sum * sum).inverse();
  }
  return PolySeries::zero(order);
}

PolySeries h_series(long order) {
  if (order < 1) throw InvalidInputError("h_series needs order >= 1");
  PolySeries s_base(order), q_base(order);
  s_base.set_coeff(0, poly_one());
  q_base.set_coeff(0, poly_one());
  if (order > 1) {
    s_base.set_coeff(1, poly_const(-4));
    q_base.set_coeff(1, poly_x(-4, 2));
  }
  const PolySeries s = s_base.sqrt();
  const PolySeries q = q_base.sqrt();
  const PolySeries one = series_const(poly_one(), order);

  // numerator: x (1-s) (1-x + x s - q)
  PolySeries inner = series_const(poly_one() - poly_x(), order);
  inner += s.scaled(poly_x());
  inner -= q;
  PolySeries num = (one - s) * inner;
  num = num.scaled(poly_x());

  // denominator: (1-x) s (1 - 4tx + qs - s - q)
  PolySeries den_inner = one;
  if (order > 1) den_inner -= PolySeries::monomial(poly_x(4), 1, order);
  den_inner += q * s;
  den_inner -= s;
  den_inner -= q;
  PolySeries den = den_inner * s;
  den = den.scaled(poly_one() - poly_x());

  return PolySeries::divide_exact(num, den);
}

PolySeries v_series(long order) {
  if (order < 1) throw InvalidInputError("v_series needs order >= 1");
  PolySeries s_base(order), q_base(order);
  s_base.set_coeff(0, poly_one());
  q_base.set_coeff(0, poly_one());
  if (order > 1) {
    s_base.set_coeff(1, poly_const(-2));
    q_base.set_coeff(1, poly_x(-2, 2));
  }
  const PolySeries s = s_base.sqrt();

  // A = (1 - x - x sqrt(1-2t)) / (1 - 2x + 2tx^2)
  PolySeries num_a = series_const(poly_one() - poly_x(), order) - s.scaled(poly_x());
  PolySeries den_a = series_const(poly_one() - poly_x(2), order);
  if (order > 1) den_a += PolySeries::monomial(poly_x(2, 2), 1, order);
  const PolySeries a = PolySeries::divide_exact(num_a, den_a);

  // B = 1 / sqrt(1-2tx^2)
  const PolySeries b = q_base.sqrt().inverse();

  // V = x^2 (A - B) / (1 - x); the (1-x) factor is removable and the exact
  // division asserts it.
  PolySeries bracket = a - b;
  PolySeries quotient =
      PolySeries::divide_exact(bracket, series_const(poly_one() - poly_x(), order));
  return quotient.scaled(poly_x(1, 2));
}

std::vector<Int> v_row(long n) {
  if (n < 0) throw InvalidInputError("v_row needs n >= 0");
  std::vector<Int> row;  // index i-1, i = 1..2n+1
  Int dfact = 1;
  for (long nn = 1; nn <= n; ++nn) {
    std::vector<Int> cur(2 * nn + 1);
    for (long i = 1; i <= 2 * nn; ++i) {
      Int v = 0;
      if (i - 1 < static_cast<long>(row.size())) v += (2 * nn - i) * row[i - 1];
      if (i >= 2 && i - 2 < static_cast<long>(row.size())) v += (i - 1) * row[i - 2];
      cur[i - 1] = std::move(v);
    }
    dfact *= 2 * nn - 1;
    cur[2 * nn] = dfact;
    row = std::move(cur);
  }
  if (n == 0) row.assign(1, Int(0));
  return row;
}

namespace {

// Nonnegative walk counts M(l,h) = C(l,(l-h)/2) - C(l,(l-h)/2-1) enter the
// X/Y formulas below only through ratio updates; these helpers keep the two
// binomials of each M-value as exact integers.
struct BallotPair {
  Int hi, lo;  // C(l, j) and C(l, j-1)
  Int value() const { return hi - lo; }
};

Int binom(const std::vector<Int>& fact, long a, long b) {
  if (b < 0 || b > a) return 0;
  Int r = fact[a] / (fact[b] * fact[a - b]);
  return r;
}

std::vector<Int> factorials(long upto) {
  std::vector<Int> fact(upto + 1);
  fact[0] = 1;
  for (long i = 1; i <= upto; ++i) fact[i] = fact[i - 1] * i;
  return fact;
}

}  // namespace

std::vector<Int> x_numerators_formula(long n) {
  if (n < 1) throw InvalidInputError("dist_X needs n >= 1");
  const auto fact = factorials(2 * n);
  std::vector<Int> out(n);
  for (long m = 1; m <= n; ++m) {
    // Sum over the height h of the prefix meander before the weighted
    // up-step; the up-step is the m-th up and sits at overall position
    // 2m-1-h, so its weight is its position.
    //   A = M(2m-2-h, h), B = M(2n-2m+1+h, h+1)
    // walked from h = m-1 downwards with exact ratio updates.
    Int a_hi = 1, a_lo = 0;                 // C(m-1, 0), C(m-1, -1)
    long la = m - 1, ja = 0;                // A indices
    const long jb = n - m;                  // constant, B = C(lb, jb)-C(lb, jb-1)
    long lb = 2 * n - m;
    Int b_hi = binom(fact, lb, jb);
    Int b_lo = binom(fact, lb, jb - 1);
    Int acc = 0, term;
    for (long h = m - 1;; --h) {
      term = a_hi - a_lo;
      term *= b_hi - b_lo;
      term *= 2 * m - 1 - h;
      acc += term;
      if (h == 0) break;
      // h -> h-1: (la, ja) -> (la+1, ja+1); lb -> lb-1 with jb fixed.
      a_hi *= la + 1;
      mpz_divexact_ui(a_hi.get_mpz_t(), a_hi.get_mpz_t(), ja + 1);
      if (ja == 0)
        a_lo = 1;  // C(la+1, 0)
      else {
        a_lo *= la + 1;
        mpz_divexact_ui(a_lo.get_mpz_t(), a_lo.get_mpz_t(), ja);
      }
      ++la;
      ++ja;
      b_hi *= lb - jb;
      mpz_divexact_ui(b_hi.get_mpz_t(), b_hi.get_mpz_t(), lb);
      if (b_lo != 0) {
        b_lo *= lb - jb + 1;
        mpz_divexact_ui(b_lo.get_mpz_t(), b_lo.get_mpz_t(), lb);
      }
      --lb;
    }
    out[m - 1] = std::move(acc);
  }
  return out;
}

std::vector<Int> y_numerators_formula(long n) {
  if (n < 1) throw InvalidInputError("dist_Y needs n >= 1");
  const auto fact = factorials(2 * n);
  // W[p] = weighted-step placements: paths of length 2n whose p-th step is
  // the marked up-step; the pointer then lands on any of positions 1..p.
  std::vector<Int> w(2 * n, Int(0));  // index p, p = 1..2n-1
  for (long p = 1; p <= 2 * n - 1; ++p) {
    const long la = p - 1, lb = 2 * n - p;
    long h = std::min(p - 1, lb - 1);
    if ((la - h) % 2) --h;
    if (h < 0) continue;
    long ja = (la - h) / 2, jb = (lb - h - 1) / 2;
    Int a_hi = binom(fact, la, ja), a_lo = binom(fact, la, ja - 1);
    Int b_hi = binom(fact, lb, jb), b_lo = binom(fact, lb, jb - 1);
    Int acc = 0, term;
    for (;; h -= 2) {
      term = a_hi - a_lo;
      term *= b_hi - b_lo;
      acc += term;
      if (h < 2) break;
      // h -> h-2: ja, jb increase by one, la, lb fixed.
      a_hi *= la - ja;
      mpz_divexact_ui(a_hi.get_mpz_t(), a_hi.get_mpz_t(), ja + 1);
      if (ja == 0)
        a_lo = 1;
      else {
        a_lo *= la - ja + 1;
        mpz_divexact_ui(a_lo.get_mpz_t(), a_lo.get_mpz_t(), ja);
      }
      ++ja;
      b_hi *= lb - jb;
      mpz_divexact_ui(b_hi.get_mpz_t(), b_hi.get_mpz_t(), jb + 1);
      if (jb == 0)
        b_lo = 1;
      else {
        b_lo *= lb - jb + 1;
        mpz_divexact_ui(b_lo.get_mpz_t(), b_lo.get_mpz_t(), jb);
      }
      ++jb;
    }
    w[p] = std::move(acc);
  }
  std::vector<Int> out(2 * n - 1);
  Int suf = 0;
  for (long m = 2 * n - 1; m >= 1; --m) {
    suf += w[m];
    out[m - 1] = suf;
  }
  return out;
}

namespace {

// Marker-polynomial DP over bicolored Dyck paths. Shared by the X and Y
// routes; `pointer_mode` decides whether the weighted step contributes
// x^(up-index) * position (X) or x^1 + ... + x^position (Y).
std::vector<Int> marked_dyck_dp(long n, bool pointer_mode) {
  const long deg = pointer_mode ? 2 * n : n;
  // plain[h]: no weighted step yet; marked[h]: polynomial in x.
  std::vector<Int> plain(n + 2, Int(0));
  std::vector<std::vector<Int>> marked(n + 2, std::vector<Int>(deg + 1, Int(0)));
  plain[0] = 1;
  for (long m = 1; m <= 2 * n; ++m) {
    std::vector<Int> nplain(n + 2, Int(0));
    std::vector<std::vector<Int>> nmarked(n + 2, std::vector<Int>(deg + 1, Int(0)));
    const long hmax = std::min(m, 2 * n - m);  // reachable band
    for (long h = 0; h <= std::min(hmax + 1, n); ++h) {
      if (plain[h] != 0) {
        if (h + 1 <= n) {
          nplain[h + 1] += plain[h];
          // weighted up-step placed now, at overall position m
          if (pointer_mode) {
            for (long d = 1; d <= m; ++d) nmarked[h + 1][d] += plain[h];
          } else {
            const long ups = (m - 1 + h) / 2 + 1;  // its index among up-steps
            nmarked[h + 1][ups] += plain[h] * m;
          }
        }
        if (h > 0) nplain[h - 1] += plain[h];
      }
      bool any = false;
      for (const Int& c : marked[h])
        if (c != 0) {
          any = true;
          break;
        }
      if (any) {
        if (h + 1 <= n)
          for (long d = 0; d <= deg; ++d) nmarked[h + 1][d] += marked[h][d];
        if (h > 0)
          for (long d = 0; d <= deg; ++d) nmarked[h - 1][d] += marked[h][d];
      }
    }
    plain = std::move(nplain);
    marked = std::move(nmarked);
  }
  std::vector<Int> out(marked[0].begin() + 1, marked[0].end());
  return out;
}

std::vector<Int> trim_trailing_zeros(std::vector<Int> v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

std::vector<Int> poly_to_numerators(const Poly& p, long scale_factorial = 0) {
  std::vector<Int> out;
  Rat fact(1);
  for (long i = 1; i <= scale_factorial; ++i) fact *= i;
  for (int d = 1; d <= p.degree(); ++d) {
    Rat v = p.coeff(d) * fact;
    if (v.get_den() != 1)
      throw InconsistencyError("series route produced a non-integer count");
    out.push_back(v.get_num());
  }
  return out;
}

}  // namespace

std::vector<Int> x_numerators_dp(long n) { return trim_trailing_zeros(marked_dyck_dp(n, false)); }
std::vector<Int> y_numerators_dp(long n) { return trim_trailing_zeros(marked_dyck_dp(n, true)); }

std::vector<Int> x_numerators_series(long n) {
  const PolySeries g = g_series(2 * n + 1);
  return poly_to_numerators(g.coeff(2 * n));
}

std::vector<Int> y_numerators_series(long n) {
  const PolySeries h = h_series(n + 1);
  return poly_to_numerators(h.coeff(n));
}

std::vector<Int> z_numerators_series(long n) {
  const PolySeries v = v_series(n + 1);
  return poly_to_numerators(v.coeff(n), n);
}

namespace {

DistTable table_from(char param, long n, std::vector<Int> numerators) {
  DistTable t;
  t.param = param;
  t.n = n;
  t.numerators = std::move(numerators);
  t.total = 0;
  t.support_min = 0;
  for (size_t i = 0; i < t.numerators.size(); ++i) {
    if (t.numerators[i] != 0 && t.support_min == 0)
      t.support_min = static_cast<long>(i) + 1;
    t.total += t.numerators[i];
  }
  if (t.total == 0) throw InconsistencyError("empty distribution");
  return t;
}

void require_equal_routes(const char* what, const std::vector<Int>& a,
                          const std::vector<Int>& b) {
  const std::vector<Int> ta = trim_trailing_zeros(a), tb = trim_trailing_zeros(b);
  if (ta != tb)
    throw InconsistencyError(std::string(what) + ": independent routes disagree");
}

}  // namespace

Rat DistTable::mass(long m) const {
  if (m < 1 || m > static_cast<long>(numerators.size())) return Rat(0);
  return make_rat(numerators[m - 1], total);
}

Rat DistTable::moment(int r) const {
  Int acc = 0;
  for (size_t i = 0; i < numerators.size(); ++i) {
    if (numerators[i] == 0) continue;
    Int p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(i + 1),
                  static_cast<unsigned long>(r));
    acc += numerators[i] * p;
  }
  return make_rat(acc, total);
}

long DistTable::support_max() const {
  for (size_t i = numerators.size(); i-- > 0;)
    if (numerators[i] != 0) return static_cast<long>(i) + 1;
  return 0;
}

DistTable dist_X(long n, const LawOptions& opts) {
  std::vector<Int> nums = x_numerators_formula(n);
  if (n <= opts.dual_route_limit) {
    require_equal_routes("dist_X series route", nums, x_numerators_series(n));
    require_equal_routes("dist_X path DP", nums, x_numerators_dp(n));
  }
  return table_from('X', n, std::move(nums));
}

DistTable dist_Y(long n, const LawOptions& opts) {
  std::vector<Int> nums = y_numerators_formula(n);
  if (n <= opts.dual_route_limit) {
    require_equal_routes("dist_Y series route", nums, y_numerators_series(n));
    require_equal_routes("dist_Y path DP", nums, y_numerators_dp(n));
  }
  return table_from('Y', n, std::move(nums));
}

DistTable dist_Z(long n, const LawOptions& opts) {
  if (n < 1) throw InvalidInputError("dist_Z needs n >= 1");
  std::vector<Int> nums = v_row(n);
  if (n <= opts.dual_route_limit)
    require_equal_routes("dist_Z series route", nums, z_numerators_series(n));
  return table_from('Z', n, std::move(nums));
}

ConvergenceReport convergence_report(char param, const std::vector<long>& n_list,
                                     int r_max, const LawOptions& opts) {
  if (n_list.empty()) throw InvalidInputError("convergence report: empty n list");
  if (r_max < 1) throw InvalidInputError("convergence report: r_max >= 1");
  ConvergenceReport rep;
  rep.param = param;
  rep.r_max = r_max;
  rep.n_list = n_list;

  auto target_for = [&](int r) -> Rat {
    switch (param) {
      case 'X': return make_rat(2, r + 2);
      case 'Y': return make_rat(2, static_cast<long>(r + 1) * (r + 2));
      case 'Z': return make_rat(1, r + 1);
    }
    throw InvalidInputError("convergence report: param must be X, Y or Z");
  };

  const long n_max = *std::max_element(n_list.begin(), n_list.end());
  for (long n : n_list) {
    DistTable t;
    switch (param) {
      case 'X': t = dist_X(n, opts); break;
      case 'Y': t = dist_Y(n, opts); break;
      default: t = dist_Z(n, opts); break;
    }
    const long scale = param == 'X' ? n : 2 * n;
    Rat scale_pow(1);
    for (int r = 1; r <= r_max; ++r) {
      scale_pow *= scale;
      MomentRow row;
      row.n = n;
      row.r = r;
      row.scaled_moment = t.moment(r) / scale_pow;
      row.target = target_for(r);
      row.gap = abs(row.scaled_moment - row.target);
      rep.rows.push_back(std::move(row));
    }
    if (n == n_max) {
      const Rat m1 = t.moment(1);
      if (param == 'X') {
        rep.mean_ratio = to_double(m1 / Rat(n));
        rep.mean_ratio_target = 2.0 / 3.0;
        const Rat var = t.moment(2) - m1 * m1;
        rep.spread_ratio = std::sqrt(to_double(var)) / static_cast<double>(n);
        rep.spread_ratio_target = std::sqrt(2.0) / 6.0;
      } else if (param == 'Z') {
        rep.mean_ratio = to_double(Rat(n) - m1) / std::sqrt(static_cast<double>(n));
        rep.mean_ratio_target = std::sqrt(M_PI) / 2.0;
      }
    }
  }

  auto gap_at = [&](long n, int r) -> const Rat& {
    for (const auto& row : rep.rows)
      if (row.n == n && row.r == r) return row.gap;
    throw InvalidInputError("internal: missing moment row");
  };
  for (size_t i = 0; i + 1 < n_list.size(); ++i) {
    if (n_list[i + 1] != 2 * n_list[i]) continue;
    for (int r = 1; r <= r_max; ++r) {
      DoublingRow d;
      d.r = r;
      d.n_small = n_list[i];
      d.n_big = n_list[i + 1];
      d.gap_small = gap_at(d.n_small, r);
      d.gap_big = gap_at(d.n_big, r);
      d.shrank = d.gap_big < d.gap_small;
      rep.doubling_all_ok = rep.doubling_all_ok && d.shrank;
      rep.doubling.push_back(std::move(d));
    }
  }
  return rep;
}

}  // namespace treechild::laws
