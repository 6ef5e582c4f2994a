#include "core/series.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <thread>

#include "core/errors.hpp"

namespace treechild::series {

QSeries dyck_series(long order) {
  if (order < 1) throw InvalidInputError("dyck_series needs order >= 1");
  QSeries d(order);
  std::vector<Int> cat{1};
  for (long m = 1; 2 * m < order; ++m) {
    Int acc = 0;
    for (long i = 0; i < m; ++i) acc += cat[i] * cat[m - 1 - i];
    cat.push_back(std::move(acc));
  }
  for (long m = 0; 2 * m < order; ++m) d.set_coeff(2 * m, Rat(cat[m]));
  return d;
}

QSeries e_series(long order) {
  return dyck_series(std::max<long>(order - 1, 1)).shifted_up(1).truncated(order);
}

QSeries UPolySeries::eval_at(const QSeries& value) const {
  if (coeffs.empty()) return QSeries::zero(value.order());
  QSeries acc = coeffs.back();
  for (long m = u_degree() - 1; m >= 0; --m) acc = acc * value + coeffs[m];
  return acc;
}

QSeries apply_length_weight(const QSeries& f, int k) {
  QSeries r = f;
  for (long q = 0; q < r.order(); ++q) {
    if (r.coeff(q) == 0) continue;
    Rat v = r.coeff(q);
    v *= q + k - 1;
    r.set_coeff(q, std::move(v));
  }
  return r;
}

namespace {

// One ladder level: F_{k} from F_{k-1}. The divided difference and the
// M_up product both run in Horner form, so a level costs O(u_max) series
// multiplications.
void ladder_advance(std::vector<QSeries>& f, const QSeries& e, int new_k) {
  const long umax = static_cast<long>(f.size()) - 1;
  // G_m = F_m + E * G_{m+1}
  std::vector<QSeries> g(f.size(), QSeries::zero(e.order()));
  g[umax] = f[umax];
  for (long m = umax - 1; m >= 0; --m) g[m] = f[m] + e * g[m + 1];
  // H_m = E * (G_{m-1} + H_{m-1}), H_0 = 0
  std::vector<QSeries> h(f.size(), QSeries::zero(e.order()));
  for (long m = 1; m <= umax; ++m) h[m] = e * (g[m - 1] + h[m - 1]);
  for (long m = 0; m <= umax; ++m) f[m] = apply_length_weight(h[m], new_k);
}

std::vector<QSeries> ladder_base(long order) {
  // F_0 = 1; u-degrees above order-1 vanish modulo z^order because the
  // coefficient of u^m has z-valuation >= m.
  std::vector<QSeries> f(order, QSeries::zero(order));
  f[0] = QSeries::constant(Rat(1), order);
  return f;
}

}  // namespace

UPolySeries f_k(int k, long order) {
  if (k < 0) throw InvalidInputError("f_k needs k >= 0");
  if (order < 1) throw InvalidInputError("f_k needs order >= 1");
  const QSeries e = e_series(order);
  std::vector<QSeries> f = ladder_base(order);
  for (int level = 1; level <= k; ++level) ladder_advance(f, e, level);
  return UPolySeries{std::move(f)};
}

QSeries b_k_series(int k, long order) {
  const UPolySeries fk = f_k(k, order);
  return fk.eval_at(e_series(order)) * dyck_series(order);
}

std::vector<QSeries> b_series_upto(int k_max, long order) {
  const QSeries e = e_series(order);
  const QSeries d = dyck_series(order);
  std::vector<QSeries> f = ladder_base(order);
  std::vector<QSeries> out;
  out.push_back(UPolySeries{f}.eval_at(e) * d);  // B_0 = D
  for (int k = 1; k <= k_max; ++k) {
    ladder_advance(f, e, k);
    out.push_back(UPolySeries{f}.eval_at(e) * d);
  }
  return out;
}

Rat GammaTable::value(int i, int k) {
  if (k < 1 || i < 0 || i > k)
    throw InvalidInputError("gamma table indices need 0 <= i <= k, k >= 1");
  if (k >= static_cast<int>(rows_.size())) extend(k);
  return rows_[k][i];
}

void GammaTable::extend(int k) {
  for (int kk = static_cast<int>(rows_.size()); kk <= k; ++kk) {
    std::vector<Rat> row(kk + 1, Rat(0));
    for (int i = 1; i <= kk; ++i)
      row[i] = make_rat(static_cast<long>(i + 3 * kk - 3) * (i + 3 * kk - 5), i) *
               rows_[kk - 1][i - 1];
    Rat head(0);
    for (int i = 1; i <= kk; ++i) head -= row[i];
    row[0] = std::move(head);
    rows_.push_back(std::move(row));
  }
}

namespace {

// (1-2w)^(-alpha) via coef_{m+1} = coef_m * 2(alpha+m)/(m+1).
QSeries negative_power_series(const Rat& alpha, long order) {
  QSeries s(order);
  Rat c(1);
  for (long m = 0; m < order; ++m) {
    s.set_coeff(m, c);
    c *= 2 * (alpha + m);
    c /= m + 1;
  }
  return s;
}

}  // namespace

QSeries c_k_series_gamma(int k, long order) {
  if (k < 0) throw InvalidInputError("c_k_series needs k >= 0");
  if (k == 0) {
    // C_0 = 1 - sqrt(1-2w)
    QSeries base(order);
    base.set_coeff(0, Rat(1));
    if (order > 1) base.set_coeff(1, Rat(-2));
    return QSeries::constant(Rat(1), order) - base.sqrt();
  }
  GammaTable gamma;
  QSeries acc(order);
  for (int i = 0; i <= k; ++i) {
    const Rat alpha = make_rat(i + 3 * k - 1, 2);
    acc += negative_power_series(alpha, order).scaled(gamma.value(i, k));
  }
  return acc;
}

QSeries c_k_series_ode(int k, long order) {
  if (k < 0) throw InvalidInputError("c_k_series needs k >= 0");
  if (k == 0) return c_k_series_gamma(0, order);
  // Each level needs two extra orders of its predecessor for the second
  // derivative on the right-hand side.
  QSeries prev = c_k_series_ode(k - 1, order + 2);
  QSeries rhs = prev.derivative().derivative();
  QSeries c(std::min(order, rhs.order() + 1));
  c.set_coeff(0, Rat(0));  // C_k(0) = 0
  for (long m = 0; m + 1 < c.order(); ++m) {
    Rat v = rhs.coeff(m) + Rat(2 * m + 3 * k - 1) * c.coeff(m);
    v /= m + 1;
    c.set_coeff(m + 1, std::move(v));
  }
  return c;
}

QSeries c_k_series(int k, long order) {
  QSeries a = c_k_series_gamma(k, order);
  QSeries b = c_k_series_ode(k, order);
  if (!a.agrees_with(b))
    throw InconsistencyError("C_" + std::to_string(k) +
                             " closed form and ODE route disagree");
  return a;
}

QSeries substitute_two_z_squared(const QSeries& f) {
  QSeries r(2 * f.order());
  Rat p(1);
  for (long m = 0; m < f.order(); ++m) {
    if (f.coeff(m) != 0) r.set_coeff(2 * m, f.coeff(m) * p);
    p *= 2;
  }
  return r;
}

QSeries t_apply(const QSeries& f) {
  QSeries d = f.derivative();
  QSeries shifted = d.shifted_up(1).truncated(d.order()).scaled_small(2);
  return d - shifted;
}

bool t_operator_check(int k, long order) {
  if (k < 1) throw InvalidInputError("t_operator_check needs k >= 1");
  if (order < k + 2) throw InvalidInputError("t_operator_check: order too small");
  QSeries c = c_k_series_gamma(k, order);
  for (int j = 3 * k - 1; j <= 4 * k - 1; ++j)
    c = t_apply(c) - c.truncated(c.order() - 1).scaled_small(j);
  for (long m = 0; m < c.order(); ++m)
    if (c.coeff(m) != 0) return false;
  return true;
}

bool d2_commutation_check(unsigned seed, long order) {
  if (order < 4) throw InvalidInputError("commutation check: order too small");
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 4);
  QSeries f(order);
  for (long m = 0; m < order; ++m) f.set_coeff(m, make_rat(num(rng), den(rng)));
  const QSeries lhs = t_apply(f).derivative().derivative();
  QSeries d2 = f.derivative().derivative();
  const QSeries rhs = t_apply(d2) - d2.truncated(d2.order() - 1).scaled_small(4);
  return lhs.agrees_with(rhs);
}

GfIdentityResult verify_gf_identity(int k, long order) {
  if (k < 0 || order < 1)
    throw InvalidInputError("verify_gf_identity needs k >= 0, order >= 1");
  const QSeries bk = b_k_series(k, order);
  const long w_order = order / 2 + 2;
  const QSeries ck = c_k_series(k, w_order);

  QSeries lhs = bk.scaled_small(2);
  QSeries rhs = substitute_two_z_squared(ck);
  if (k == 0)
    lhs = lhs.shifted_up(2);  // 2 z^2 B_0 = C_0(2z^2)
  else if (k > 1)
    rhs = rhs.shifted_up(2 * (k - 1));

  GfIdentityResult res{k, order, true, -1};
  const long lim = std::min({lhs.order(), rhs.order(), order});
  for (long i = 0; i < lim; ++i) {
    if (lhs.coeff(i) != rhs.coeff(i)) {
      res.passed = false;
      res.first_mismatch = i;
      break;
    }
  }
  return res;
}

std::vector<GfIdentityResult> verify_gf_identity_upto(int k_max, long order,
                                                      int jobs) {
  const long ladder_order = order > 0 ? order : 2 * k_max + 40;
  const std::vector<QSeries> bs = b_series_upto(k_max, ladder_order);

  std::vector<GfIdentityResult> out(k_max + 1);
  std::atomic<int> next_k{0};
  auto worker = [&] {
    for (int k; (k = next_k.fetch_add(1)) <= k_max;) {
      const long my_order = order > 0 ? order : 2 * k + 40;
      const QSeries ck = c_k_series(k, my_order / 2 + 2);
      QSeries lhs = bs[k].truncated(my_order).scaled_small(2);
      QSeries rhs = substitute_two_z_squared(ck);
      if (k == 0)
        lhs = lhs.shifted_up(2);
      else if (k > 1)
        rhs = rhs.shifted_up(2 * (k - 1));
      GfIdentityResult res{k, my_order, true, -1};
      const long lim = std::min({lhs.order(), rhs.order(), my_order});
      for (long i = 0; i < lim; ++i)
        if (lhs.coeff(i) != rhs.coeff(i)) {
          res.passed = false;
          res.first_mismatch = i;
          break;
        }
      out[k] = res;
    }
  };
  const int nthreads = std::max(1, std::min(jobs, k_max + 1));
  if (nthreads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return out;
}

}  // namespace treechild::series
