#pragma once

#include <vector>

#include "core/errors.hpp"
#include "core/numbers.hpp"
#include "core/poly.hpp"

namespace treechild {

// Coefficient-ring glue for PowerSeries<R>.
template <class R>
struct CoeffTraits;

template <>
struct CoeffTraits<Rat> {
  static Rat zero() { return Rat(0); }
  static Rat one() { return Rat(1); }
  static bool is_zero(const Rat& v) { return v == 0; }
  static bool exact_div(Rat* q, const Rat& a, const Rat& b) {
    if (b == 0) return false;
    *q = a / b;
    return true;
  }
  static void div_small(Rat* v, long d) { *v /= d; }
  static void mul_small(Rat* v, long d) { *v *= d; }
};

template <>
struct CoeffTraits<Poly> {
  static Poly zero() { return Poly(); }
  static Poly one() { return Poly(Rat(1)); }
  static bool is_zero(const Poly& v) { return v.is_zero(); }
  static bool exact_div(Poly* q, const Poly& a, const Poly& b) {
    return Poly::divide_exact(a, b, q);
  }
  static void div_small(Poly* v, long d) { *v = v->scaled(Rat(1, d)); }
  static void mul_small(Poly* v, long d) { *v = v->scaled(Rat(d)); }
};

// Dense truncated power series with exact coefficients: coefficients of
// z^0..z^(order-1) are known, everything beyond is O(z^order). Operations
// track the surviving precision (min of operand orders; derivatives lose one
// order, valuation shifts move it).
template <class R>
class PowerSeries {
  using T = CoeffTraits<R>;

 public:
  explicit PowerSeries(long order) : c_(check_order(order), T::zero()) {}

  static PowerSeries zero(long order) { return PowerSeries(order); }
  static PowerSeries constant(R value, long order) {
    PowerSeries s(order);
    if (order > 0) s.c_[0] = std::move(value);
    return s;
  }
  static PowerSeries monomial(R value, long exp, long order) {
    PowerSeries s(order);
    if (exp < order) s.c_[exp] = std::move(value);
    return s;
  }

  long order() const { return static_cast<long>(c_.size()); }

  const R& coeff(long i) const {
    if (i < 0 || i >= order())
      throw InvalidInputError("series coefficient index beyond truncation order");
    return c_[i];
  }
  void set_coeff(long i, R v) { c_.at(i) = std::move(v); }

  // First index with a nonzero coefficient, or order() if none survive.
  long valuation() const {
    for (long i = 0; i < order(); ++i)
      if (!T::is_zero(c_[i])) return i;
    return order();
  }

  PowerSeries truncated(long new_order) const {
    PowerSeries r(std::min(new_order, order()));
    for (long i = 0; i < r.order(); ++i) r.c_[i] = c_[i];
    return r;
  }

  PowerSeries& operator+=(const PowerSeries& o) {
    align(o.order());
    for (long i = 0; i < order(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  PowerSeries& operator-=(const PowerSeries& o) {
    align(o.order());
    for (long i = 0; i < order(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
  friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
  friend PowerSeries operator-(const PowerSeries& a) {
    PowerSeries r = a;
    for (auto& v : r.c_) v = T::zero() - v;
    return r;
  }

  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries r(std::min(a.order(), b.order()));
    for (long i = 0; i < a.order() && i < r.order(); ++i) {
      if (T::is_zero(a.c_[i])) continue;
      const long jmax = std::min(b.order(), r.order() - i);
      for (long j = 0; j < jmax; ++j)
        if (!T::is_zero(b.c_[j])) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
  }
  PowerSeries& operator*=(const PowerSeries& o) { return *this = *this * o; }

  PowerSeries scaled(const R& s) const {
    PowerSeries r = *this;
    for (auto& v : r.c_) v = v * s;
    return r;
  }
  PowerSeries scaled_small(long s) const {
    PowerSeries r = *this;
    for (auto& v : r.c_) T::mul_small(&v, s);
    return r;
  }

  PowerSeries derivative() const {
    if (order() <= 1)
      throw InvalidInputError("derivative needs at least one surviving order");
    PowerSeries r(order() - 1);
    for (long i = 0; i + 1 < order(); ++i) {
      r.c_[i] = c_[i + 1];
      T::mul_small(&r.c_[i], i + 1);
    }
    return r;
  }

  // Antiderivative with constant term c0; gains one order.
  PowerSeries antiderivative(R c0) const {
    PowerSeries r(order() + 1);
    r.c_[0] = std::move(c0);
    for (long i = 0; i < order(); ++i) {
      r.c_[i + 1] = c_[i];
      T::div_small(&r.c_[i + 1], i + 1);
    }
    return r;
  }

  // Multiplication by z^m (coefficients known one extra order per shift).
  PowerSeries shifted_up(long m) const {
    PowerSeries r(order() + m);
    for (long i = 0; i < order(); ++i) r.c_[i + m] = c_[i];
    return r;
  }

  // Division by z^m; the removed low-order coefficients must vanish.
  PowerSeries shifted_down(long m) const {
    if (m > order())
      throw InvalidInputError("valuation shift exceeds truncation order");
    for (long i = 0; i < m; ++i)
      if (!T::is_zero(c_[i]))
        throw InconsistencyError(
            "valuation shift would drop a nonzero coefficient at z^" +
            std::to_string(i));
    PowerSeries r(order() - m);
    for (long i = 0; i < r.order(); ++i) r.c_[i] = c_[i + m];
    return r;
  }

  // Multiplicative inverse; the constant term must be invertible in R.
  PowerSeries inverse() const {
    if (order() == 0 || T::is_zero(c_[0]))
      throw InvalidInputError("series inverse needs a nonzero constant term");
    PowerSeries r(order());
    R inv0 = T::zero();
    if (!T::exact_div(&inv0, T::one(), c_[0]))
      throw InvalidInputError("series inverse: constant term is not a unit");
    r.c_[0] = inv0;
    for (long m = 1; m < order(); ++m) {
      R acc = T::zero();
      for (long i = 0; i < m; ++i)
        if (!T::is_zero(r.c_[i]) && !T::is_zero(c_[m - i])) acc += r.c_[i] * c_[m - i];
      r.c_[m] = T::zero() - acc * inv0;
    }
    return r;
  }

  // Square root with constant term one.
  PowerSeries sqrt() const {
    if (order() == 0 || !(c_[0] == T::one()))
      throw InvalidInputError("series sqrt requires constant term 1");
    PowerSeries r(order());
    r.c_[0] = T::one();
    for (long m = 1; m < order(); ++m) {
      R acc = c_[m];
      for (long i = 1; i < m; ++i)
        if (!T::is_zero(r.c_[i]) && !T::is_zero(r.c_[m - i])) acc -= r.c_[i] * r.c_[m - i];
      T::div_small(&acc, 2);
      r.c_[m] = std::move(acc);
    }
    return r;
  }

  // Exact quotient a/b where b may have positive valuation; every
  // coefficient-level division must be exact, otherwise the quotient does
  // not exist in R[[z]] and we throw.
  static PowerSeries divide_exact(const PowerSeries& a, const PowerSeries& b) {
    const long v = b.valuation();
    if (v == b.order())
      throw InvalidInputError("series division by zero series");
    for (long i = 0; i < std::min(v, a.order()); ++i)
      if (!T::is_zero(a.c_[i]))
        throw InconsistencyError("series division: numerator valuation too low");
    const long res_order = std::min(a.order(), b.order()) - v;
    PowerSeries q(res_order);
    for (long m = 0; m < res_order; ++m) {
      R acc = a.c_[m + v];
      for (long i = 0; i < m; ++i)
        if (!T::is_zero(q.c_[i]) && !T::is_zero(b.c_[m + v - i]))
          acc -= q.c_[i] * b.c_[m + v - i];
      R qm = T::zero();
      if (!T::exact_div(&qm, acc, b.c_[v]))
        throw InconsistencyError(
            "series division is not exact at z^" + std::to_string(m));
      q.c_[m] = std::move(qm);
    }
    return q;
  }

  bool operator==(const PowerSeries&) const = default;

  // True when the two series agree on all shared known coefficients up to
  // `upto` (exclusive); -1 compares the full shared range.
  bool agrees_with(const PowerSeries& o, long upto = -1) const {
    long lim = std::min(order(), o.order());
    if (upto >= 0) lim = std::min(lim, upto);
    for (long i = 0; i < lim; ++i)
      if (!(c_[i] == o.c_[i])) return false;
    return true;
  }

 private:
  static long check_order(long order) {
    if (order < 0) throw InvalidInputError("series order must be nonnegative");
    return order;
  }
  void align(long other_order) {
    if (other_order < order()) c_.resize(other_order);
  }

  std::vector<R> c_;
};

using QSeries = PowerSeries<Rat>;
using PolySeries = PowerSeries<Poly>;

}  // namespace treechild
