#pragma once

#include <string>
#include <vector>

#include "core/errors.hpp"
#include "core/numbers.hpp"

namespace treechild {

// Dense polynomial over Q in one marker variable (written x in reports).
class Poly {
 public:
  Poly() = default;
  explicit Poly(Rat c) {
    if (c != 0) c_.push_back(std::move(c));
  }
  explicit Poly(long c) : Poly(Rat(c)) {}

  static Poly x() { return monomial(1, Rat(1)); }
  static Poly monomial(int deg, Rat c) {
    Poly p;
    if (c != 0) {
      p.c_.assign(deg + 1, Rat(0));
      p.c_[deg] = std::move(c);
    }
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Rat coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Rat(0);
    return c_[i];
  }

  Poly& operator+=(const Poly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(const Poly& a) {
    Poly r = a;
    for (auto& v : r.c_) v = -v;
    return r;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    Poly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (size_t j = 0; j < b.c_.size(); ++j)
        if (b.c_[j] != 0) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly scaled(const Rat& s) const {
    if (s == 0) return Poly();
    Poly r = *this;
    for (auto& v : r.c_) v *= s;
    return r;
  }

  bool operator==(const Poly&) const = default;

  Rat eval(const Rat& at) const {
    Rat acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * at + c_[i];
    return acc;
  }
  Rat eval_one() const {
    Rat acc(0);
    for (const auto& v : c_) acc += v;
    return acc;
  }

  // Long division; returns false (and leaves *quot untouched) when the
  // remainder is nonzero.
  static bool divide_exact(const Poly& num, const Poly& den, Poly* quot) {
    if (den.is_zero()) return false;
    std::vector<Rat> rem(num.c_);
    const int dd = den.degree();
    const Rat& lead = den.c_.back();
    std::vector<Rat> q;
    if (static_cast<int>(rem.size()) - 1 >= dd)
      q.assign(rem.size() - dd, Rat(0));
    for (int i = static_cast<int>(rem.size()) - 1; i >= dd; --i) {
      if (rem[i] == 0) continue;
      Rat f = rem[i] / lead;
      q[i - dd] = f;
      for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= f * den.c_[j];
    }
    for (const auto& v : rem)
      if (v != 0) return false;
    Poly result;
    result.c_ = std::move(q);
    result.trim();
    *quot = std::move(result);
    return true;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
      if (c_[i] == 0) continue;
      if (!out.empty()) out += " + ";
      out += treechild::to_string(Rat(c_[i]));
      if (i >= 1) out += "*x";
      if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rat> c_;
};

}  // namespace treechild
