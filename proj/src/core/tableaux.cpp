#include "core/tableaux.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

#include "core/errors.hpp"

namespace treechild::tableaux {

using json = nlohmann::ordered_json;
using words::Word;
using words::WordClass;
using words::WordClassSpec;

void TableauShape::validate() const {
  if (top_len < 0 || middle_len < 0 || top_len > middle_len)
    throw InvalidInputError("tableau shape: need 0 <= top_len <= middle_len");
  int prev = 0;
  for (int c : bottom_cols) {
    if (c < 1 || c > middle_len || c <= prev)
      throw InvalidInputError("tableau shape: bottom columns must be a sorted "
                              "subset of 1..middle_len");
    prev = c;
  }
}

void Tableau::validate() const {
  shape.validate();
  if (static_cast<int>(top.size()) != shape.top_len ||
      static_cast<int>(middle.size()) != shape.middle_len ||
      bottom.size() != shape.bottom_cols.size())
    throw InvalidInputError("tableau: row sizes do not match shape");

  const int total = shape.total_cells();
  std::vector<char> seen(total + 1, 0);
  auto visit = [&](int v) {
    if (v < 1 || v > total || seen[v])
      throw InvalidInputError("tableau: entries must be a permutation of 1..N");
    seen[v] = 1;
  };
  for (int v : bottom) visit(v);
  for (int v : middle) visit(v);
  for (int v : top) visit(v);

  for (int c = 1; c < shape.middle_len; ++c)
    if (middle[c - 1] >= middle[c])
      throw InvalidInputError("tableau: middle row must increase");
  for (int c = 1; c < shape.top_len; ++c)
    if (top[c - 1] >= top[c])
      throw InvalidInputError("tableau: top row must increase");
  // Bottom row: walls between adjacent boxes, no horizontal condition.
  for (size_t i = 0; i < bottom.size(); ++i) {
    const int col = shape.bottom_cols[i];
    if (bottom[i] >= middle[col - 1])
      throw InvalidInputError("tableau: columns must increase bottom to top");
  }
  for (int c = 1; c <= shape.top_len; ++c)
    if (middle[c - 1] >= top[c - 1])
      throw InvalidInputError("tableau: columns must increase bottom to top");
}

std::string Tableau::to_json() const {
  json rows = json::array();
  json bot = json::array();
  size_t bi = 0;
  for (int c = 1; c <= shape.middle_len; ++c) {
    if (bi < shape.bottom_cols.size() && shape.bottom_cols[bi] == c)
      bot.push_back(bottom[bi++]);
    else
      bot.push_back(nullptr);
  }
  rows.push_back(bot);
  rows.push_back(middle);
  json t = json::array();
  for (int v : top) t.push_back(v);
  rows.push_back(t);
  json doc;
  doc["rows"] = rows;
  return doc.dump();
}

Tableau Tableau::from_json(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InvalidInputError(std::string("tableau JSON: ") + e.what());
  }
  if (!doc.contains("rows") || !doc["rows"].is_array() || doc["rows"].size() != 3)
    throw InvalidInputError("tableau JSON: expected three rows (bottom to top)");
  const json& rows = doc["rows"];
  Tableau t;
  t.shape.middle_len = static_cast<int>(rows[1].size());
  for (size_t c = 0; c < rows[0].size(); ++c) {
    if (rows[0][c].is_null()) continue;
    t.shape.bottom_cols.push_back(static_cast<int>(c) + 1);
    t.bottom.push_back(rows[0][c].get<int>());
  }
  for (const auto& v : rows[1]) t.middle.push_back(v.get<int>());
  for (const auto& v : rows[2]) t.top.push_back(v.get<int>());
  t.shape.top_len = static_cast<int>(t.top.size());
  t.validate();
  return t;
}

TableauShape shape_for(const WordClassSpec& spec,
                       const std::optional<Word>& word) {
  TableauShape s;
  switch (spec.cls) {
    case WordClass::A:
      s.top_len = spec.n;
      s.middle_len = spec.n;
      s.bottom_cols.resize(spec.n);
      std::iota(s.bottom_cols.begin(), s.bottom_cols.end(), 1);
      break;
    case WordClass::C:
    case WordClass::H:
      s.top_len = spec.k;
      s.middle_len = spec.n;
      s.bottom_cols.resize(spec.n);
      std::iota(s.bottom_cols.begin(), s.bottom_cols.end(), 1);
      break;
    case WordClass::B: {
      s.top_len = spec.n;
      s.middle_len = spec.n;
      if (!word)
        throw InvalidInputError(
            "class B tableau shape depends on the word's thrice-letters");
      std::vector<int> counts(spec.n, 0);
      for (int x : word->letters) ++counts[x - 1];
      for (int i = 0; i < spec.n; ++i)
        if (counts[i] == 3) s.bottom_cols.push_back(i + 1);
      break;
    }
  }
  return s;
}

Tableau word_to_tableau(const Word& word, const WordClassSpec& spec) {
  if (spec.cls == WordClass::H)
    throw InvalidInputError("tableau correspondence is defined for classes A/B/C");
  if (!words::is_valid(word, spec))
    throw InvalidInputError("word_to_tableau requires a valid word");

  Tableau t;
  t.shape = shape_for(spec, word);
  t.bottom.assign(t.shape.bottom_cols.size(), 0);
  t.middle.assign(t.shape.middle_len, 0);
  t.top.assign(t.shape.top_len, 0);

  // Row index of the next free box per column, bottom-to-top. Columns with a
  // bottom box start at row 0, the others at row 1.
  std::vector<int> next_row(spec.n, 1);
  std::vector<int> bottom_slot(spec.n + 1, -1);
  for (size_t i = 0; i < t.shape.bottom_cols.size(); ++i) {
    bottom_slot[t.shape.bottom_cols[i]] = static_cast<int>(i);
    next_row[t.shape.bottom_cols[i] - 1] = 0;
  }

  for (size_t m = 0; m < word.letters.size(); ++m) {
    const int col = word.letters[m];
    const int entry = static_cast<int>(m) + 1;
    switch (next_row[col - 1]++) {
      case 0: t.bottom[bottom_slot[col]] = entry; break;
      case 1: t.middle[col - 1] = entry; break;
      case 2: t.top[col - 1] = entry; break;
      default:
        throw InvalidInputError("word places more than three letters in one column");
    }
  }
  t.validate();
  return t;
}

Word tableau_to_word(const Tableau& tab, const WordClassSpec& spec) {
  if (spec.cls == WordClass::H)
    throw InvalidInputError("tableau correspondence is defined for classes A/B/C");
  tab.validate();
  if (spec.cls == WordClass::B) {
    if (tab.shape.top_len != spec.n || tab.shape.middle_len != spec.n ||
        static_cast<int>(tab.shape.bottom_cols.size()) != spec.k)
      throw InvalidInputError("tableau shape does not match the word class");
  } else if (tab.shape != shape_for(spec, std::nullopt)) {
    throw InvalidInputError("tableau shape does not match the word class");
  }

  const int total = tab.shape.total_cells();
  std::vector<int> col_of(total + 1, 0);
  for (size_t i = 0; i < tab.bottom.size(); ++i)
    col_of[tab.bottom[i]] = tab.shape.bottom_cols[i];
  for (int c = 1; c <= tab.shape.middle_len; ++c) col_of[tab.middle[c - 1]] = c;
  for (int c = 1; c <= tab.shape.top_len; ++c) col_of[tab.top[c - 1]] = c;

  Word w;
  w.letters.reserve(total);
  for (int v = 1; v <= total; ++v) w.letters.push_back(col_of[v]);
  if (!words::is_valid(w, spec))
    throw InvalidInputError("tableau does not correspond to a valid word");
  return w;
}

const Int YTable::kZero = 0;

void YTable::extend(int k, int l1, int l2) {
  const int nk = std::max(dim_k_, k + 1);
  const int n1 = std::max(dim_l1_, l1 + 1);
  const int n2 = std::max(dim_l2_, l2 + 1);
  if (nk == dim_k_ && n1 == dim_l1_ && n2 == dim_l2_) return;

  std::vector<Int> fresh(static_cast<size_t>(nk) * n1 * n2);
  auto at = [&](int a, int b, int c) -> Int& {
    return fresh[(static_cast<size_t>(a) * n1 + b) * n2 + c];
  };
  for (int a = 0; a < nk; ++a)
    for (int b = 0; b < n1; ++b)
      for (int c = 0; c < n2; ++c) {
        if (b + c < a) continue;  // outside the cone: stays 0
        if (a == 0 && b == 0 && c == 0) {
          at(a, b, c) = 1;
          continue;
        }
        Int v = 0;
        if (a > 0) v += at(a - 1, b, c);
        if (b > 0) v += at(a, b - 1, c);
        if (c > 0) v += (2 * c + b + a - 1) * at(a, b, c - 1);
        at(a, b, c) = std::move(v);
      }
  cells_ = std::move(fresh);
  dim_k_ = nk;
  dim_l1_ = n1;
  dim_l2_ = n2;
}

const Int& YTable::value(int k, int l1, int l2) {
  if (k < 0 || l1 < 0 || l2 < 0 || l1 + l2 < k) return kZero;
  if (k >= dim_k_ || l1 >= dim_l1_ || l2 >= dim_l2_) extend(k, l1, l2);
  return cells_[(static_cast<size_t>(k) * dim_l1_ + l1) * dim_l2_ + l2];
}

Int YTable::value_or_zero(int k, int l1, int l2) { return value(k, l1, l2); }

Int y_count(int k, int l1, int l2) {
  YTable table;
  return table.value_or_zero(k, l1, l2);
}

std::string IdentityCheckReport::summary() const {
  std::ostringstream out;
  if (passed)
    out << "tableau identity holds for all 0 <= k <= n <= " << max_n << " ("
        << checks << " checks, " << seconds << " s)";
  else
    out << "tableau identity FAILS first at n=" << fail_n << " k=" << fail_k;
  return out.str();
}

namespace {

// Slab of the cone at fixed s = k + l1 + l2, restricted to l1 + l2 <= max_n.
// Cells are addressed by (k, l1) with l2 implied.
struct Slab {
  int s = 0;
  int max_n = 0;
  int k_lo = 0, k_hi = -1;
  std::vector<long> offset;  // per k - k_lo, start index into values
  std::vector<Int> values;

  void build(int s_, int max_n_) {
    s = s_;
    max_n = max_n_;
    k_lo = std::max(0, s - max_n);
    k_hi = s / 2;
    offset.assign(std::max(0, k_hi - k_lo + 1) + 1, 0);
    long total = 0;
    for (int k = k_lo; k <= k_hi; ++k) {
      offset[k - k_lo] = total;
      total += (s - k) + 1;  // l1 = 0..s-k
    }
    if (!offset.empty()) offset.back() = total;
    values.assign(total, Int(0));
  }

  bool contains(int k, int l1) const {
    return k >= k_lo && k <= k_hi && l1 >= 0 && l1 <= s - k;
  }
  Int& at(int k, int l1) { return values[offset[k - k_lo] + l1]; }
  const Int& get(int k, int l1) const {
    static const Int zero = 0;
    if (!contains(k, l1)) return zero;
    return values[offset[k - k_lo] + l1];
  }
};

}  // namespace

IdentityCheckReport verify_tableau_identity(int max_n) {
  if (max_n < 0) throw InvalidInputError("verify_tableau_identity: max_n >= 0");
  const auto t0 = std::chrono::steady_clock::now();

  // Target values harvested while streaming slabs.
  std::vector<std::vector<Int>> b_side(max_n + 1), c_side(max_n + 1);
  for (int n = 0; n <= max_n; ++n) {
    b_side[n].resize(n + 1);
    c_side[n].resize(n + 1);
  }

  Slab prev, cur;
  for (int s = 0; s <= 2 * max_n; ++s) {
    cur.build(s, max_n);
    for (int k = cur.k_lo; k <= cur.k_hi; ++k) {
      const int lsum = s - k;  // l1 + l2
      for (int l1 = 0; l1 <= lsum; ++l1) {
        const int l2 = lsum - l1;
        Int v = 0;
        if (s == 0) {
          v = 1;
        } else {
          if (k > 0) v += prev.get(k - 1, l1);
          if (l1 > 0) v += prev.get(k, l1 - 1);
          if (l2 > 0) {
            Int term = prev.get(k, l1);
            term *= 2 * l2 + l1 + k - 1;
            v += term;
          }
        }
        cur.at(k, l1) = std::move(v);
      }
    }
    // Harvest y_{n,n-k,k} (s = 2n) and y_{k,0,n} (s = k + n).
    if (s % 2 == 0 && s / 2 <= max_n) {
      const int n = s / 2;
      for (int k = 0; k <= n; ++k) b_side[n][k] = cur.get(n, n - k);
    }
    for (int k = cur.k_lo; k <= cur.k_hi; ++k) {
      const int n = s - k;
      if (n <= max_n) c_side[n][k] = cur.get(k, 0);
    }
    prev = std::move(cur);
  }

  IdentityCheckReport report;
  report.max_n = max_n;
  for (int n = 0; n <= max_n && report.passed; ++n) {
    for (int k = n; k >= 0 && report.passed; --k) {
      const int d = n - k;
      Int lhs = b_side[n][k] * factorial(d + 1);
      Int rhs = c_side[n][k] * pow2(d);
      ++report.checks;
      if (lhs != rhs) {
        report.passed = false;
        report.fail_n = n;
        report.fail_k = k;
      }
    }
  }
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

namespace {

// y_{k,0,n} via the two-dimensional restriction of the recurrence.
Int y_plane_c(long k, long n) {
  std::vector<Int> col(k + 1, Int(0));  // col[kk] = y_{kk,0,j}
  col[0] = 1;                           // j = 0
  for (long j = 1; j <= n; ++j) {
    std::vector<Int> next(k + 1);
    for (long kk = 0; kk <= std::min(k, j); ++kk) {
      Int v = kk > 0 ? next[kk - 1] : Int(0);
      v += (2 * j + kk - 1) * col[kk];
      next[kk] = std::move(v);
    }
    col = std::move(next);
  }
  return col[k];
}

// y_{m, m-k, k} via planes of (l1, l2) streamed over the first coordinate.
Int y_box_b(long m, long k) {
  if (k > m) return 0;
  const long L1 = m - k, L2 = k;
  auto idx = [&](long a, long b) { return a * (L2 + 1) + b; };
  std::vector<Int> plane((L1 + 1) * (L2 + 1));
  // kk = 0 plane: y_{0,l1,l2} over l1 <= L1, l2 <= L2
  for (long a = 0; a <= L1; ++a)
    for (long b = 0; b <= L2; ++b) {
      if (a == 0 && b == 0) {
        plane[idx(a, b)] = 1;
      } else {
        Int v = a > 0 ? plane[idx(a - 1, b)] : Int(0);
        if (b > 0) v += (2 * b + a - 1) * plane[idx(a, b - 1)];
        plane[idx(a, b)] = std::move(v);
      }
    }
  for (long kk = 1; kk <= m; ++kk) {
    std::vector<Int> next((L1 + 1) * (L2 + 1));
    for (long a = 0; a <= L1; ++a)
      for (long b = 0; b <= L2; ++b) {
        if (a + b < kk) continue;
        Int v = plane[idx(a, b)];
        if (a > 0) v += next[idx(a - 1, b)];
        if (b > 0) v += (2 * b + a + kk - 1) * next[idx(a, b - 1)];
        next[idx(a, b)] = std::move(v);
      }
    plane = std::move(next);
  }
  return plane[idx(L1, L2)];
}

}  // namespace

Int tc_count(long n, long k) {
  if (n <= k || k < 0)
    throw InvalidInputError("tc_count requires n > k >= 0");
  // Route 1: n!/(n-k)! * c_{n-1,k} with c_{n-1,k} = y_{k,0,n-1}.
  Int c_route = y_plane_c(k, n - 1);
  {
    Int falling = 1;
    for (long i = n - k + 1; i <= n; ++i) falling *= i;
    c_route *= falling;
  }
  // Route 2: n!/2^(n-k-1) * b_{n-1,k} with b_{n-1,k} = y_{n-1,n-1-k,k}.
  Rat b_route(factorial(n) * y_box_b(n - 1, k), pow2(n - k - 1));
  b_route.canonicalize();
  if (b_route.get_den() != 1 || b_route.get_num() != c_route)
    throw InconsistencyError(
        "tree-child count mismatch between word models at n=" +
        std::to_string(n) + " k=" + std::to_string(k));
  return c_route;
}

}  // namespace treechild::tableaux
