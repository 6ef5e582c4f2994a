#include "core/paths.hpp"

#include <vector>

#include "core/errors.hpp"

namespace treechild::paths {

namespace {

void require_range(long n, long k) {
  if (n < 0 || k < 0 || k > n)
    throw InvalidInputError("path count requires 0 <= k <= n");
}

}  // namespace

Int b_path_count(long n, long k) {
  require_range(n, k);
  // Frontier over t = i+j; state (i, r) with j = t-i.
  auto idx = [&](long i, long r) { return i * (k + 1) + r; };
  std::vector<Int> cur((n + 1) * (k + 1));
  cur[idx(0, 0)] = 1;
  for (long t = 0; t < 2 * n; ++t) {
    std::vector<Int> next((n + 1) * (k + 1));
    const long i_hi = std::min(t / 2, n);
    for (long i = 0; i <= i_hi; ++i) {
      const long j = t - i;
      if (j > n) continue;
      for (long r = 0; r <= k; ++r) {
        const Int& v = cur[idx(i, r)];
        if (v == 0) continue;
        if (i + 1 <= j && i + 1 <= n) next[idx(i + 1, r)] += v;
        if (j + 1 <= n) {
          next[idx(i, r)] += v;  // J1
          if (r + 1 <= k)        // J2 ending at (i, j+1)
            next[idx(i, r + 1)] += v * (i + j + r + 1);
        }
      }
    }
    cur = std::move(next);
  }
  return cur[idx(n, k)];
}

Int c_path_count(long n, long k) {
  require_range(n, k);
  // State (i, j); every vertical step is a J2 with weight i+2j-1 at (i,j).
  auto idx = [&](long i, long j) { return i * (n + 1) + j; };
  std::vector<Int> dp((k + 1) * (n + 1));
  dp[idx(0, 0)] = 1;
  for (long j = 0; j <= n; ++j) {
    for (long i = 0; i <= std::min(j, k); ++i) {
      if (i == 0 && j == 0) continue;
      Int v = 0;
      if (i > 0) v += dp[idx(i - 1, j)];
      if (j > 0 && i <= j - 1) v += dp[idx(i, j - 1)] * (i + 2 * j - 1);
      dp[idx(i, j)] = std::move(v);
    }
  }
  return dp[idx(k, n)];
}

Int b_dyck_count(long n, long k) {
  require_range(n, k);
  // Steps m = 1..2n; state (height h, #U2 used r).
  auto idx = [&](long h, long r) { return h * (k + 1) + r; };
  std::vector<Int> cur((n + 1) * (k + 1));
  cur[idx(0, 0)] = 1;
  for (long m = 1; m <= 2 * n; ++m) {
    std::vector<Int> next((n + 1) * (k + 1));
    for (long h = 0; h <= n; ++h)
      for (long r = 0; r <= k; ++r) {
        const Int& v = cur[idx(h, r)];
        if (v == 0) continue;
        if (h + 1 <= n) {
          next[idx(h + 1, r)] += v;  // U1
          if (r + 1 <= k) next[idx(h + 1, r + 1)] += v * (m + r);  // U2: m+(r+1)-1
        }
        if (h - 1 >= 0) next[idx(h - 1, r)] += v;  // D
      }
    cur = std::move(next);
  }
  return cur[idx(0, k)];
}

bool figure_weight_check() {
  // The worked example: J1, J2, I, J2, I, J1, J2 ending at (2,5), staying in
  // y >= x, with J2 weights 2, 5 and 9.
  enum Step { I, J1, J2 };
  const Step steps[] = {J1, J2, I, J2, I, J1, J2};
  const long expected[] = {2, 5, 9};
  long i = 0, j = 0, r = 0;
  Int product = 1;
  for (Step s : steps) {
    if (s == I)
      ++i;
    else
      ++j;
    if (j < i) return false;
    if (s == J2) {
      ++r;
      const long w = i + j + r - 1;
      if (w != expected[r - 1]) return false;
      product *= w;
    }
  }
  return product == 90;
}

}  // namespace treechild::paths
