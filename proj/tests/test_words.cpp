#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "core/errors.hpp"
#include "core/words.hpp"

using namespace treechild;
using namespace treechild::words;

namespace {

std::set<std::string> rendered(const WordClassSpec& spec,
                               const EnumerateOptions& opts = {}) {
  std::set<std::string> out;
  for (const Word& w : enumerate(spec, opts)) out.insert(to_string(w, spec.n));
  return out;
}

WordClassSpec spec(char cls, int n, int k) {
  return WordClassSpec::make(class_from_tag(cls), n, k);
}

Word parse(const std::string& s, int n) { return word_from_string(s, n); }

// Filter-based oracle: generate every arrangement of the class's letters and
// keep the ones is_valid accepts. Independent of the backtracking pruning.
std::set<std::string> filter_oracle(char cls, int n, int k) {
  std::vector<int> letters;
  std::set<std::string> out;
  auto run_profile = [&](const std::vector<int>& mult) {
    letters.clear();
    for (int i = 1; i <= n; ++i)
      for (int c = 0; c < mult[i - 1]; ++c) letters.push_back(i);
    std::sort(letters.begin(), letters.end());
    const WordClassSpec s = spec(cls, n, k);
    do {
      Word w{letters};
      if (is_valid(w, s)) out.insert(to_string(w, n));
    } while (std::next_permutation(letters.begin(), letters.end()));
  };
  if (cls == 'B') {
    for (int mask = 0; mask < (1 << n); ++mask) {
      if (__builtin_popcount(mask) != k) continue;
      std::vector<int> mult(n, 2);
      for (int i = 0; i < n; ++i)
        if (mask & (1 << i)) mult[i] = 3;
      run_profile(mult);
    }
  } else {
    std::vector<int> mult(n, 2);
    for (int i = 0; i < (cls == 'A' ? n : k); ++i) mult[i] = 3;
    run_profile(mult);
  }
  return out;
}

}  // namespace

TEST_CASE("class A_2 listing") {
  const std::set<std::string> expected = {"aaabbb", "aababb", "abaabb",
                                          "baaabb", "aabbab", "ababab",
                                          "baabab"};
  CHECK(rendered(spec('A', 2, 2)) == expected);
}

TEST_CASE("class C_{2,1} listing") {
  const std::set<std::string> expected = {"aabba", "ababa", "baaba", "aaabb",
                                          "aabab", "abaab", "baaab"};
  CHECK(rendered(spec('C', 2, 1)) == expected);
}

TEST_CASE("class B_{2,1} listing") {
  const std::set<std::string> expected = {"aabbb", "aabab", "aaabb", "babab",
                                          "baabb", "abbab", "ababb"};
  CHECK(rendered(spec('B', 2, 1)) == expected);
}

TEST_CASE("a_n sequence") {
  CHECK(count(spec('A', 1, 1)) == 1);
  CHECK(count(spec('A', 2, 2)) == 7);
  CHECK(count(spec('A', 3, 3)) == 106);
  CHECK(count(spec('A', 4, 4)) == 2575);
}

TEST_CASE("single letter class A") {
  const auto words = enumerate(spec('A', 1, 1));
  REQUIRE(words.size() == 1);
  CHECK(to_string(words[0], 1) == "aaa");
}

TEST_CASE("is_valid examples") {
  CHECK(is_valid(parse("aababb", 2), spec('A', 2, 2)));
  CHECK_FALSE(is_valid(parse("bbaaab", 2), spec('A', 2, 2)));
  CHECK(is_valid(parse("aabbb", 2), spec('B', 2, 1)));
  CHECK(is_valid(parse("baaba", 2), spec('C', 2, 1)));
  // valid under the naive reading of the class-B shift, but its middle-row
  // word decreases; must be rejected
  CHECK_FALSE(is_valid(parse("bbaab", 2), spec('B', 2, 1)));
}

TEST_CASE("is_valid rejects multiplicity mismatches as errors") {
  CHECK_THROWS_AS(is_valid(parse("aabb", 2), spec('A', 2, 2)), InvalidInputError);
  CHECK_THROWS_AS(is_valid(parse("aaabb", 2), spec('C', 2, 2)), InvalidInputError);
  CHECK_THROWS_AS(is_valid(parse("aaabbb", 2), spec('B', 2, 1)), InvalidInputError);
  CHECK_THROWS_AS(is_valid(parse("aacbb", 2), spec('C', 2, 1)), InvalidInputError);
}

TEST_CASE("a_n = b_{n,n} = c_{n,n}") {
  for (int n = 1; n <= 4; ++n) {
    const Int a = count(spec('A', n, n));
    CHECK(count(spec('B', n, n)) == a);
    CHECK(count(spec('C', n, n)) == a);
  }
}

TEST_CASE("c recurrence c_{n,k} = c_{n,k-1} + (2n+k-1) c_{n-1,k}") {
  for (int n = 1; n <= 4; ++n)
    for (int k = 1; k <= n; ++k) {
      const Int lhs = count(spec('C', n, k));
      // c_{n-1,n} = 0: more thrice-letters than letters
      const Int prev = k <= n - 1 ? count(spec('C', n - 1, k)) : Int(0);
      CHECK(lhs == count(spec('C', n, k - 1)) + (2 * n + k - 1) * prev);
    }
}

TEST_CASE("H is a subclass of C, seen-so-far reading") {
  const auto h = rendered(spec('H', 2, 1));
  const auto c = rendered(spec('C', 2, 1));
  CHECK(std::includes(c.begin(), c.end(), h.begin(), h.end()));
  CHECK(h == std::set<std::string>{"aabba", "ababa", "baaba", "aaabb"});
}

TEST_CASE("H alternative reading requires all letters") {
  EnumerateOptions opts;
  opts.h_requires_all_letters = true;
  const auto h = rendered(spec('H', 2, 1), opts);
  CHECK(h == std::set<std::string>{"aabba", "ababa", "baaba"});
}

TEST_CASE("enumerate agrees with generate-and-filter") {
  for (auto [cls, n, k] : {std::tuple<char, int, int>{'C', 3, 1},
                           {'C', 3, 2},
                           {'B', 3, 1},
                           {'B', 3, 2},
                           {'A', 3, 3},
                           {'H', 3, 1}}) {
    CHECK(rendered(spec(cls, n, k)) == filter_oracle(cls, n, k));
  }
}

TEST_CASE("every enumerated word passes is_valid") {
  for (int k = 0; k <= 3; ++k) {
    const auto s = spec('B', 3, k);
    for (const Word& w : enumerate(s)) CHECK(is_valid(w, s));
  }
}

TEST_CASE("budget guard") {
  CHECK_THROWS_AS(enumerate(spec('A', 9, 9)), BudgetError);
  EnumerateOptions opts;
  opts.max_total_length = 6;
  CHECK_THROWS_AS(enumerate(spec('C', 3, 1), opts), BudgetError);
  CHECK_NOTHROW(enumerate(spec('C', 2, 2), opts));
}

TEST_CASE("lexicographic output order") {
  for (char cls : {'A', 'B', 'C'}) {
    const auto list = enumerate(spec(cls, 3, cls == 'A' ? 3 : 2));
    CHECK(std::is_sorted(list.begin(), list.end()));
  }
}

TEST_CASE("letters render as integers beyond 26") {
  Word w;
  w.letters = {1, 27, 1};
  CHECK(to_string(w, 27) == "1.27.1");
  CHECK(word_from_string("1.27.1", 27) == w);
}
