#include "core/words.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "core/errors.hpp"

namespace treechild::words {

char class_tag(WordClass cls) {
  switch (cls) {
    case WordClass::A: return 'A';
    case WordClass::B: return 'B';
    case WordClass::C: return 'C';
    case WordClass::H: return 'H';
  }
  return '?';
}

WordClass class_from_tag(char tag) {
  switch (tag) {
    case 'A': case 'a': return WordClass::A;
    case 'B': case 'b': return WordClass::B;
    case 'C': case 'c': return WordClass::C;
    case 'H': case 'h': return WordClass::H;
  }
  throw InvalidInputError(std::string("unknown word class '") + tag + "'");
}

WordClassSpec WordClassSpec::make(WordClass cls, int n, int k) {
  if (n < 0) throw InvalidInputError("word class: n must be nonnegative");
  if (cls == WordClass::A) {
    k = n;
  } else if (k < 0 || k > n) {
    throw InvalidInputError("word class: k must satisfy 0 <= k <= n");
  }
  return WordClassSpec{cls, n, k};
}

std::string to_string(const Word& word, int n) {
  std::ostringstream out;
  if (n <= 26) {
    for (int x : word.letters) out << static_cast<char>('a' + x - 1);
  } else {
    for (size_t i = 0; i < word.letters.size(); ++i) {
      if (i) out << '.';
      out << word.letters[i];
    }
  }
  return out.str();
}

Word word_from_string(const std::string& text, int n) {
  Word w;
  if (n <= 26) {
    for (char c : text) {
      if (c < 'a' || c >= 'a' + n)
        throw InvalidInputError("word letter out of range: '" +
                                std::string(1, c) + "'");
      w.letters.push_back(c - 'a' + 1);
    }
  } else {
    std::istringstream in(text);
    std::string part;
    while (std::getline(in, part, '.')) {
      int v = std::stoi(part);
      if (v < 1 || v > n) throw InvalidInputError("word letter out of range");
      w.letters.push_back(v);
    }
  }
  return w;
}

namespace {

// Incremental dominance checker over a fixed multiplicity profile.
//
// Letters with multiplicity 3 carry their plain occurrence count. In class B
// a twice-letter's occurrences rank as second and third, so its effective
// count is actual+1 and it ranks as "already seen" from the start (this is
// what keeps the first occurrences of thrice-letters unordered relative to
// twice-letters' columns). In classes A/C/H there is no shift.
class DominanceState {
 public:
  DominanceState(std::vector<int> mult, bool shift_twice, bool h_mode,
                 bool h_all_letters)
      : mult_(std::move(mult)),
        actual_(mult_.size(), 0),
        shifted_(mult_.size(), 0),
        h_mode_(h_mode),
        h_all_letters_(h_all_letters) {
    if (shift_twice)
      for (size_t i = 0; i < mult_.size(); ++i) shifted_[i] = (mult_[i] == 2);
  }

  int n() const { return static_cast<int>(mult_.size()); }
  int remaining(int letter) const { return mult_[letter - 1] - actual_[letter - 1]; }

  // Appends one letter (1-based); returns false and leaves the state
  // unchanged if the extended prefix violates the class condition.
  bool try_push(int letter) {
    const int x = letter - 1;
    ++actual_[x];
    const int cx = eff(x);
    bool ok = true;
    for (int i = 0; i < x && ok; ++i)
      if (appeared(i) && eff(i) < cx) ok = false;
    if (ok && actual_[x] == 1 && !shifted_[x]) {
      // x just became visible; pairs (x, j) with j > x are now constrained.
      for (int j = x + 1; j < n() && ok; ++j)
        if (appeared(j) && cx < eff(j)) ok = false;
    }
    if (ok && h_mode_ && actual_[x] == 3) {
      for (int i = 0; i < n() && ok; ++i) {
        if (h_all_letters_ ? actual_[i] < 2 : (actual_[i] == 1)) ok = false;
      }
    }
    if (!ok) {
      --actual_[x];
      return false;
    }
    return true;
  }

  void pop(int letter) { --actual_[letter - 1]; }

 private:
  int eff(int i) const { return actual_[i] + shifted_[i]; }
  bool appeared(int i) const { return shifted_[i] || actual_[i] > 0; }

  std::vector<int> mult_;
  std::vector<int> actual_;
  std::vector<char> shifted_;
  bool h_mode_;
  bool h_all_letters_;
};

std::vector<int> profile_prefix_thrice(int n, int k) {
  std::vector<int> mult(n, 2);
  std::fill(mult.begin(), mult.begin() + k, 3);
  return mult;
}

void check_budget(const WordClassSpec& spec, const EnumerateOptions& opts) {
  if (spec.total_length() > opts.max_total_length)
    throw BudgetError("enumeration budget exceeded: total word length " +
                      std::to_string(spec.total_length()) + " > " +
                      std::to_string(opts.max_total_length));
}

// Enumerates all valid words for one multiplicity profile, in lex order,
// invoking `emit` for each complete word.
void search_profile(const std::vector<int>& mult, bool shift_twice, bool h_mode,
                    bool h_all_letters,
                    const std::function<void(const std::vector<int>&)>& emit) {
  const int total = std::accumulate(mult.begin(), mult.end(), 0);
  DominanceState state(mult, shift_twice, h_mode, h_all_letters);
  std::vector<int> word;
  word.reserve(total);
  std::function<void()> rec = [&] {
    if (static_cast<int>(word.size()) == total) {
      emit(word);
      return;
    }
    for (int letter = 1; letter <= state.n(); ++letter) {
      if (state.remaining(letter) == 0) continue;
      if (!state.try_push(letter)) continue;
      word.push_back(letter);
      rec();
      word.pop_back();
      state.pop(letter);
    }
  };
  rec();
}

}  // namespace

bool is_valid(const Word& word, const WordClassSpec& spec,
              const EnumerateOptions& opts) {
  std::vector<int> counts(spec.n, 0);
  for (int x : word.letters) {
    if (x < 1 || x > spec.n)
      throw InvalidInputError("word contains letter outside alphabet");
    ++counts[x - 1];
  }

  std::vector<int> mult;
  if (spec.cls == WordClass::B) {
    int thrice = 0;
    for (int c : counts) {
      if (c == 3) ++thrice;
      else if (c != 2)
        throw InvalidInputError("class B word must use every letter 2 or 3 times");
    }
    if (thrice != spec.k)
      throw InvalidInputError("class B word has " + std::to_string(thrice) +
                              " thrice-letters, expected " + std::to_string(spec.k));
    mult = counts;
  } else {
    mult = profile_prefix_thrice(spec.n, spec.k);
    for (int i = 0; i < spec.n; ++i)
      if (counts[i] != mult[i])
        throw InvalidInputError("word multiplicities do not match class " +
                                std::string(1, class_tag(spec.cls)));
  }

  DominanceState state(mult, spec.cls == WordClass::B, spec.cls == WordClass::H,
                       opts.h_requires_all_letters);
  for (int letter : word.letters)
    if (!state.try_push(letter)) return false;
  return true;
}

namespace {

// Runs the backtracking search over every multiplicity profile of the class.
// Class B with k < n ranges over all k-subsets of thrice-letters; the other
// classes have a single prefix profile.
void search_class(const WordClassSpec& spec, const EnumerateOptions& opts,
                  const std::function<void(const std::vector<int>&)>& emit) {
  const bool shift = spec.cls == WordClass::B;
  const bool h_mode = spec.cls == WordClass::H;
  if (spec.cls == WordClass::B && spec.k < spec.n) {
    std::vector<int> pick(spec.k);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      std::vector<int> mult(spec.n, 2);
      for (int i : pick) mult[i] = 3;
      search_profile(mult, shift, h_mode, opts.h_requires_all_letters, emit);
      // next k-combination of {0..n-1}
      int i = spec.k - 1;
      while (i >= 0 && pick[i] == spec.n - spec.k + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < spec.k; ++j) pick[j] = pick[j - 1] + 1;
    }
  } else {
    search_profile(profile_prefix_thrice(spec.n, spec.k), shift, h_mode,
                   opts.h_requires_all_letters, emit);
  }
}

}  // namespace

std::vector<Word> enumerate(const WordClassSpec& spec,
                            const EnumerateOptions& opts) {
  check_budget(spec, opts);
  std::vector<Word> out;
  search_class(spec, opts,
               [&](const std::vector<int>& seq) { out.push_back(Word{seq}); });
  // Profiles are disjoint (the sequence determines its multiplicities), so
  // this is a plain sort, not a dedup.
  std::sort(out.begin(), out.end());
  return out;
}

Int count(const WordClassSpec& spec, const EnumerateOptions& opts) {
  check_budget(spec, opts);
  Int total = 0;
  search_class(spec, opts, [&](const std::vector<int>&) { ++total; });
  return total;
}

}  // namespace treechild::words
