#pragma once

#include <string>
#include <vector>

#include "core/numbers.hpp"

namespace treechild::words {

// The four constrained word classes over the alphabet w_1..w_n:
//   A: every letter occurs three times.
//   C: letters 1..k occur three times, letters k+1..n twice.
//   H: subclass of C where no letter closes its third occurrence while some
//      already-seen letter still has a single occurrence.
//   B: some k-subset of letters occurs three times, the rest twice; the two
//      occurrences of a twice-letter are counted as its second and third.
enum class WordClass { A, B, C, H };

char class_tag(WordClass cls);
WordClass class_from_tag(char tag);  // throws InvalidInputError

struct WordClassSpec {
  WordClass cls = WordClass::A;
  int n = 0;
  int k = 0;  // for class A this is forced to n

  static WordClassSpec make(WordClass cls, int n, int k);
  // Total word length: 2n + k (equivalently 3n for class A).
  int total_length() const { return 2 * n + k; }
};

// A word is a sequence of letters, stored 1-based (1 = 'a'). The per-letter
// multiplicity is implied by the sequence itself.
struct Word {
  std::vector<int> letters;

  bool operator==(const Word&) const = default;
  auto operator<=>(const Word&) const = default;
};

// Render as "aabab" for alphabets up to 26 letters, "1.1.2.1.2" beyond.
std::string to_string(const Word& word, int n);
Word word_from_string(const std::string& text, int n);  // inverse of to_string

struct EnumerateOptions {
  // Exhaustive search refuses words longer than this.
  int max_total_length = 24;
  // Alternative reading of the H restriction: require all n letters (not just
  // the ones seen so far) to have two occurrences at every third occurrence.
  bool h_requires_all_letters = false;
};

// True iff every prefix satisfies the dominance condition of the class.
// Throws InvalidInputError when the word's multiplicities do not match the
// spec at all (that is a malformed query, not a "false").
bool is_valid(const Word& word, const WordClassSpec& spec,
              const EnumerateOptions& opts = {});

// All valid words of the class in lexicographic order.
std::vector<Word> enumerate(const WordClassSpec& spec,
                            const EnumerateOptions& opts = {});

// Number of valid words (same search, no materialized list).
Int count(const WordClassSpec& spec, const EnumerateOptions& opts = {});

}  // namespace treechild::words
