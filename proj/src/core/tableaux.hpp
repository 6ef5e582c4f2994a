#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/numbers.hpp"
#include "core/words.hpp"

namespace treechild::tableaux {

// Three-row Young tableau shape with walls and holes. Rows are counted
// bottom to top: the bottom row holds boxes only in `bottom_cols` (walls
// between adjacent boxes remove the horizontal constraint there), the middle
// row spans columns 1..middle_len, the top row columns 1..top_len.
struct TableauShape {
  int top_len = 0;                // k
  int middle_len = 0;             // l1 + l2
  std::vector<int> bottom_cols;   // sorted 1-based column indices, size l2

  int total_cells() const {
    return top_len + middle_len + static_cast<int>(bottom_cols.size());
  }
  void validate() const;  // throws InvalidInputError
  bool operator==(const TableauShape&) const = default;
};

// A standard filling: entries 1..total_cells, strictly increasing along the
// top and middle rows and up every column; no horizontal condition in the
// bottom row.
struct Tableau {
  TableauShape shape;
  std::vector<int> bottom;  // parallel to shape.bottom_cols
  std::vector<int> middle;  // size middle_len
  std::vector<int> top;     // size top_len

  void validate() const;  // throws InvalidInputError
  bool operator==(const Tableau&) const = default;

  // JSON object {"rows": [bottom, middle, top]} with rows padded to
  // middle_len, holes as null.
  std::string to_json() const;
  static Tableau from_json(const std::string& json_text);
};

// Shape of the tableau class associated with a word class:
//   A (k=n): full 3 x n grid;  C: top k, middle n, bottom n;
//   B: top n, middle n, bottom = columns of the thrice-letters (word-dependent).
TableauShape shape_for(const words::WordClassSpec& spec,
                       const std::optional<words::Word>& word = std::nullopt);

// Entry m goes to the lowest free box of column j when the m-th letter of the
// word is w_j; in class B a twice-letter's first occurrence starts at the
// middle row. Requires a valid word of classes A/B/C.
Tableau word_to_tableau(const words::Word& word, const words::WordClassSpec& spec);

// Inverse map: read entries 1..N in order and record their column indices.
words::Word tableau_to_word(const Tableau& tab, const words::WordClassSpec& spec);

// Memoized table of tableau counts y_{k,l1,l2}; zero outside the cone
// l1 + l2 >= k >= 0. Safe for concurrent reads once filled.
class YTable {
 public:
  const Int& value(int k, int l1, int l2);
  Int value_or_zero(int k, int l1, int l2);

 private:
  void extend(int k, int l1, int l2);
  int dim_k_ = 0, dim_l1_ = 0, dim_l2_ = 0;
  std::vector<Int> cells_;  // dense box, index ((k*dim_l1)+l1)*dim_l2+l2
  static const Int kZero;
};

// One-shot convenience around YTable.
Int y_count(int k, int l1, int l2);

struct IdentityCheckReport {
  bool passed = true;
  int max_n = 0;
  long checks = 0;
  double seconds = 0.0;
  // First failing (n, k) when !passed.
  int fail_n = -1, fail_k = -1;
  std::string summary() const;
};

// Checks y_{n,n-k,k} * (n-k+1)! == 2^(n-k) * y_{k,0,n} for all
// 0 <= k <= n <= max_n using a slab-streamed fill of the recurrence (memory
// stays at two slabs of the cone).
IdentityCheckReport verify_tableau_identity(int max_n);

// Number of tree-child networks with n leaves and k reticulation nodes,
// computed over both word models and cross-checked; a disagreement throws
// InconsistencyError. Requires n > k >= 0.
Int tc_count(long n, long k);

}  // namespace treechild::tableaux
