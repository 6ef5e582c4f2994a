#pragma once

#include "core/numbers.hpp"

namespace treechild::paths {

// Weighted lattice walks above the diagonal with steps I=(1,0), J1=(0,1),
// J2=(0,1). Steps I and J1 have weight 1; the r-th J2 step ending at (i,j)
// has weight i+j+r-1. All counts are weighted path counts.

// Paths (0,0) -> (n,n) staying in y >= x with exactly k J2 steps; equals the
// tableau count y_{n,n-k,k}.
Int b_path_count(long n, long k);

// Paths (0,0) -> (k,n) staying in y >= x using only I and J2 (every vertical
// step is the j-th J2, weight i+2j-1); equals y_{k,0,n}.
Int c_path_count(long n, long k);

// Same family as b_path_count in the bicolored Dyck view: steps U1/U2/D with
// height kept nonnegative, the r-th U2 as the m-th step weighing m+r-1.
Int b_dyck_count(long n, long k);

// Recomputes the worked example path (three J2 steps of weights 2, 5 and 9,
// total weight 90) directly from the step-weight rule.
bool figure_weight_check();

}  // namespace treechild::paths
