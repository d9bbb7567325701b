#pragma once

#include "sepstat/series.hpp"

namespace sepstat {

// Generating functions for bonds and vertical separators on permutations.
// In every returned series the coefficient of z^n marker^m counts
// permutations of size n; the constant term counts the empty permutation.

/// z + sum_{j>=2} 2 z^j v^{j-1}: one maximal marked run, ascending or
/// descending, with its j-1 marked bonds.
BiSeries run_block_series(int order);

/// A(z, v) = sum_m m! run_block_series^m; counts permutations with a chosen
/// subset of bonds marked, v marking each chosen bond.
BiSeries bond_marked_gf(int order);

/// B(z, u) = A(z, u - 1); [z^n u^m] = #{sigma in S_n : sigma has m bonds}.
BiSeries bond_gf(int order);

/// g(z, v): permutations with a chosen subset of vertical separators marked.
/// Built from the odd/even comb halves as Hadamard products of run-block
/// powers in z^2.
BiSeries vertical_marked_gf(int order);

/// h(z, u) = g(z, u - 1); [z^n u^m] = #{pi in S_n : pi has m vertical separators}.
BiSeries vertical_sep_gf(int order);

}  // namespace sepstat
