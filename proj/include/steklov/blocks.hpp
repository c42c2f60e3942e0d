#pragma once

#include <vector>

#include "steklov/interval.hpp"
#include "steklov/weights.hpp"

// Finite sections of the residue-class block operators: the full blocks A_r
// for r != 0, the rank-one-reduced zero block, and the (b, K) split of the
// critical block r = 1 used by the Schur analysis.

namespace steklov {

struct BlockIndex {
  int n_sides = 0;  // N
  int residue = 0;  // r in 0..N-1
};

struct BlockSection {
  BlockIndex block;
  long half_width = 0;             // mode cutoff M
  bool zero_mode_excluded = false; // true iff r == 0
  std::vector<long> modes;         // ascending m
  std::vector<Interval> mat;       // row-major, dim x dim

  long dim() const { return static_cast<long>(modes.size()); }
  const Interval& entry(long i, long j) const { return mat[i * dim() + j]; }
};

struct CriticalBlockData {
  int n_sides = 0;
  long half_width = 0;
  std::vector<long> modes;    // nonzero m, ascending
  std::vector<Interval> b;    // b_m = v_{|m|} / sqrt(d_m)
  std::vector<Interval> k;    // K section, row-major

  long dim() const { return static_cast<long>(modes.size()); }
  const Interval& k_entry(long i, long j) const { return k[i * dim() + j]; }
};

// d_m = |r + m N|, exact.
long diagonal_weight(const BlockIndex& block, long m);

// (A_r)_{m,m'} = v_{m-m'} / sqrt(d_m d_m'), modes |m| <= M, r != 0.
BlockSection assemble_block_section(const BlockIndex& block, long M,
                                    const WeightCoefficients& coeffs);

// Rank-one-reduced zero block over nonzero modes |m| <= M:
// entries v_{m-l}/sqrt(d_m d_l) - v_m v_l/(v_0 sqrt(d_m d_l)), d_m = |m| N.
BlockSection assemble_zero_block_section(int n, long M,
                                         const WeightCoefficients& coeffs);

// b vector and K section of the r = 1 block with the zero mode removed.
CriticalBlockData critical_block_data(int n, long M,
                                      const WeightCoefficients& coeffs);

}  // namespace steklov
