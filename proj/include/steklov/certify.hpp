#pragma once

#include <vector>

#include "steklov/blocks.hpp"
#include "steklov/interval.hpp"
#include "steklov/weights.hpp"

// Certified enclosures for the top eigenvalue of each residue block via
// finite sections (Collatz-Wielandt / Rayleigh bounds) plus tail bounds on
// the discarded modes, assembled into an enclosure of sigma_1.

namespace steklov {

struct SectionBounds {
  Interval lam_lo;  // certified lower bound for lambda_max of the section
  Interval lam_hi;  // certified upper bound
};

struct TailBounds {
  Interval c_norm;  // upper bound on the norm of the discarded compression
  Interval e_norm;  // upper bound on the norm of the coupling block
};

struct BlockEnclosure {
  BlockIndex block;
  Interval lambda;  // [lambda_lo, lambda_hi] for the infinite block
  long section_half_width = 0;
  SectionBounds section;
  TailBounds tail;
};

struct SigmaEnclosure {
  int n_sides = 0;
  Interval sigma;
  int argmax_block = 0;
  std::vector<BlockEnclosure> per_block;  // r = 0 .. N-1
};

// Midpoint power iteration followed by |x| + epsilon*1; any positive vector
// is a valid CW test vector, iterations only tighten the bounds.
std::vector<double> power_iteration_guess(const BlockSection& section,
                                          int iters, double epsilon);

// min_i (Bx)_i/x_i <= lambda_max(B) <= max_i (Bx)_i/x_i for entrywise
// positive B and positive x; evaluated in interval arithmetic.  r != 0 only.
SectionBounds collatz_wielandt_bounds(const BlockSection& section,
                                      const std::vector<double>& x);

// r = 0 branch: Rayleigh quotient lower bound plus max-abs-row-sum upper
// bound (the reduced zero block has signed entries, CW does not apply).
SectionBounds symmetric_bounds_zero_block(const BlockSection& section,
                                          const std::vector<double>& x);

// Certified upper bounds on ||E|| (retained <-> discarded coupling) and
// ||C|| (discarded compression); both vanish as M grows at fixed N.
TailBounds tail_hs_bounds(int n, const BlockIndex& block, long M,
                          const WeightCoefficients& coeffs);

// lambda_max(A) <= lambda_+ of [[a, e], [e, c]]: ((a+c)+sqrt((a-c)^2+4e^2))/2.
Interval two_by_two_top(const Interval& lam_b_hi, const Interval& e_norm,
                        const Interval& c_norm);

BlockEnclosure block_enclosure(int n, int r, long M,
                               const WeightCoefficients& coeffs);

SigmaEnclosure sigma_enclosure(int n, long M);

}  // namespace steklov
