#pragma once

#include <vector>

#include "steklov/blocks.hpp"
#include "steklov/weights.hpp"

// Scalar Schur-complement equation for the critical block: the top eigenvalue
// lambda* of the r = 1 block is the unique root of
//   F(lambda) = lambda - 1 - <(lambda I - K)^{-1} b, b>
// above 1, which gives an independent route to the sigma enclosure and the
// moment expansion used by the asymptotic analysis.

namespace steklov {

struct SchurState {
  int n_sides = 0;
  long half_width = 0;       // section cutoff M
  CriticalBlockData data;    // b vector and K section, zero mode removed
  Interval beta;             // ||b||^2 with tail
  Interval kappa;            // certified upper bound on ||K||
  Interval coupling_tail;    // certified upper bound on ||E_K|| (section tail)
  Interval b_tail_norm;      // norm of the discarded part of b
};

struct SchurRoot {
  Interval lambda_star;
  Interval theta;  // lambda* - 1
};

SchurState beta_and_kappa(int n, long M, const WeightCoefficients& coeffs);

// Certified enclosure of F(lambda); throws domain_violation
// ("SpectrumProximity") when lambda.lo <= kappa.hi.
Interval schur_F(const Interval& lambda, const SchurState& state);

// Unique root above 1; throws domain_violation ("WindowViolation") when
// kappa.hi >= 1.
SchurRoot schur_root(const SchurState& state);

// Section enclosure of the eigenvector (1, (lambda* I - K)^{-1} b).
std::vector<Interval> schur_eigenvector_section(const SchurRoot& root,
                                                const SchurState& state);

// Moments M_0 = ||b||^2, M_1 = <Kb, b>, M_2 = ||Kb||^2.
Interval moment(int j, int n, long M, const WeightCoefficients& coeffs);

// theta_N = lambda* - 1 enclosed through M_0 + M_1 + M_2 with the certified
// replacement error 8 beta^2 + 2 beta kappa^3; requires N >= 20.
Interval theta_via_moments(int n, long M);

}  // namespace steklov
