#pragma once

#include <string>
#include <utility>
#include <vector>

#include "steklov/certify.hpp"

namespace steklov {

// Five-term expansion coefficients of sigma_1: c3 = 2 zeta(3), c4 = 8 zeta(4),
// c5 = 26 zeta(5).
struct ExpansionCoeffs {
  Interval c3, c4, c5;
};

// One audit row: a ledger constant, and (when one is on record) the bound it
// is checked against.
struct AuditRow {
  std::string name;
  Interval value;
  double bound = 0.0;
  bool has_bound = false;
  bool pass = true;
};

// The full remainder-constant ledger at alpha0 = 1/20, rebuilt from the
// defining formulas. `audit` keeps every sub-ledger entry in evaluation order
// for emission, with a pass/fail verdict against each recorded bound;
// recomputed values landing above a recorded bound are reported as failing
// rows, never patched. `all_bounds_hold` is the conjunction.
struct RemainderConstants {
  Interval E0, E1, E2, B0, K0, E_theta, E_sigma, C6;
  std::vector<AuditRow> audit;
  bool all_bounds_hold = false;
};

// Threshold M(p,q) past which (1+log x)^q x^{-p} is decreasing.
long log_sum_threshold(const Interval& p, int q);

// Closed form of the tail integral int_M^inf (1+log x)^q x^{-p} dx.
Interval log_sum_tail(const Interval& p, int q, long M);

// Partial sum sum_{m=1}^M (1+log m)^q / m^p.
Interval log_sum_partial(const Interval& p, int q, long M);

// S(p,q): certified upper bound for sum_{m>=1} (1+log m)^q / m^p.
Interval log_sum_bound(const Interval& p, int q);

// Euler-sum identities; id in {w4, w5a, w5b, double5}. Returns the
// zeta-combination closed form and an independent partial-sum-plus-tail
// enclosure; the two must intersect.
std::pair<Interval, Interval> euler_sum(const std::string& id);

ExpansionCoeffs expansion_coeffs();

const RemainderConstants& constant_closure();

struct ExpansionValue {
  Interval center;
  Interval band;
};

// Five-term expansion with remainder band; N >= 20.
ExpansionValue expansion_value(int n);

// 1200 c3 (20/21)^3 + 80 c4 (20/21)^4 + 5 c5 (20/21)^5, the positive part of
// the monotonicity margin.
Interval monotonicity_positive_part();

// positive part - 2 E_sigma; certified strictly positive.
Interval monotonicity_margin();

struct GapRow {
  int n_sides;            // gap between N and N+1
  Interval gap;           // sigma_lo(N+1) - sigma_hi(N)
};

std::vector<GapRow> gap_verification(int n_lo, int n_hi,
                                     const std::vector<SigmaEnclosure>& enclosures);

}  // namespace steklov
