#pragma once

#include <vector>

#include "steklov/interval.hpp"

// Fourier coefficients v_m of the polygonal boundary weight, their exact
// Gamma-ratio formula, the fast recurrence, the Taylor coefficients a_{m,j}
// in powers of alpha = 1/N, and the uniform constants that control the
// truncation errors (all evaluated at the reference threshold alpha0 = 1/20).

namespace steklov {

struct Alpha {
  int n_sides = 0;  // N >= 3
  Interval alpha;   // 1/N
  Interval alpha0;  // 1/20

  static Alpha for_sides(int n);
};

struct WeightCoefficients {
  Alpha a;
  std::vector<Interval> values;  // v_0 .. v_{m_max}

  long m_max() const { return static_cast<long>(values.size()) - 1; }
  // v_j extended to negative j by evenness.
  const Interval& v(long j) const { return values[j < 0 ? -j : j]; }
};

struct VmConstants {
  Interval L5, C_P, V_inf, L6, V1, V4, V2, D3;
};

// C(alpha) = Gamma(1-a)^2 / Gamma(1-2a)
Interval normalization_constant(const Alpha& a);

// v_m = (Gamma(1-a)/Gamma(a)) * (Gamma(m+a)/Gamma(m+1-a)), direct evaluation.
Interval coefficient_v(long m, const Alpha& a);

// v_0 = 1 and v_{m+1} = v_m (m+a)/(m+1-a); tight and overflow-free.
WeightCoefficients coefficient_v_recursive(long m_max, const Alpha& a);

// Exact rational-harmonic Taylor coefficient a_{m,j}, 1 <= j <= 5.
Interval taylor_coefficient(long m, int j);

// The constants ledger at alpha0 = 1/20, rebuilt from the defining formulas.
VmConstants vm_constants();

// Certified bound V4 a^4 m^{2 alpha0 - 1} (1+log m)^4 on |v_m - v_{m,<=3}|.
Interval cubic_truncation_error(long m, const Alpha& a);

// Harmonic numbers H_m and H_m^{(3)}; exact rationals up to m = 10^4.
Interval harmonic(long m);
Interval harmonic3(long m);

// Sum of the cubic Taylor polynomial sum_{j<=3} a_{m,j} alpha^j.
Interval cubic_taylor_value(long m, const Alpha& a);

}  // namespace steklov
