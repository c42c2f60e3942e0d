#include "steklov/weights.hpp"

#include <gmp.h>

#include <cstdlib>

namespace steklov {

namespace {

constexpr long kExactHarmonicLimit = 10000;

Interval interval_from_mpq(const mpq_t q) {
  Interval r;
  mpfr_set_q(r.lo_mut(), q, MPFR_RNDD);
  mpfr_set_q(r.hi_mut(), q, MPFR_RNDU);
  return r;
}

// H_m or H_m^{(3)} as an exact rational.
Interval harmonic_exact(long m, int power) {
  mpq_t acc, term;
  mpq_init(acc);
  mpq_init(term);
  for (long k = 1; k <= m; ++k) {
    unsigned long den = static_cast<unsigned long>(k);
    if (power == 3) den = den * den * den;
    mpq_set_ui(term, 1, den);
    mpq_add(acc, acc, term);
  }
  Interval r = interval_from_mpq(acc);
  mpq_clear(acc);
  mpq_clear(term);
  return r;
}

Interval harmonic_interval(long m, int power) {
  Interval acc;
  for (long k = 1; k <= m; ++k) {
    acc.add_assign(recip(pow_int(Interval(k), power)));
  }
  return acc;
}

}  // namespace

Alpha Alpha::for_sides(int n) {
  if (n < 3) throw domain_violation("need at least 3 sides");
  Alpha a;
  a.n_sides = n;
  a.alpha = Interval::from_ratio(1, n);
  a.alpha0 = Interval::from_ratio(1, 20);
  return a;
}

Interval harmonic(long m) {
  if (m < 0) throw domain_violation("negative harmonic index");
  if (m <= kExactHarmonicLimit) return harmonic_exact(m, 1);
  return harmonic_interval(m, 1);
}

Interval harmonic3(long m) {
  if (m < 0) throw domain_violation("negative harmonic index");
  if (m <= kExactHarmonicLimit) return harmonic_exact(m, 3);
  return harmonic_interval(m, 3);
}

Interval normalization_constant(const Alpha& a) {
  Interval one_minus_2a = 1 - 2 * a.alpha;
  if (!one_minus_2a.is_positive()) {
    throw domain_violation("normalization needs alpha < 1/2");
  }
  Interval g1 = gamma_enclosure(1 - a.alpha);
  return g1 * g1 / gamma_enclosure(one_minus_2a);
}

Interval coefficient_v(long m, const Alpha& a) {
  if (m < 0) throw domain_violation("coefficient index must be >= 0");
  Interval g_ratio = gamma_enclosure(1 - a.alpha) / gamma_enclosure(a.alpha);
  Interval num = gamma_enclosure(Interval(m) + a.alpha);
  Interval den = gamma_enclosure(Interval(m + 1) - a.alpha);
  return g_ratio * num / den;
}

WeightCoefficients coefficient_v_recursive(long m_max, const Alpha& a) {
  if (m_max < 0) throw domain_violation("m_max must be >= 0");
  WeightCoefficients w;
  w.a = a;
  w.values.reserve(m_max + 1);
  w.values.push_back(Interval(1));  // v_0 = w-hat(0) = 1 exactly
  for (long m = 0; m < m_max; ++m) {
    Interval ratio = (Interval(m) + a.alpha) / (Interval(m + 1) - a.alpha);
    w.values.push_back(w.values.back() * ratio);
  }
  return w;
}

Interval taylor_coefficient(long m, int j) {
  if (m < 1 || j < 1 || j > 5) throw domain_violation("taylor_coefficient domain");
  Interval H = harmonic(m - 1);
  Interval H3 = harmonic3(m - 1);
  Interval mi(m);
  Interval mH = mi * H;
  Interval mH2 = mH * mH;                      // m^2 H^2
  Interval m3H3 = mH * mH * mH;                // m^3 H^3
  Interval m3Hp3 = pow_int(mi, 3) * H3;        // m^3 H^{(3)}
  switch (j) {
    case 1:
      return recip(mi);
    case 2:
      return (1 + 2 * mH) / pow_int(mi, 2);
    case 3:
      return (1 + 2 * mH + 2 * mH2) / pow_int(mi, 3);
    case 4:
      return (3 + 6 * mH + 6 * mH2 + 4 * m3H3 + 2 * m3Hp3) /
             (3 * pow_int(mi, 4));
    default: {
      Interval m4H4 = mH2 * mH2;               // m^4 H^4
      Interval m4HHp3 = mH * m3Hp3;            // m^4 H H^{(3)}
      return (3 + 6 * mH + 6 * mH2 + 4 * m3H3 + 2 * m3Hp3 + 2 * m4H4 +
              4 * m4HHp3) /
             (3 * pow_int(mi, 5));
    }
  }
}

Interval cubic_taylor_value(long m, const Alpha& a) {
  Interval acc;
  Interval ap = a.alpha;
  for (int j = 1; j <= 3; ++j) {
    acc.add_assign(taylor_coefficient(m, j) * ap);
    ap = ap * a.alpha;
  }
  return acc;
}

VmConstants vm_constants() {
  VmConstants c;
  Interval a0 = Interval::from_ratio(1, 20);
  Interval a0sq = a0 * a0;
  Interval z3 = zeta_enclosure(Interval(3));
  Interval z5 = zeta_enclosure(Interval(5));
  Interval z7 = zeta_enclosure(Interval(7));

  c.L5 = Interval::from_ratio(4, 19) + Interval::from_ratio(2, 5) * z5 +
         4 * z7 * a0sq / (7 * (1 - a0sq));
  c.C_P = 2 * Interval::euler_gamma() + 1 + a0 / 2 +
          (Interval::from_ratio(2, 3) * z3 + Interval::from_ratio(1, 3)) * a0sq +
          pow_int(a0, 3) / 4;
  c.V_inf = exp(c.C_P * a0 + c.L5 * pow_int(a0, 5));
  c.L6 = c.V_inf * (pow_int(2 + c.C_P, 5) / 120 + c.L5);
  c.V1 = c.V_inf * (2 + c.C_P + c.L5 * pow_int(a0, 4));
  c.V4 = (Interval::from_ratio(19, 3) + Interval::from_ratio(2, 3) * z3) +
         a0 * (7 + 2 * z3) + 11 * c.L6 * a0sq;
  c.D3 = 3 / pow_int(1 - a0, 4);
  c.V2 = sqrt(Interval(2)) * c.V_inf * sqrt(zeta_enclosure(2 - 4 * a0));
  return c;
}

Interval cubic_truncation_error(long m, const Alpha& a) {
  if (m < 1) throw domain_violation("m must be >= 1");
  if (!(a.alpha.hi_d() <= a.alpha0.hi_d())) {
    throw std::invalid_argument("cubic truncation bound needs alpha <= 1/20");
  }
  VmConstants c = vm_constants();
  Interval expo = 2 * a.alpha0 - 1;
  Interval logfac = pow_int(1 + log(Interval(m)), 4);
  return c.V4 * pow_int(a.alpha, 4) * pow(Interval(m), expo) * logfac;
}

}  // namespace steklov
