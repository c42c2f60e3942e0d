#include "steklov/ledger.hpp"

#include <cmath>

#include "steklov/weights.hpp"

namespace steklov {

namespace {

Interval point_lo(const Interval& x) {
  Interval p;
  mpfr_set(p.lo_mut(), x.lo(), MPFR_RNDD);
  mpfr_set(p.hi_mut(), x.lo(), MPFR_RNDU);
  return p;
}

Interval point_hi(const Interval& x) {
  Interval p;
  mpfr_set(p.lo_mut(), x.hi(), MPFR_RNDD);
  mpfr_set(p.hi_mut(), x.hi(), MPFR_RNDU);
  return p;
}

Interval binom(int q, int j) {
  return factorial(static_cast<unsigned long>(q)) /
         (factorial(static_cast<unsigned long>(j)) *
          factorial(static_cast<unsigned long>(q - j)));
}

Interval zeta(const Interval& s) { return zeta_enclosure(s); }
Interval zeta(long s) { return zeta_enclosure(Interval(s)); }

}  // namespace

long log_sum_threshold(const Interval& p, int q) {
  if (!(p.lo_d() > 1.0)) throw domain_violation("log_sum_threshold: p > 1");
  Interval e = exp(Interval(q) / p - 1);
  long m = static_cast<long>(std::ceil(e.hi_d()));
  return m < 2 ? 2 : m;
}

Interval log_sum_partial(const Interval& p, int q, long M) {
  Interval s;
  for (long m = 1; m <= M; ++m) {
    Interval lm = 1 + log(Interval(m));
    s.add_assign(pow_int(lm, q) / pow(Interval(m), p));
  }
  return s;
}

Interval log_sum_tail(const Interval& p, int q, long M) {
  if (!(p.lo_d() > 1.0)) throw domain_violation("log_sum_tail: p > 1");
  Interval pm1 = p - 1;
  Interval a = pm1 * (1 + log(Interval(M)));
  Interval inner;
  for (int k = 0; k <= q; ++k)
    inner.add_assign(pow_int(a, k) / factorial(static_cast<unsigned long>(k)));
  return factorial(static_cast<unsigned long>(q)) /
         pow_int(pm1, q + 1) * pow(Interval(M), 1 - p) * inner;
}

Interval log_sum_bound(const Interval& p, int q) {
  if (!(p.lo_d() > 1.0)) throw domain_violation("log_sum_bound: p > 1");
  long M = log_sum_threshold(p, q);
  Interval s = log_sum_partial(p, q, M);
  for (int j = 0; j <= q; ++j)
    s.add_assign(binom(q, j) * factorial(static_cast<unsigned long>(j)) /
                 pow_int(p - 1, j + 1));
  return s;
}

std::pair<Interval, Interval> euler_sum(const std::string& id) {
  const long T = 1000000;
  Interval z2 = zeta(2), z3 = zeta(3), z4 = zeta(4), z5 = zeta(5);

  if (id == "w4" || id == "w5a" || id == "w5b") {
    Interval closed;
    int p;      // denominator power
    int q;      // harmonic weight: 1 for H, 2 for H^2
    if (id == "w4") { closed = z4 / 4; p = 3; q = 1; }
    else if (id == "w5a") { closed = 2 * z5 - z2 * z3; p = 4; q = 1; }
    else { closed = z2 * z3 - Interval::from_ratio(3, 2) * z5; p = 3; q = 2; }

    Interval sum, h;
    for (long m = 1; m <= T; ++m) {
      // H_{m-1} before incrementing
      Interval hw = (q == 1) ? h : pow_int(h, 2);
      sum.add_assign(hw / pow_int(Interval(m), p));
      h.add_assign(recip(Interval(m)));
    }
    // H_{m-1} <= 1 + log m, terms positive and eventually decreasing
    Interval tail = log_sum_tail(Interval(p), q, T);
    Interval brute;
    mpfr_set(brute.lo_mut(), sum.lo(), MPFR_RNDD);
    mpfr_set(brute.hi_mut(), (sum + tail).hi(), MPFR_RNDU);
    return {closed, brute};
  }

  if (id == "double5") {
    // D = sum_{m != l in Z*} 1/(m^2 l^2 |m-l|).  Splitting by sign patterns
    // and resolving the inner sums by partial fractions:
    //   same signs:     2P, P = 2 sum_j [(2 zeta(2) - H_j^(2))/j^3 - 2 H_j/j^4]
    //   opposite signs: 2Q, Q = sum_n [2 H_{n-1}^(2)/n^3 + 4 H_{n-1}/n^4]
    Interval closed = 8 * z2 * z3 - 12 * z5;
    Interval sum, h, h2;
    for (long n = 1; n <= T; ++n) {
      Interval n3 = pow_int(Interval(n), 3);
      Interval n4 = n3 * n;
      // Q-terms use H_{n-1}, P-terms use H_n after the update below.
      sum.add_assign((4 * h2) / n3 + (8 * h) / n4);
      h.add_assign(recip(Interval(n)));
      h2.add_assign(recip(pow_int(Interval(n), 2)));
      sum.add_assign(4 * (2 * z2 - h2) / n3 - (8 * h) / n4);
    }
    // Tails: P-terms lie in [4 zeta(2)/j^3 - 8(1+log j)/j^4, 8 zeta(2)/j^3],
    // Q-terms in [0, 4 zeta(2)/n^3 + 8(1+log n)/n^4].
    Interval s3 = Interval::from_endpoints(0.0, 1.0) /
                  (2 * pow_int(Interval(T), 2));  // sum_{j>T} j^{-3}
    Interval s41 = log_sum_tail(Interval(4), 1, T);
    Interval tail_hi = 12 * point_hi(z2) * point_hi(s3) + 8 * point_hi(s41);
    Interval tail_lo = 4 * point_lo(z2) * point_lo(s3) - 8 * point_hi(s41);
    Interval brute;
    mpfr_set(brute.lo_mut(), (sum + tail_lo).lo(), MPFR_RNDD);
    mpfr_set(brute.hi_mut(), (sum + tail_hi).hi(), MPFR_RNDU);
    return {closed, brute};
  }

  throw domain_violation("euler_sum: unknown identity " + id);
}

ExpansionCoeffs expansion_coeffs() {
  ExpansionCoeffs c;
  c.c3 = 2 * zeta(3);
  c.c4 = 8 * zeta(4);
  c.c5 = 26 * zeta(5);
  return c;
}

namespace {

RemainderConstants build_ledger() {
  RemainderConstants out;
  auto put = [&out](const char* name, const Interval& v) {
    AuditRow row;
    row.name = name;
    row.value = v;
    out.audit.push_back(row);
    return v;
  };
  auto bound = [&out](const char* name, double b) {
    for (AuditRow& row : out.audit)
      if (row.name == name) {
        row.bound = b;
        row.has_bound = true;
        row.pass = row.value.hi_d() <= b;
        return;
      }
  };

  const Interval a0 = Interval::from_ratio(1, 20);
  const Interval pstar = Interval::from_ratio(14, 5);  // 3 - 4 a0
  VmConstants vm = vm_constants();
  Interval one_m_a2 = 1 - pow_int(a0, 2);

  // E0 components
  Interval e0_den = put("E0_den", 2 / one_m_a2 * pow_int(vm.V_inf, 2) * a0 *
                                      zeta(7 - 4 * a0));
  long m_cr = log_sum_threshold(pstar, 4);
  Interval e0_cr = put("E0_cr",
                       4 / one_m_a2 * vm.V_inf * vm.V4 *
                           (log_sum_partial(pstar, 4, m_cr) +
                            log_sum_tail(pstar, 4, m_cr)));
  long m_sq = log_sum_threshold(pstar, 8);
  Interval e0_sq = put("E0_sq",
                       2 / one_m_a2 * pow_int(vm.V4, 2) * pow_int(a0, 3) *
                           (log_sum_partial(pstar, 8, m_sq) +
                            log_sum_tail(pstar, 8, m_sq)));
  long m_poly = log_sum_threshold(Interval(3), 3);
  Interval e0_poly = put("E0_poly",
                         60 * (log_sum_partial(Interval(3), 3, m_poly) +
                               log_sum_tail(Interval(3), 3, m_poly)));
  out.E0 = put("E0", e0_den + e0_poly + e0_cr + e0_sq);

  // Kernel-sum constants: beta = 9/10, gamma = 19/10, pstar = beta + gamma.
  Interval beta = Interval::from_ratio(9, 10);
  Interval gamma = Interval::from_ratio(19, 10);
  Interval A = pow(Interval(2), beta + gamma + 1) * zeta(gamma);
  Interval B = 4 * zeta(pstar);
  Interval D = pow(Interval(2), beta + gamma + 2);
  Interval E = pow(Interval(3), 2 * a0) / (2 * a0);
  Interval Sq[3], Tq[3];
  for (int q = 0; q <= 2; ++q) {
    Sq[q] = 2 * A * log_sum_bound(pstar, q) + 2 * B * log_sum_bound(gamma, q) +
            2 * D * log_sum_bound(2 * gamma, q) +
            2 * D * E * log_sum_bound(2 * gamma - 2 * a0, q);
    Tq[q] = 2 * A * log_sum_bound(pstar + 1, q) +
            2 * B * log_sum_bound(gamma + 1, q) +
            2 * D * log_sum_bound(2 * gamma + 1, q) +
            2 * D * E * log_sum_bound(2 * gamma + 1 - 2 * a0, q);
  }
  put("S_0", Sq[0]); put("S_1", Sq[1]); put("S_2", Sq[2]);
  put("T_0", Tq[0]); put("T_1", Tq[1]);

  // E1 components
  Interval e1_d = put(
      "E1_d",
      10 / pow_int(one_m_a2, 2) * pow_int(vm.V_inf, 2) * pow_int(a0, 2) *
              zeta(8 - 4 * a0) +
          6 * pow_int(vm.V_inf, 2) * zeta(6 - 4 * a0) +
          4 * (1 + pow_int(a0, 2)) / pow_int(one_m_a2, 2) * vm.V_inf * vm.V4 *
              a0 * log_sum_bound(4 - 4 * a0, 4) +
          2 * (1 + pow_int(a0, 2)) / pow_int(one_m_a2, 2) * pow_int(vm.V4, 2) *
              pow_int(a0, 4) * log_sum_bound(4 - 4 * a0, 8));
  Interval one_m_a = 1 - a0;
  Interval e1_o = put("E1_o",
                      3 / pow_int(one_m_a, 2) * vm.V1 * Sq[1] +
                          2 / pow_int(one_m_a, 2) * Tq[0] +
                          1 / pow_int(one_m_a, 2) *
                              (3 * pow_int(vm.V1, 2) * Sq[2] + 2 * vm.V1 * Tq[1]));
  out.E1 = put("E1", e1_d + e1_o);

  // E2 components
  Interval e2_d = put("E2_d",
                      2 * vm.D3 * zeta(6) +
                          4 * vm.V1 / pow_int(one_m_a, 3) *
                              log_sum_bound(5 - 2 * a0, 1) +
                          2 * a0 * pow_int(vm.V1, 2) / pow_int(one_m_a, 3) *
                              log_sum_bound(5 - 4 * a0, 2));
  Interval t0_sharp =
      put("T0_sharp", 4 * zeta(gamma + 1) * sqrt(zeta(2 * gamma) * zeta(2 * beta)));
  Interval beta2 = 2 - 4 * a0;
  Interval u0 = put("U0", 4 * zeta(beta2) + pow(Interval(2), beta2 + 2) +
                              pow(Interval(2), beta2 + 2) / beta2);
  Interval v0 = put("V0", 8 * pow_int(zeta(gamma), 2) * zeta(2 * beta));
  Interval e2_o =
      put("E2_o", 2 * pow_int(vm.V_inf, 3) / pow_int(one_m_a, 3) * t0_sharp +
                      2 * a0 * pow_int(vm.V_inf, 4) / pow_int(one_m_a, 3) * u0 *
                          log_sum_bound(5 - 4 * a0, 1) +
                      a0 * pow_int(vm.V_inf, 4) / pow_int(one_m_a, 3) * v0);
  out.E2 = put("E2", e2_d + e2_o);

  // Window constants and assembly
  out.B0 = put("B0", 2 * zeta(3) + 6 * zeta(4) * a0 + 16 * zeta(5) * pow_int(a0, 2) +
                         out.E0 * pow_int(a0, 3));
  out.K0 = put("K0", sqrt(2 * zeta(2)) / one_m_a *
                         sqrt(1 + pow_int(vm.V2, 2) * pow_int(a0, 2)));
  out.E_theta = put("E_theta", out.E0 + out.E1 + out.E2 + 8 * pow_int(out.B0, 2) +
                                   2 * out.B0 * pow_int(out.K0, 3));
  out.E_sigma = put("E_sigma", out.E_theta + 4 * pow_int(out.B0, 2));
  out.C6 = put("C6", out.E0 + out.E1 + out.E2 + 12 * pow_int(out.B0, 2) +
                         2 * out.B0 * pow_int(out.K0, 3));

  bound("E0", 508.0);
  bound("E1", 475.0);
  bound("E2", 67.0);
  bound("B0", 2.834);
  bound("K0", 1.921);
  bound("C6", 1187.0);
  out.all_bounds_hold = true;
  for (const AuditRow& row : out.audit)
    if (!row.pass) out.all_bounds_hold = false;
  return out;
}

}  // namespace

const RemainderConstants& constant_closure() {
  static const RemainderConstants ledger = build_ledger();
  return ledger;
}

ExpansionValue expansion_value(int n) {
  if (n < 20) throw domain_violation("WindowViolation");
  ExpansionCoeffs c = expansion_coeffs();
  const RemainderConstants& lg = constant_closure();
  Interval n3 = pow_int(Interval(n), 3);
  ExpansionValue out;
  out.center = 1 - c.c3 / n3 - c.c4 / (n3 * n) - c.c5 / (n3 * n * n);
  Interval rad = lg.E_sigma / (n3 * n3);
  Interval band;
  mpfr_set(band.lo_mut(), (out.center - rad).lo(), MPFR_RNDD);
  mpfr_set(band.hi_mut(), (out.center + rad).hi(), MPFR_RNDU);
  out.band = band;
  return out;
}

Interval monotonicity_positive_part() {
  ExpansionCoeffs c = expansion_coeffs();
  Interval r = Interval::from_ratio(20, 21);
  return 1200 * c.c3 * pow_int(r, 3) + 80 * c.c4 * pow_int(r, 4) +
         5 * c.c5 * pow_int(r, 5);
}

Interval monotonicity_margin() {
  Interval margin =
      monotonicity_positive_part() - 2 * constant_closure().E_sigma;
  if (!margin.is_positive())
    throw domain_violation("LedgerViolation: monotonicity margin");
  return margin;
}

std::vector<GapRow> gap_verification(int n_lo, int n_hi,
                                     const std::vector<SigmaEnclosure>& enclosures) {
  auto find = [&enclosures](int n) -> const SigmaEnclosure& {
    for (const SigmaEnclosure& e : enclosures)
      if (e.n_sides == n) return e;
    throw domain_violation("gap_verification: missing enclosure");
  };
  std::vector<GapRow> rows;
  for (int n = n_lo; n < n_hi; ++n) {
    const SigmaEnclosure& cur = find(n);
    const SigmaEnclosure& nxt = find(n + 1);
    GapRow row;
    row.n_sides = n;
    row.gap = point_lo(nxt.sigma) - point_hi(cur.sigma);
    if (!(row.gap.lo_d() > 0.0))
      throw domain_violation("GapViolation: N=" + std::to_string(n));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace steklov
