#include "steklov/certify.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cfenv>
#include <cmath>
#include <cstdlib>

// Tail sums are evaluated in upward-rounded double precision: every summand
// is a rounded-up upper bound of a nonnegative quantity, so the accumulated
// value is a certified upper bound.  This file must be compiled with
// -frounding-math so the compiler does not constant-fold across the
// fesetround calls.

namespace steklov {

namespace {

struct RoundUpScope {
  int saved;
  RoundUpScope() : saved(std::fegetround()) { std::fesetround(FE_UPWARD); }
  ~RoundUpScope() { std::fesetround(saved); }
};

double up(const Interval& x) { return mpfr_get_d(x.hi(), MPFR_RNDU); }

Interval point(double v) { return Interval::from_endpoints(v, v); }

// Exact |r + m N| as double (indices stay far below 2^53).
double dweight(int r, long m, int n) {
  return static_cast<double>(std::labs(static_cast<long>(r) + m * n));
}

Eigen::MatrixXd midpoint_matrix(const BlockSection& s) {
  const long d = s.dim();
  Eigen::MatrixXd a(d, d);
  for (long i = 0; i < d; ++i)
    for (long j = 0; j < d; ++j) a(i, j) = s.entry(i, j).mid_d();
  return a;
}

}  // namespace

std::vector<double> power_iteration_guess(const BlockSection& section,
                                          int iters, double epsilon) {
  if (iters < 1) throw domain_violation("power_iteration_guess: iters >= 1");
  const long d = section.dim();
  Eigen::MatrixXd a = midpoint_matrix(section);
  Eigen::VectorXd x = Eigen::VectorXd::Ones(d);
  for (int it = 0; it < iters; ++it) {
    Eigen::VectorXd y = a * x;
    double norm = y.cwiseAbs().maxCoeff();
    if (norm == 0.0 || !std::isfinite(norm)) {
      x = Eigen::VectorXd::Zero(d);
      break;
    }
    x = y / norm;
  }
  std::vector<double> out(static_cast<size_t>(d));
  for (long i = 0; i < d; ++i) out[static_cast<size_t>(i)] = std::abs(x(i)) + epsilon;
  return out;
}

SectionBounds collatz_wielandt_bounds(const BlockSection& section,
                                      const std::vector<double>& x) {
  if (section.block.residue == 0)
    throw domain_violation("collatz_wielandt_bounds: r = 0 block has signed "
                           "entries, use symmetric_bounds_zero_block");
  const long d = section.dim();
  if (static_cast<long>(x.size()) != d)
    throw domain_violation("collatz_wielandt_bounds: size mismatch");
  for (double xi : x)
    if (!(xi > 0.0)) throw domain_violation("NonpositiveVector");

  std::vector<Interval> xe(x.size());
  for (size_t i = 0; i < x.size(); ++i) xe[i] = point(x[i]);

  SectionBounds sb;
  bool first = true;
  for (long i = 0; i < d; ++i) {
    Interval acc;
    for (long j = 0; j < d; ++j)
      acc.addmul_pos(section.entry(i, j), xe[static_cast<size_t>(j)]);
    Interval ratio = acc / xe[static_cast<size_t>(i)];
    if (first) {
      sb.lam_lo = ratio;
      sb.lam_hi = ratio;
      first = false;
    } else {
      sb.lam_lo = imin(sb.lam_lo, ratio);
      sb.lam_hi = imax(sb.lam_hi, ratio);
    }
  }
  return sb;
}

SectionBounds symmetric_bounds_zero_block(const BlockSection& section,
                                          const std::vector<double>& x) {
  const long d = section.dim();
  if (static_cast<long>(x.size()) != d)
    throw domain_violation("symmetric_bounds_zero_block: size mismatch");
  bool nonzero = false;
  for (double xi : x) nonzero = nonzero || xi != 0.0;
  if (!nonzero) throw domain_violation("ZeroVector");

  std::vector<Interval> xe(x.size());
  for (size_t i = 0; i < x.size(); ++i) xe[i] = point(x[i]);

  Interval num, den;
  Interval rowmax;
  for (long i = 0; i < d; ++i) {
    Interval row;
    Interval absrow;
    for (long j = 0; j < d; ++j) {
      row.addmul(section.entry(i, j), xe[static_cast<size_t>(j)]);
      absrow.add_assign(abs(section.entry(i, j)));
    }
    num.addmul(row, xe[static_cast<size_t>(i)]);
    den.addmul(xe[static_cast<size_t>(i)], xe[static_cast<size_t>(i)]);
    rowmax = (i == 0) ? absrow : imax(rowmax, absrow);
  }
  SectionBounds sb;
  sb.lam_lo = num / den;
  sb.lam_hi = rowmax;
  return sb;
}

Interval two_by_two_top(const Interval& lam_b_hi, const Interval& e_norm,
                        const Interval& c_norm) {
  if (!e_norm.is_nonnegative() || !c_norm.is_nonnegative())
    throw domain_violation("two_by_two_top: norms must be nonnegative");
  // lambda_+ is monotone increasing in all three arguments, so evaluate at
  // the upper endpoints; feeding wide intervals through the formula directly
  // would lose the dependency between the (a+c) and (a-c) occurrences.
  auto upper_point = [](const Interval& x) {
    Interval p;
    mpfr_set(p.lo_mut(), x.hi(), MPFR_RNDD);
    mpfr_set(p.hi_mut(), x.hi(), MPFR_RNDU);
    return p;
  };
  Interval a = upper_point(lam_b_hi);
  Interval c = upper_point(c_norm);
  Interval e = upper_point(e_norm);
  Interval disc = pow_int(a - c, 2) + 4 * pow_int(e, 2);
  return ((a + c) + sqrt(disc)) / 2;
}

namespace {

// Upper-bound doubles for v_j, j = 0..jmax, from the interval recurrence.
std::vector<double> v_upper_table(const Alpha& a, long jmax) {
  WeightCoefficients w = coefficient_v_recursive(jmax, a);
  std::vector<double> vu(static_cast<size_t>(jmax + 1));
  for (long j = 0; j <= jmax; ++j) vu[static_cast<size_t>(j)] = up(w.values[static_cast<size_t>(j)]);
  return vu;
}

struct TailContext {
  int n = 0, r = 0;
  long M = 0;
  Interval alpha, G, two_alpha;  // two_alpha = 2*alpha
  long s = 0;                    // d_m >= s + (|m|-1) n on the tail
};

// Gautschi's inequality x^{1-s} < Gamma(x+1)/Gamma(x+s) < (x+1)^{1-s} with
// x = j - alpha, s = 2 alpha gives the sharp pointwise bound
//   v_j <= G (j - alpha)^{2 alpha - 1}  <=  Geff(j0) j^{2 alpha - 1}
// for j >= j0 >= 1, where Geff(j0) := G (1 - alpha/j0)^{2 alpha - 1}.
Interval gautschi_constant(const TailContext& t, long j0) {
  return t.G * pow(1 - t.alpha / j0, t.two_alpha - 1);
}

// sum_{k > K} k^{2a-1} / d_k over one sign class, bounded by
// ((K+1)/(K n)) K^{2a-1} / (1 - 2a) via d_k >= (k-1) n and the tail integral.
Interval tail_power_over_d(const TailContext& t, long K) {
  Interval ex = t.two_alpha - 1;  // negative
  Interval kpow = pow(Interval(K), ex);
  return Interval::from_ratio(K + 1, K) * kpow / ((1 - t.two_alpha) * t.n);
}

// Remainder of sum_{|mode| > Kring} v_{|mode|-M}^2 / d_mode (both signs).
Interval remote_v2_over_d(const TailContext& t, long Kring, long shift) {
  // shift = largest retained |m|; |mode|-shift >= |mode| (1 - shift/Kring).
  Interval ex = 2 * t.two_alpha - 2;  // 4a - 2 < 0
  Interval gfac = gautschi_constant(t, Kring - shift);
  Interval scale = pow(Interval(1) - Interval::from_ratio(shift, Kring), ex);
  // sum_{k>K} k^{4a-2}/d_k <= ((K+1)/(K n)) K^{4a-2} / (2-4a)
  Interval tailsum =
      Interval::from_ratio(Kring + 1, Kring) * pow(Interval(Kring), ex) /
      ((2 - 2 * t.two_alpha) * t.n);
  return 2 * gfac * gfac * scale * tailsum;
}

// Analytic bound on sup_{|mode| > n0} of the weighted row sum
// Phi(n) = sum_{|mu| > M} v_{|n-mu|} / d_mu, valid for every |n| >= n0.
// The row is split by the distance j = n - mu (same-sign modes) and by the
// opposite-sign modes, each piece monotone or unimodal in n so that a single
// evaluation dominates the whole range n >= n0.
Interval c_tail_analytic(const TailContext& t, long n0) {
  Interval a = t.alpha, G = t.G, two_a = t.two_alpha;
  long n = t.n;
  // q1: |n - mu| <= n/2, so mu in [n/2, 3n/2] and d_mu >= s + (n/2 - 1) N.
  // sum_{|j| <= n/2} v_j <= 1 + 2G (1-a)^{2a-1} + (G/a) (n/2)^{2a}; the whole
  // quotient is decreasing in n, evaluated at n0.
  Interval half = Interval(n0) / 2;
  Interval dhalf = Interval(t.s) + (half - 1) * n;
  Interval kernel_sum =
      1 + 2 * G * pow(1 - a, two_a - 1) + (G / a) * pow(half, two_a);
  Interval q1 = kernel_sum / dhalf;
  // q2: opposite-sign modes -mu, M < mu.  For mu <= n, v_{n+mu} <= Geff n^{2a-1}
  // and sum 1/d_mu <= (1/N)(1/M + log(n/M)); for mu > n, v <= Geff mu^{2a-1}.
  // g(x) = x^{2a-1}(1/M + log(x/M)) is unimodal, peak at x = M e^{1/(1-2a)-1/M}.
  Interval geff = gautschi_constant(t, t.M + 1);
  auto g2 = [&](const Interval& x) {
    return pow(x, two_a - 1) *
           (Interval::from_ratio(1, t.M) + log(x / t.M));
  };
  Interval x2star = t.M * exp(recip(1 - two_a) - Interval::from_ratio(1, t.M));
  Interval g2sup = imax(g2(Interval(n0)), g2(x2star));
  Interval q2 = geff * (g2sup / n + tail_power_over_d(t, n0));
  // q3: same-sign modes mu > 3n/2, so |n - mu| >= mu/3.
  long k0 = (3 * n0) / 2;
  Interval q3 =
      gautschi_constant(t, n0 / 2) * pow(Interval(3), 1 - two_a) *
      tail_power_over_d(t, k0);
  // q4: same-sign modes M < mu < n/2, so |n - mu| > n/2 and
  // sum 1/d_mu <= (1/N)(1/M + log(n/(2M))).  f is unimodal as in q2 with the
  // peak at x* = 2M e^{1/(1-2a) - 1/M}.
  auto f4 = [&](const Interval& x) {
    return pow(x / 2, two_a - 1) *
           (Interval::from_ratio(1, t.M) + log(x / (2 * t.M)));
  };
  Interval x4star =
      2 * t.M * exp(recip(1 - two_a) - Interval::from_ratio(1, t.M));
  Interval q4sup;
  if (n0 > 2 * t.M + 2) q4sup = imax(f4(Interval(n0)), f4(x4star));
  else q4sup = f4(x4star);  // region empty until n > 2(M+1)
  Interval q4 = (gautschi_constant(t, t.M) / t.n) * q4sup;
  return q1 + q2 + q3 + q4;
}

struct TailParts {
  double e_base = 0.0;   // tail coupling bound before rank-one corrections
  double c_base = 0.0;   // tail compression bound before rank-one corrections
  double b0_norm = 0.0;  // ||b_0||, r = 0 only
  double b0_tail = 0.0;  // norm of the discarded part of b_0, r = 0 only
};

TailParts tail_parts(int n, const BlockIndex& block, long M,
                     const WeightCoefficients& coeffs) {
  if (M < 1) throw domain_violation("tail_hs_bounds: M >= 1");
  const int r = block.residue;
  TailContext t;
  t.n = n;
  t.r = r;
  t.M = M;
  t.alpha = coeffs.a.alpha;
  t.two_alpha = 2 * t.alpha;
  t.G = gamma_enclosure(1 - t.alpha) / gamma_enclosure(t.alpha);
  t.s = (r == 0) ? n : std::min(r, n - r);
  if (!(1 - t.two_alpha).is_positive())
    throw domain_violation("TailDivergence: alpha >= 1/2");

  const long wmul = (n == 3) ? 16 : (n <= 6 ? 4 : 2);
  const long W = wmul * M;
  const bool refine = (n == 3 && r != 0);
  const long KE = refine ? std::max<long>(20000, 3 * M) : 0;
  const long jext = std::max({3 * M, 5 * W, M + KE}) + 4;
  const std::vector<double> vu = v_upper_table(coeffs.a, jext);

  // Scalar constants computed in interval arithmetic, exported as upper
  // bounds before entering the directed-rounding block.
  const double r_inner =
      up(remote_v2_over_d(t, 2 * M, M));  // for the E ring, |mu| > 2M
  const double b0_rem =
      (r == 0) ? up(remote_v2_over_d(t, 2 * M, 0)) : 0.0;
  const double c_analytic = up(c_tail_analytic(t, W + 1));
  // Per-n window remainder: Phi residue beyond |mu| > 4|n| is bounded by
  // C_win * ((K+1)/K) K^{2a-1} with K = 4|n|.
  const Interval c_win_coef =
      2 * gautschi_constant(t, 3 * (M + 1)) *
      pow(Interval::from_ratio(4, 3), 1 - t.two_alpha) /
      ((1 - t.two_alpha) * n);
  std::vector<double> win_rem(static_cast<size_t>(W - M));
  for (long nn = M + 1; nn <= W; ++nn) {
    long K = 4 * nn;
    Interval kp = pow(Interval(K), t.two_alpha - 1);
    win_rem[static_cast<size_t>(nn - M - 1)] =
        up(c_win_coef * Interval::from_ratio(K + 1, K) * kp);
  }
  const double remote_ee =
      refine ? up(remote_v2_over_d(t, KE, M)) : 0.0;

  double e2_hs = 0.0, c_base = 0.0, dm_sum = 0.0;
  double b0_norm = 0.0, b0_tail = 0.0, ee_ref = -1.0;
  {
    RoundUpScope dir;

    // Inverse diagonal weights on the ring, both sign classes.
    const long kmax = std::max({2 * M, 4 * W, KE});
    std::vector<double> invp(static_cast<size_t>(kmax + 1), 0.0);
    std::vector<double> invm(static_cast<size_t>(kmax + 1), 0.0);
    for (long k = 1; k <= kmax; ++k) {
      invp[static_cast<size_t>(k)] = 1.0 / dweight(r, k, n);
      invm[static_cast<size_t>(k)] = 1.0 / dweight(r, -k, n);
    }

    // ||E||_HS^2: exact ring M < |mu| <= 2M plus the remote remainder.
    for (long m = -M; m <= M; ++m) {
      if (r == 0 && m == 0) continue;
      double inv_dm = 1.0 / dweight(r, m, n);
      dm_sum += inv_dm;
      double inner = 0.0;
      for (long k = M + 1; k <= 2 * M; ++k) {
        double vp = vu[static_cast<size_t>(std::labs(m - k))];
        double vm = vu[static_cast<size_t>(std::labs(m + k))];
        inner += vp * vp * invp[static_cast<size_t>(k)] +
                 vm * vm * invm[static_cast<size_t>(k)];
      }
      e2_hs += inv_dm * inner;
    }
    e2_hs += dm_sum * r_inner;

    // ||C||: windowed Schur test with weight d^{-1/2}, then the analytic
    // envelope for |n| beyond the window.
    for (long nn = M + 1; nn <= W; ++nn) {
      long K = 4 * nn;
      double sp = 0.0, sm = 0.0;  // rows n = +nn and n = -nn
      for (long k = M + 1; k <= K; ++k) {
        double a1 = vu[static_cast<size_t>(std::labs(nn - k))];
        double a2 = vu[static_cast<size_t>(nn + k)];
        sp += a1 * invp[static_cast<size_t>(k)] + a2 * invm[static_cast<size_t>(k)];
        sm += a2 * invp[static_cast<size_t>(k)] + a1 * invm[static_cast<size_t>(k)];
      }
      double rem = win_rem[static_cast<size_t>(nn - M - 1)];
      c_base = std::max({c_base, sp + rem, sm + rem});
    }
    if (std::getenv("STEKLOV_DEBUG_TAILS"))
      std::fprintf(stderr,
                   "n=%d r=%d  window=%.6f analytic=%.6f e2_hs=%.6f\n",
                   n, r, c_base, c_analytic, e2_hs);
    c_base = std::max(c_base, c_analytic);

    // Rank-one corrections for the reduced zero block.
    if (r == 0) {
      double head = 0.0, tail = 0.0;
      for (long k = 1; k <= M; ++k) {
        double v = vu[static_cast<size_t>(k)];
        head += 2.0 * v * v * invp[static_cast<size_t>(k)];
      }
      for (long k = M + 1; k <= 2 * M; ++k) {
        double v = vu[static_cast<size_t>(k)];
        tail += 2.0 * v * v * invp[static_cast<size_t>(k)];
      }
      tail += b0_rem;
      b0_tail = std::sqrt(tail);
      b0_norm = std::sqrt(head + tail);
    }

    // Sharper ||E|| for the slowly decaying N = 3 blocks: certified
    // Collatz-Wielandt upper bound on lambda_max(E E^T) over the ring
    // |mu| <= KE, plus a rank-one envelope for the remote part.
    if (refine) {
      const long dim = 2 * M + 1;
      const long ring = 2 * (KE - M);
      std::vector<double> isq(static_cast<size_t>(dim));
      for (long i = 0; i < dim; ++i) {
        Interval d(static_cast<long>(std::labs(r + (i - M) * n)));
        isq[static_cast<size_t>(i)] = up(recip(sqrt(d)));
      }
      Eigen::MatrixXd g(dim, ring);
      for (long c = 0; c < ring; ++c) {
        long mu = (c < KE - M) ? (M + 1 + c) : -(M + 1 + (c - (KE - M)));
        Interval d(static_cast<long>(std::labs(r + mu * n)));
        double sqinv = up(recip(sqrt(d)));
        for (long i = 0; i < dim; ++i) {
          long m = i - M;
          g(i, c) = vu[static_cast<size_t>(std::labs(m - mu))] * sqinv;
        }
      }
      Eigen::MatrixXd s = g * g.transpose();  // upward-rounded, >= exact
      for (long i = 0; i < dim; ++i)
        for (long j = 0; j < dim; ++j)
          s(i, j) *= isq[static_cast<size_t>(i)] * isq[static_cast<size_t>(j)];
      Eigen::VectorXd x = Eigen::VectorXd::Ones(dim);
      for (int it = 0; it < 60; ++it) {
        Eigen::VectorXd y = s * x;
        x = y / y.maxCoeff();
      }
      for (long i = 0; i < dim; ++i) x(i) = std::abs(x(i)) + 1e-12;
      Eigen::VectorXd sx = s * x;
      double lam = 0.0;
      for (long i = 0; i < dim; ++i) lam = std::max(lam, sx(i) / x(i));
      ee_ref = lam + dm_sum * remote_ee;
    }
  }

  double e2 = e2_hs;
  if (ee_ref >= 0.0 && ee_ref < e2) e2 = ee_ref;
  RoundUpScope dir;
  TailParts tp;
  tp.e_base = std::sqrt(e2);
  tp.c_base = c_base;
  tp.b0_norm = b0_norm;
  tp.b0_tail = b0_tail;
  if (!std::isfinite(tp.e_base) || !std::isfinite(tp.c_base))
    throw domain_violation("TailDivergence");
  return tp;
}

TailBounds reduced_tail_bounds(const TailParts& tp, int r) {
  RoundUpScope dir;
  double e_up = tp.e_base;
  double c_up = tp.c_base;
  if (r == 0) {
    // Rank-one correction -b_0 (x) b_0 / v_0 contributes to both tail blocks;
    // v_0 = 1 exactly.
    e_up += tp.b0_tail * tp.b0_norm;
    c_up += tp.b0_tail * tp.b0_tail;
  }
  TailBounds tb;
  tb.c_norm = Interval::from_endpoints(0.0, c_up);
  tb.e_norm = Interval::from_endpoints(0.0, e_up);
  return tb;
}

}  // namespace

TailBounds tail_hs_bounds(int n, const BlockIndex& block, long M,
                          const WeightCoefficients& coeffs) {
  return reduced_tail_bounds(tail_parts(n, block, M, coeffs), block.residue);
}

BlockEnclosure block_enclosure(int n, int r, long M,
                               const WeightCoefficients& coeffs) {
  BlockEnclosure be;
  be.block = BlockIndex{n, r};
  be.section_half_width = M;
  BlockSection sec = (r == 0)
                         ? assemble_zero_block_section(n, M, coeffs)
                         : assemble_block_section(be.block, M, coeffs);
  std::vector<double> x = power_iteration_guess(sec, 25, 1e-30);
  be.section = (r == 0) ? symmetric_bounds_zero_block(sec, x)
                        : collatz_wielandt_bounds(sec, x);
  TailParts tp = tail_parts(n, be.block, M, coeffs);
  be.tail = reduced_tail_bounds(tp, r);
  Interval top =
      two_by_two_top(be.section.lam_hi, be.tail.e_norm, be.tail.c_norm);
  if (r == 0) {
    // Second upper bound for the reduced zero block: the rank-one correction
    // is negative semidefinite, so lambda_max(K~0) <= lambda_max(K0), and K0
    // (entries v_{m-l}/sqrt(d_m d_l), no correction) is entrywise positive,
    // so Collatz-Wielandt applies to it with the uncorrected tail bounds.
    // The ell-infinity bound above degrades badly for small N, where this
    // route is much sharper.
    const long d = sec.dim();
    std::vector<Interval> b(static_cast<size_t>(d));
    for (long i = 0; i < d; ++i) {
      long am = std::labs(sec.modes[static_cast<size_t>(i)]);
      b[static_cast<size_t>(i)] = coeffs.v(am) / sqrt(Interval(am * n));
    }
    std::vector<Interval> k0(static_cast<size_t>(d * d));
    Eigen::MatrixXd mid(d, d);
    for (long i = 0; i < d; ++i)
      for (long j = 0; j < d; ++j) {
        Interval& e = k0[static_cast<size_t>(i * d + j)];
        e = sec.entry(i, j) +
            b[static_cast<size_t>(i)] * b[static_cast<size_t>(j)];
        mid(i, j) = e.mid_d();
      }
    Eigen::VectorXd px = Eigen::VectorXd::Ones(d);
    for (int it = 0; it < 25; ++it) {
      Eigen::VectorXd y = mid * px;
      px = y / y.cwiseAbs().maxCoeff();
    }
    Interval ratio_max;
    for (long i = 0; i < d; ++i) {
      Interval acc;
      for (long j = 0; j < d; ++j)
        acc.addmul_pos(k0[static_cast<size_t>(i * d + j)],
                       point(std::abs(px(j)) + 1e-30));
      Interval ratio = acc / point(std::abs(px(i)) + 1e-30);
      ratio_max = (i == 0) ? ratio : imax(ratio_max, ratio);
    }
    Interval top0 = two_by_two_top(
        ratio_max, Interval::from_endpoints(0.0, tp.e_base),
        Interval::from_endpoints(0.0, tp.c_base));
    if (mpfr_cmp(top0.hi(), top.hi()) < 0) top = top0;
  }
  Interval lambda;
  mpfr_set(lambda.lo_mut(), be.section.lam_lo.lo(), MPFR_RNDD);
  mpfr_set(lambda.hi_mut(), top.hi(), MPFR_RNDU);
  be.lambda = lambda;
  return be;
}

SigmaEnclosure sigma_enclosure(int n, long M) {
  if (n < 3) throw domain_violation("sigma_enclosure: N >= 3");
  if (M < 1) throw domain_violation("sigma_enclosure: M >= 1");
  Alpha a = Alpha::for_sides(n);
  WeightCoefficients coeffs = coefficient_v_recursive(2 * M + 2, a);

  SigmaEnclosure se;
  se.n_sides = n;
  se.per_block.resize(static_cast<size_t>(n));
  for (int r = 0; r <= n / 2; ++r) {
    BlockEnclosure be = block_enclosure(n, r, M, coeffs);
    se.per_block[static_cast<size_t>(r)] = be;
    if (r != 0 && r != n - r) {
      // Conjugate blocks r and N-r are unitarily equivalent (index
      // relabeling m -> -(m+1)); identical enclosure.
      BlockEnclosure mirror = be;
      mirror.block.residue = n - r;
      se.per_block[static_cast<size_t>(n - r)] = mirror;
    }
  }

  Interval lam_lo, lam_hi;
  int argmax = 0;
  bool first = true;
  for (const BlockEnclosure& be : se.per_block) {
    Interval blo, bhi;
    mpfr_set(blo.lo_mut(), be.lambda.lo(), MPFR_RNDD);
    mpfr_set(blo.hi_mut(), be.lambda.lo(), MPFR_RNDU);
    mpfr_set(bhi.lo_mut(), be.lambda.hi(), MPFR_RNDD);
    mpfr_set(bhi.hi_mut(), be.lambda.hi(), MPFR_RNDU);
    if (first) {
      lam_lo = blo;
      lam_hi = bhi;
      argmax = be.block.residue;
      first = false;
    } else {
      lam_lo = imax(lam_lo, blo);
      if (mpfr_cmp(be.lambda.hi(), lam_hi.hi()) > 0) {
        lam_hi = bhi;
        argmax = be.block.residue;
      }
    }
  }
  Interval lambda;
  mpfr_set(lambda.lo_mut(), lam_lo.lo(), MPFR_RNDD);
  mpfr_set(lambda.hi_mut(), lam_hi.hi(), MPFR_RNDU);
  se.sigma = recip(lambda);
  se.argmax_block = argmax;
  return se;
}

}  // namespace steklov
