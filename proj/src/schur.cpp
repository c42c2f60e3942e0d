#include "steklov/schur.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cfenv>
#include <cmath>

#include "steklov/certify.hpp"

// The kappa window scan runs in upward-rounded double precision, like the
// tail sums in certify.cpp; this file is compiled with -frounding-math.

namespace steklov {

namespace {

struct RoundUpScope {
  int saved;
  RoundUpScope() : saved(std::fegetround()) { std::fesetround(FE_UPWARD); }
  ~RoundUpScope() { std::fesetround(saved); }
};

double up(const Interval& x) { return mpfr_get_d(x.hi(), MPFR_RNDU); }

Interval point(double v) { return Interval::from_endpoints(v, v); }

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

struct VmTail {
  Interval alpha, two_alpha, G;
  int n;

  explicit VmTail(const Alpha& a)
      : alpha(a.alpha), two_alpha(2 * a.alpha), n(a.n_sides) {
    G = gamma_enclosure(1 - alpha) / gamma_enclosure(alpha);
  }
  // v_j <= geff(j0) j^{2a-1} for j >= j0 (Gautschi).
  Interval geff(long j0) const {
    return G * pow(1 - alpha / j0, two_alpha - 1);
  }
  // sum_{k > K} k^p / d_k over one sign class (d_k >= (k-1) N), p < -1.
  Interval tail_pow_over_d(const Interval& p, long K) const {
    return Interval::from_ratio(K + 1, K) * pow(Interval(K), p + 1) /
           ((-p - 1) * n);
  }
};

// sum_{|m| > M} v_m^2 / d_m, critical-block weights d_m = |1 + mN|.
// v_m^2 <= geff^2 m^{4a-2}, so the summand exponent p is 4a-3 after the
// extra 1/d_m.
Interval b_tail_sq(const VmTail& t, long M) {
  Interval p = 2 * t.two_alpha - 3;
  return 2 * pow_int(t.geff(M + 1), 2) * t.tail_pow_over_d(p, M);
}

// sum_{|m| > M} v_m / d_m.
Interval vm_over_d_tail(const VmTail& t, long M) {
  return 2 * t.geff(M + 1) * t.tail_pow_over_d(t.two_alpha - 2, M);
}

// Parseval: sum_{m in Z} v_m^2 = Gamma(1-a)^4 Gamma(1-4a) / Gamma(1-2a)^4,
// finite only for a < 1/4 (N >= 5).
Interval parseval_v_norm_sq(const VmTail& t) {
  Interval a = t.alpha;
  return pow_int(gamma_enclosure(1 - a), 4) * gamma_enclosure(1 - 4 * a) /
         pow_int(gamma_enclosure(1 - 2 * a), 4);
}

// Certified upper bound on ||K|| by the Schur test with weight d^{-1/2}:
// ||K|| <= sup_{n in Z*} Phi(n), Phi(n) = sum_{mu in Z*} v_{|n-mu|} / d_mu.
// Finite for every N >= 3, unlike the Hilbert-Schmidt chain.
Interval kappa_schur_test(const VmTail& t, long M,
                          const WeightCoefficients& coeffs) {
  const int n = t.n;
  const long W = 2 * M + 1;
  const long jext = W + 4 * W + 2;
  WeightCoefficients ext = coefficient_v_recursive(jext, coeffs.a);
  std::vector<double> vu(static_cast<size_t>(jext + 1));
  for (long j = 0; j <= jext; ++j)
    vu[static_cast<size_t>(j)] = up(ext.values[static_cast<size_t>(j)]);

  const Interval rem_coef = 2 * t.geff(3 * M) *
                            pow(Interval::from_ratio(4, 3), 1 - t.two_alpha) /
                            ((1 - t.two_alpha) * n);
  std::vector<double> rem(static_cast<size_t>(W + 1), 0.0);
  for (long nn = 1; nn <= W; ++nn) {
    long K = 4 * std::max(nn, M);
    rem[static_cast<size_t>(nn)] =
        up(rem_coef * Interval::from_ratio(K + 1, K) *
           pow(Interval(K), t.two_alpha - 1));
  }

  double winmax = 0.0;
  {
    RoundUpScope dir;
    const long kmax = 4 * std::max(W, M);
    std::vector<double> invp(static_cast<size_t>(kmax + 1), 0.0);
    std::vector<double> invm(static_cast<size_t>(kmax + 1), 0.0);
    for (long k = 1; k <= kmax; ++k) {
      invp[static_cast<size_t>(k)] = 1.0 / static_cast<double>(k * n + 1);
      invm[static_cast<size_t>(k)] = 1.0 / static_cast<double>(k * n - 1);
    }
    for (long nn = 1; nn <= W; ++nn) {
      long K = 4 * std::max(nn, M);
      double sp = 0.0, sm = 0.0;  // rows +nn and -nn
      for (long k = 1; k <= K; ++k) {
        double a1 = vu[static_cast<size_t>(std::labs(nn - k))];
        double a2 = vu[static_cast<size_t>(nn + k)];
        sp += a1 * invp[static_cast<size_t>(k)] + a2 * invm[static_cast<size_t>(k)];
        sm += a2 * invp[static_cast<size_t>(k)] + a1 * invm[static_cast<size_t>(k)];
      }
      double r = rem[static_cast<size_t>(nn)];
      winmax = std::max({winmax, sp + r, sm + r});
    }
  }

  // Analytic envelope for |n| > W: split the row into |n-mu| <= n/2, the
  // opposite-sign modes, same-sign modes below n/2, and same-sign modes
  // beyond 3n/2; each piece is monotone or unimodal with its peak below W.
  Interval a = t.alpha, two_a = t.two_alpha, G = t.G;
  long n0 = W + 1;
  Interval half = Interval(n0) / 2;
  Interval dhalf = Interval(1) + (half - 1) * n;
  Interval q1 =
      (1 + 2 * G * pow(1 - a, two_a - 1) + (G / a) * pow(half, two_a)) / dhalf;
  Interval logn0 = log(Interval(n0));
  Interval qopp = t.geff(n0) * (pow(Interval(n0), two_a - 1) * (1 + logn0) /
                                    (n - 1) +
                                t.tail_pow_over_d(two_a - 2, n0));
  Interval qnear =
      t.geff(n0 / 2) * pow(half, two_a - 1) * (1 + log(half)) / (n - 1);
  Interval q3 = t.geff(n0 / 2) * pow(Interval(3), 1 - two_a) *
                t.tail_pow_over_d(two_a - 2, (3 * n0) / 2);
  Interval analytic = q1 + qopp + qnear + q3;

  Interval bound = imax(point(winmax), analytic);
  return Interval::from_endpoints(0.0, bound.hi_d());
}

Eigen::VectorXd section_solve_mid(const SchurState& st, double lam_mid) {
  const long d = st.data.dim();
  Eigen::MatrixXd A(d, d);
  Eigen::VectorXd rhs(d);
  for (long i = 0; i < d; ++i) {
    rhs(i) = st.data.b[static_cast<size_t>(i)].mid_d();
    for (long j = 0; j < d; ++j)
      A(i, j) = (i == j ? lam_mid : 0.0) - st.data.k_entry(i, j).mid_d();
  }
  return A.partialPivLu().solve(rhs);
}

struct SectionSolve {
  std::vector<Interval> y;  // approximate solve, exact doubles
  Interval residual_norm;   // ||b - (lambda I - K) y||_2
  Interval y_dot_b;
  Interval b_norm;
};

SectionSolve resolvent_section(const SchurState& st, const Interval& lambda) {
  const long d = st.data.dim();
  Eigen::VectorXd yt = section_solve_mid(st, lambda.mid_d());
  SectionSolve out;
  out.y.resize(static_cast<size_t>(d));
  for (long i = 0; i < d; ++i) out.y[static_cast<size_t>(i)] = point(yt(i));

  Interval rsq, bsq;
  for (long i = 0; i < d; ++i) {
    Interval ky;
    for (long j = 0; j < d; ++j)
      ky.addmul(st.data.k_entry(i, j), out.y[static_cast<size_t>(j)]);
    Interval ri = st.data.b[static_cast<size_t>(i)] -
                  lambda * out.y[static_cast<size_t>(i)] + ky;
    rsq.add_assign(pow_int(ri, 2));
    bsq.add_assign(pow_int(st.data.b[static_cast<size_t>(i)], 2));
    out.y_dot_b.addmul(out.y[static_cast<size_t>(i)],
                       st.data.b[static_cast<size_t>(i)]);
  }
  out.residual_norm = sqrt(rsq);
  out.b_norm = sqrt(bsq);
  return out;
}

}  // namespace

SchurState beta_and_kappa(int n, long M, const WeightCoefficients& coeffs) {
  if (n < 3) throw domain_violation("beta_and_kappa: N >= 3");
  if (M < 1) throw domain_violation("beta_and_kappa: M >= 1");
  SchurState st;
  st.n_sides = n;
  st.half_width = M;
  st.data = critical_block_data(n, M, coeffs);

  VmTail t(coeffs.a);
  Interval beta_num;
  for (const Interval& bi : st.data.b) beta_num.add_assign(pow_int(bi, 2));
  Interval btail_sq = b_tail_sq(t, M);
  Interval beta;
  mpfr_set(beta.lo_mut(), beta_num.lo(), MPFR_RNDD);
  mpfr_set(beta.hi_mut(), (beta_num + btail_sq).hi(), MPFR_RNDU);
  st.beta = beta;
  st.b_tail_norm = sqrt(Interval::from_endpoints(0.0, btail_sq.hi_d()));

  Interval kappa = kappa_schur_test(t, M, coeffs);
  if (4 * t.alpha.hi_d() < 1.0) {
    // Hilbert-Schmidt chain, valid once Parseval converges (N >= 5):
    // ||K||_HS^2 <= (sum 1/d_m^2) ||v||^2 <= 2 zeta(2)/(N-1)^2 ||v||^2.
    Interval hs = sqrt(2 * zeta_enclosure(Interval(2))) / (n - 1) *
                  sqrt(parseval_v_norm_sq(t));
    kappa = imin(kappa, Interval::from_endpoints(0.0, hs.hi_d()));
  }
  st.kappa = Interval::from_endpoints(0.0, kappa.hi_d());

  st.coupling_tail =
      tail_hs_bounds(n, BlockIndex{n, 1}, M, coeffs).e_norm;
  return st;
}

Interval schur_F(const Interval& lambda, const SchurState& st) {
  if (mpfr_cmp(lambda.lo(), st.kappa.hi()) <= 0)
    throw domain_violation("SpectrumProximity");
  Interval gap = point_lo(lambda) - point_hi(st.kappa);

  SectionSolve sol = resolvent_section(st, lambda);
  // section value: s_M = <y~, b> up to ||(lambda - K_M)^{-1} r|| ||b||.
  Interval delta = sol.residual_norm * sol.b_norm / gap;
  // truncation to the infinite operator, 0 <= s - s_M <= Delta.
  Interval e = point_hi(st.coupling_tail);
  Interval bt = point_hi(st.b_tail_norm);
  Interval rootb = sqrt(point_hi(st.beta));
  Interval big =
      sol.b_norm * (pow_int(e, 2) * rootb / gap + e * bt) / pow_int(gap, 2) +
      bt * (bt + e * rootb / gap) / gap;

  Interval s_hi = sol.y_dot_b + delta + big;
  Interval s_full;
  mpfr_set(s_full.lo_mut(), (sol.y_dot_b - delta).lo(), MPFR_RNDD);
  mpfr_set(s_full.hi_mut(), s_hi.hi(), MPFR_RNDU);
  return lambda - 1 - s_full;
}

SchurRoot schur_root(const SchurState& st) {
  if (mpfr_cmp_d(st.kappa.hi(), 1.0) >= 0)
    throw domain_violation("WindowViolation");
  Interval lo = (1 + sqrt(1 + 4 * point_lo(st.beta))) / 2;
  Interval hi = 1 + point_hi(st.beta) / (1 - point_hi(st.kappa));
  Interval a = point_lo(lo);
  Interval b = point_hi(hi);

  Interval fa = schur_F(a, st);
  Interval fb = schur_F(b, st);
  if (!(fa.hi_d() < 0.0) || !(fb.lo_d() > 0.0))
    throw domain_violation("RootBracketFailure");

  Interval tol = Interval::from_string("1e-25");
  for (int it = 0; it < 300; ++it) {
    Interval width = point_hi(b) - point_lo(a);
    if (certainly_less(width, tol)) break;
    Interval mid = (a + b) / 2;
    mid = point_lo(mid);
    Interval fm = schur_F(mid, st);
    if (fm.hi_d() < 0.0) a = mid;
    else if (fm.lo_d() > 0.0) b = mid;
    else break;  // F(mid) encloses 0: can no longer separate signs
  }
  SchurRoot root;
  Interval lam;
  mpfr_set(lam.lo_mut(), a.lo(), MPFR_RNDD);
  mpfr_set(lam.hi_mut(), b.hi(), MPFR_RNDU);
  root.lambda_star = lam;
  root.theta = lam - 1;
  return root;
}

std::vector<Interval> schur_eigenvector_section(const SchurRoot& root,
                                                const SchurState& st) {
  SectionSolve sol = resolvent_section(st, root.lambda_star);
  Interval gap = point_lo(root.lambda_star) - point_hi(st.kappa);
  if (!gap.is_positive()) throw domain_violation("SpectrumProximity");
  double slack = (sol.residual_norm / gap).hi_d();
  std::vector<Interval> x;
  x.reserve(sol.y.size() + 1);
  x.push_back(Interval(1));
  for (const Interval& yi : sol.y)
    x.push_back(yi + Interval::from_endpoints(-slack, slack));
  return x;
}

Interval moment(int j, int n, long M, const WeightCoefficients& coeffs) {
  if (j < 0 || j > 2) throw domain_violation("moment: j in {0,1,2}");
  SchurState st = beta_and_kappa(n, M, coeffs);
  VmTail t(coeffs.a);
  if (j == 0) return st.beta;

  const long d = st.data.dim();
  std::vector<Interval> w(static_cast<size_t>(d));
  for (long i = 0; i < d; ++i)
    for (long k = 0; k < d; ++k)
      w[static_cast<size_t>(i)].addmul_pos(st.data.k_entry(i, k),
                                           st.data.b[static_cast<size_t>(k)]);

  if (j == 1) {
    // M_1 = <Kb, b> = sum v_m v_l v_{m-l} / (d_m d_l); tail terms have at
    // least one index beyond M.
    Interval num;
    for (long i = 0; i < d; ++i)
      num.addmul_pos(w[static_cast<size_t>(i)],
                     st.data.b[static_cast<size_t>(i)]);
    Interval svd = vm_over_d_tail(t, M);
    // sum_l (v_l / d_l) v_{m-l} <= (sum_l v_l / d_l) * v_0 with v_0 = 1.
    Interval vk_over_k =
        coeffs.v(1) +
        t.geff(2) * (pow(Interval(2), t.two_alpha - 2) +
                     pow(Interval(2), t.two_alpha - 1) / (1 - t.two_alpha));
    Interval t_vd = (2 * vk_over_k) / (n - 1);
    Interval tail = 2 * svd * t_vd;
    if (4 * t.alpha.hi_d() < 1.0) {
      // Cauchy-Schwarz alternative, sharper for large N.
      Interval vnorm = sqrt(parseval_v_norm_sq(t));
      Interval cs = 2 * svd * (vnorm / (n - 1)) * vnorm;
      tail = imin(tail, cs);
    }
    Interval out;
    mpfr_set(out.lo_mut(), num.lo(), MPFR_RNDD);
    mpfr_set(out.hi_mut(), (num + tail).hi(), MPFR_RNDU);
    return out;
  }

  // M_2 = ||Kb||^2.
  Interval wsq;
  for (const Interval& wi : w) wsq.add_assign(pow_int(wi, 2));
  TailBounds tb = tail_hs_bounds(n, BlockIndex{n, 1}, M, coeffs);
  Interval wn = sqrt(wsq);
  Interval upper = point_hi(wn) + point_hi(tb.e_norm) * sqrt(point_hi(st.beta)) +
                   (point_hi(tb.e_norm) + point_hi(tb.c_norm)) *
                       point_hi(st.b_tail_norm);
  Interval out;
  mpfr_set(out.lo_mut(), wsq.lo(), MPFR_RNDD);
  mpfr_set(out.hi_mut(), pow_int(upper, 2).hi(), MPFR_RNDU);
  return out;
}

Interval theta_via_moments(int n, long M) {
  if (n < 20) throw domain_violation("WindowViolation");
  Alpha a = Alpha::for_sides(n);
  WeightCoefficients coeffs = coefficient_v_recursive(2 * M + 2, a);
  SchurState st = beta_and_kappa(n, M, coeffs);
  Interval sum = moment(0, n, M, coeffs) + moment(1, n, M, coeffs) +
                 moment(2, n, M, coeffs);
  Interval beta = point_hi(st.beta);
  Interval kappa = point_hi(st.kappa);
  Interval err = 8 * pow_int(beta, 2) + 2 * beta * pow_int(kappa, 3);
  double e = err.hi_d();
  return sum + Interval::from_endpoints(-e, e);
}

}  // namespace steklov
