#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "steklov/certify.hpp"
#include "steklov/schur.hpp"

using namespace steklov;

namespace {
struct PrecisionGuard {
  PrecisionGuard() { set_precision_dps(60); }
};
PrecisionGuard guard;

SchurState state_for(int n, long M) {
  Alpha a = Alpha::for_sides(n);
  WeightCoefficients coeffs = coefficient_v_recursive(2 * M + 2, a);
  return beta_and_kappa(n, M, coeffs);
}
}  // namespace

TEST_CASE("beta and kappa basics") {
  SchurState st = state_for(20, 80);
  CHECK(st.beta.is_positive());
  CHECK(st.kappa.hi_d() < 1.0);
  // recorded window constants hold at N = 20
  CHECK(st.beta.hi_d() * 20.0 * 20.0 * 20.0 <= 2.834);
  CHECK(st.kappa.hi_d() * 20.0 <= 1.921);
}

TEST_CASE("zero coupling vector makes F(lambda) = lambda - 1") {
  SchurState st = state_for(12, 20);
  for (Interval& bi : st.data.b) bi = Interval();
  st.beta = Interval();
  st.b_tail_norm = Interval();
  st.coupling_tail = Interval();
  Interval f = schur_F(Interval::from_endpoints(1.5, 1.5), st);
  CHECK(f.contains(Interval::from_ratio(1, 2)));
  CHECK(f.width_d() < 1e-20);
}

TEST_CASE("F is increasing and brackets the root window") {
  SchurState st = state_for(20, 80);
  Interval lam1 = Interval::from_endpoints(1.2, 1.2);
  Interval lam2 = Interval::from_endpoints(1.4, 1.4);
  CHECK(schur_F(lam1, st).hi_d() < schur_F(lam2, st).lo_d());
  // sign change over the certified window
  Interval wlo = (1 + sqrt(1 + 4 * st.beta)) / 2;
  Interval whi = 1 + st.beta / (1 - st.kappa);
  CHECK(schur_F(Interval::from_endpoints(wlo.lo_d(), wlo.lo_d()), st).hi_d() <
        0.0);
  CHECK(schur_F(Interval::from_endpoints(whi.hi_d(), whi.hi_d()), st).lo_d() >
        0.0);
}

TEST_CASE("F rejects lambda at or below kappa") {
  SchurState st = state_for(12, 20);
  Interval low = Interval::from_endpoints(0.0, 0.0) + st.kappa.hi_d() / 2;
  CHECK_THROWS_AS(schur_F(low, st), domain_violation);
}

TEST_CASE("schur root crosses the certification pipeline") {
  for (int n : {8, 12}) {
    long M = 80;
    Alpha a = Alpha::for_sides(n);
    WeightCoefficients coeffs = coefficient_v_recursive(2 * M + 2, a);
    SchurState st = beta_and_kappa(n, M, coeffs);
    SchurRoot root = schur_root(st);
    CHECK(root.lambda_star.lo_d() > 1.0);
    CHECK(root.theta.contains(root.lambda_star - 1));
    BlockEnclosure be = block_enclosure(n, 1, M, coeffs);
    CHECK(intersects(root.lambda_star, be.lambda));
  }
}

TEST_CASE("kappa >= 1 for the triangle raises WindowViolation") {
  SchurState st = state_for(3, 40);
  CHECK(st.kappa.hi_d() >= 1.0);
  CHECK_THROWS_AS(schur_root(st), domain_violation);
}

TEST_CASE("eigenvector section has small residual and decays") {
  long M = 80;
  SchurState st = state_for(20, M);
  SchurRoot root = schur_root(st);
  std::vector<Interval> x = schur_eigenvector_section(root, st);
  REQUIRE(x.size() == static_cast<size_t>(st.data.dim()) + 1);
  CHECK(x[0].contains(Interval(1)));
  double slack = x[1].width_d();
  CHECK(slack < 1e-6);
  // components beyond |m| >= M/2 are tiny compared to the head
  double head = 0.0, tail = 0.0;
  for (long i = 0; i < st.data.dim(); ++i) {
    double v = std::abs(x[static_cast<size_t>(i + 1)].mid_d());
    if (std::labs(st.data.modes[static_cast<size_t>(i)]) < M / 2)
      head = std::max(head, v);
    else
      tail = std::max(tail, v);
  }
  CHECK(tail < head / 100);
}

TEST_CASE("moments at N = 40 intersect their expansions") {
  int n = 40;
  long M = 160;
  Alpha a = Alpha::for_sides(n);
  WeightCoefficients coeffs = coefficient_v_recursive(2 * M + 2, a);
  Interval n3 = pow_int(Interval(n), 3);
  Interval n6 = pow_int(n3, 2);

  Interval m0 = moment(0, n, M, coeffs);
  Interval m1 = moment(1, n, M, coeffs);
  Interval m2 = moment(2, n, M, coeffs);

  // ordering and positivity
  CHECK(m2.lo_d() > 0.0);
  CHECK(m1.hi_d() >= m2.lo_d());
  CHECK(m0.hi_d() >= m1.lo_d());

  Interval z3 = zeta_enclosure(Interval(3));
  Interval z4 = zeta_enclosure(Interval(4));
  Interval z5 = zeta_enclosure(Interval(5));
  Interval c0 = 2 * z3 / n3 + 6 * z4 / (n3 * n) + 16 * z5 / (n3 * n * n);
  Interval c1 = 2 * z4 / (n3 * n) + 8 * z5 / (n3 * n * n);
  Interval c2 = 2 * z5 / (n3 * n * n);
  // generous uniform remainder allowance E/N^6 with E = 600
  Interval band = Interval::from_endpoints(-600.0, 600.0) / n6;
  CHECK(intersects(m0, c0 + band));
  CHECK(intersects(m1, c1 + band));
  CHECK(intersects(m2, c2 + band));
}

TEST_CASE("theta via moments intersects the root theta") {
  int n = 20;
  long M = 80;
  SchurState st = state_for(n, M);
  SchurRoot root = schur_root(st);
  Interval th = theta_via_moments(n, M);
  CHECK(intersects(th, root.theta));
  CHECK_THROWS_AS(theta_via_moments(12, M), domain_violation);
}
