#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "steklov/certify.hpp"

using namespace steklov;

namespace {
struct PrecisionGuard {
  PrecisionGuard() { set_precision_dps(60); }
};
PrecisionGuard guard;

BlockSection tiny_section(std::vector<double> entries, bool zero_block) {
  BlockSection sec;
  sec.block = BlockIndex{5, zero_block ? 0 : 1};
  sec.half_width = 1;
  sec.zero_mode_excluded = zero_block;
  sec.modes = {-1, 1};
  for (double e : entries) sec.mat.push_back(Interval::from_endpoints(e, e));
  return sec;
}
}  // namespace

TEST_CASE("Collatz-Wielandt bounds on a 2x2 positive matrix") {
  BlockSection sec = tiny_section({2, 1, 1, 2}, false);
  SectionBounds sb = collatz_wielandt_bounds(sec, {1.0, 2.0});
  // ratios (Bx)_i / x_i = (4/1, 5/2)
  CHECK(sb.lam_lo.lo_d() == doctest::Approx(2.5).epsilon(1e-12));
  CHECK(sb.lam_hi.hi_d() == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(sb.lam_lo.lo_d() <= 3.0);  // true lambda_max
  CHECK(sb.lam_hi.hi_d() >= 3.0);
  // better test vector tightens both sides
  SectionBounds tight = collatz_wielandt_bounds(sec, {1.0, 1.0});
  CHECK(tight.lam_lo.lo_d() >= sb.lam_lo.lo_d());
  CHECK(tight.lam_hi.hi_d() <= sb.lam_hi.hi_d());
  CHECK_THROWS_AS(collatz_wielandt_bounds(sec, {1.0, 0.0}), domain_violation);
}

TEST_CASE("zero-block bounds on a signed 2x2 matrix") {
  BlockSection sec = tiny_section({1, -1, -1, 1}, true);
  SectionBounds sb = symmetric_bounds_zero_block(sec, {1.0, -1.0});
  // Rayleigh with the exact eigenvector and the max row sum both give 2
  CHECK(sb.lam_lo.lo_d() == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(sb.lam_hi.hi_d() == doctest::Approx(2.0).epsilon(1e-12));
  CHECK_THROWS_AS(symmetric_bounds_zero_block(sec, {0.0, 0.0}),
                  domain_violation);
}

TEST_CASE("power iteration guess is positive") {
  BlockSection sec = tiny_section({2, 1, 1, 2}, false);
  std::vector<double> x = power_iteration_guess(sec, 20, 1e-12);
  REQUIRE(x.size() == 2);
  CHECK(x[0] > 0.0);
  CHECK(x[1] > 0.0);
  CHECK(x[0] == doctest::Approx(x[1]).epsilon(1e-6));  // symmetric top vector
}

TEST_CASE("two by two top eigenvalue bound") {
  Interval a = Interval::from_endpoints(3.0, 3.0);
  Interval e = Interval::from_endpoints(0.5, 0.5);
  Interval c = Interval::from_endpoints(1.0, 1.0);
  Interval top = two_by_two_top(a, e, c);
  // ((a+c) + sqrt((a-c)^2 + 4 e^2))/2 = (4 + sqrt(5))/2
  CHECK(top.hi_d() == doctest::Approx((4.0 + std::sqrt(5.0)) / 2).epsilon(1e-12));
  CHECK(top.hi_d() >= a.hi_d());
  // degenerate e = c = 0 reduces to a
  Interval zero;
  CHECK(two_by_two_top(a, zero, zero).hi_d() ==
        doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("tail bounds shrink when M grows") {
  Alpha a = Alpha::for_sides(10);
  WeightCoefficients coeffs = coefficient_v_recursive(322, a);
  TailBounds coarse = tail_hs_bounds(10, BlockIndex{10, 1}, 40, coeffs);
  TailBounds fine = tail_hs_bounds(10, BlockIndex{10, 1}, 160, coeffs);
  CHECK(fine.e_norm.hi_d() < coarse.e_norm.hi_d());
  CHECK(fine.c_norm.hi_d() < coarse.c_norm.hi_d());
  CHECK(coarse.e_norm.hi_d() > 0.0);
}

TEST_CASE("block enclosure at N = 20 is tight") {
  Alpha a = Alpha::for_sides(20);
  WeightCoefficients coeffs = coefficient_v_recursive(162, a);
  BlockEnclosure be = block_enclosure(20, 1, 80, coeffs);
  CHECK(be.lambda.lo_d() > 1.0);
  CHECK(be.lambda.width_d() < 1e-4);
  CHECK(be.tail.e_norm.hi_d() < 1e-3);
  // conjugate residue r = 19 encloses the same eigenvalue
  BlockEnclosure conj = block_enclosure(20, 19, 80, coeffs);
  CHECK(intersects(be.lambda, conj.lambda));
}

TEST_CASE("sigma enclosure brackets the known hexagon value") {
  SigmaEnclosure enc = sigma_enclosure(6, 60);
  CHECK(enc.n_sides == 6);
  CHECK(enc.sigma.lo_d() > 0.97);
  CHECK(enc.sigma.hi_d() < 0.98);
  CHECK(enc.per_block.size() == 6u);  // r = 0..5, conjugates mirrored
  CHECK((enc.argmax_block == 1 || enc.argmax_block == 5));
}

TEST_CASE("refinement tightens the enclosure") {
  set_precision_dps(60);
  SigmaEnclosure coarse = sigma_enclosure(10, 40);
  set_precision_dps(80);
  SigmaEnclosure fine = sigma_enclosure(10, 120);
  CHECK(fine.sigma.width_d() < coarse.sigma.width_d());
  CHECK(intersects(fine.sigma, coarse.sigma));
  set_precision_dps(60);
}
