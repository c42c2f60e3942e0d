#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "steklov/weights.hpp"

using namespace steklov;

namespace {
struct PrecisionGuard {
  PrecisionGuard() { set_precision_dps(60); }
};
PrecisionGuard guard;
}  // namespace

TEST_CASE("normalization constant") {
  // C(1/20) computed independently at 60 digits.
  Interval c = normalization_constant(Alpha::for_sides(20));
  Interval ref = Interval::from_string(
      "0.995571186986228777805214590782044433316261987312877281308307");
  // the reference digits are truncated; bracket by one last-place unit
  Interval ulp = pow_int(Interval::from_ratio(1, 10), 60);
  CHECK(intersects(c, hull(ref, ref + ulp)));
  // C(a) -> 1 as a -> 0
  Interval c100 = normalization_constant(Alpha::for_sides(100));
  CHECK(std::abs(c100.mid_d() - 1.0) < std::abs(c.mid_d() - 1.0) + 1e-3);
}

TEST_CASE("v_0 = 1 and v_1 = a/(1-a)") {
  for (int n : {3, 7, 20}) {
    Alpha a = Alpha::for_sides(n);
    WeightCoefficients coeffs = coefficient_v_recursive(4, a);
    CHECK(coeffs.v(0).contains(Interval(1)));
    CHECK(intersects(coeffs.v(1), a.alpha / (1 - a.alpha)));
    CHECK(coeffs.v(-1).lo_d() == coeffs.v(1).lo_d());
  }
}

TEST_CASE("recurrence agrees with the direct Gamma ratio") {
  std::mt19937 rng(42);
  std::uniform_int_distribution<int> pick_n(3, 40);
  std::uniform_int_distribution<long> pick_m(0, 300);
  for (int trial = 0; trial < 200; ++trial) {
    int n = pick_n(rng);
    long m = pick_m(rng);
    Alpha a = Alpha::for_sides(n);
    WeightCoefficients coeffs = coefficient_v_recursive(m, a);
    CHECK(intersects(coeffs.v(m), coefficient_v(m, a)));
  }
}

TEST_CASE("v_m positive and strictly decreasing in m") {
  for (int n : {3, 5, 12}) {
    WeightCoefficients coeffs = coefficient_v_recursive(200, Alpha::for_sides(n));
    for (long m = 1; m <= 200; ++m) {
      CHECK(coeffs.v(m).is_positive());
      CHECK(certainly_less(coeffs.v(m), coeffs.v(m - 1)));
    }
  }
}

TEST_CASE("v_m decay rate m^{2a-1}") {
  // v_{2m}/v_m -> 2^{2a-1}; check the certified ratio brackets it loosely.
  Alpha a = Alpha::for_sides(10);
  WeightCoefficients coeffs = coefficient_v_recursive(4096, a);
  double ratio = coeffs.v(4096).mid_d() / coeffs.v(2048).mid_d();
  double expect = std::pow(2.0, 2.0 / 10 - 1.0);
  CHECK(std::abs(ratio - expect) < 1e-3);
}

TEST_CASE("Parseval identity for N >= 5") {
  for (int n : {5, 9, 17}) {
    Alpha al = Alpha::for_sides(n);
    Interval a = al.alpha;
    Interval closed = pow_int(gamma_enclosure(1 - a), 4) *
                      gamma_enclosure(1 - 4 * a) /
                      pow_int(gamma_enclosure(1 - 2 * a), 4);
    const long K = 4000;
    WeightCoefficients coeffs = coefficient_v_recursive(K, al);
    Interval sum = pow_int(coeffs.v(0), 2);
    for (long m = 1; m <= K; ++m) sum.add_assign(2 * pow_int(coeffs.v(m), 2));
    // tail: v_m <= v_K (m/K)^{2a-1} for m >= K, so
    // sum_{m>K} v_m^2 <= v_K^2 K^{2-4a} * K^{4a-1}/(1-4a) = v_K^2 K/(1-4a)
    Interval tail = 2 * pow_int(coeffs.v(K), 2) * Interval(K) * recip(1 - 4 * a);
    Interval brute;
    mpfr_set(brute.lo_mut(), sum.lo(), MPFR_RNDD);
    mpfr_set(brute.hi_mut(), (sum + tail).hi(), MPFR_RNDU);
    CHECK(intersects(closed, brute));
    CHECK(brute.lo_d() > 1.0);
  }
}

TEST_CASE("Taylor coefficients a_{m,1} = 1/m and cubic value") {
  CHECK(taylor_coefficient(1, 1).contains(Interval(1)));
  CHECK(taylor_coefficient(4, 1).contains(Interval::from_ratio(1, 4)));
  // cubic polynomial approximates v_m within the certified bound
  Alpha a = Alpha::for_sides(25);
  WeightCoefficients coeffs = coefficient_v_recursive(64, a);
  for (long m : {1L, 3L, 17L, 64L}) {
    Interval err = abs(coeffs.v(m) - cubic_taylor_value(m, a));
    CHECK(err.hi_d() <= cubic_truncation_error(m, a).hi_d());
  }
}

TEST_CASE("constants ledger matches the recorded six decimals") {
  VmConstants vm = vm_constants();
  auto close6 = [](const Interval& x, double printed) {
    return std::abs(x.mid_d() - printed) < 5e-7 + x.width_d();
  };
  CHECK(close6(vm.L5, 0.62674153));
  CHECK(close6(vm.C_P, 2.18229934));
  CHECK(close6(vm.V_inf, 1.11529078));
  CHECK(close6(vm.L6, 12.59175302));
  CHECK(close6(vm.V1, 4.66448428));
  CHECK(close6(vm.V4, 7.95118350));
  CHECK(vm.V2.hi_d() <= 2.164);
  CHECK(vm.D3.hi_d() <= 3.683213);
}

TEST_CASE("harmonic numbers") {
  CHECK(harmonic(1).contains(Interval(1)));
  CHECK(harmonic(4).contains(Interval::from_ratio(25, 12)));
  CHECK(harmonic3(2).contains(Interval::from_ratio(9, 8)));
}

TEST_CASE("alpha validation") {
  CHECK_THROWS_AS(Alpha::for_sides(2), domain_violation);
  CHECK(Alpha::for_sides(3).alpha.contains(Interval::from_ratio(1, 3)));
}
