#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "steklov/interval.hpp"

using namespace steklov;

namespace {
struct PrecisionGuard {
  PrecisionGuard() { set_precision_dps(60); }
};
PrecisionGuard guard;

// The reference digits are truncated decimals: the exact value lies in
// [d, d + ulp) where ulp is one unit in the last printed place.
bool contains_decimal(const Interval& x, const std::string& s) {
  Interval d = Interval::from_string(s);
  size_t dot = s.find('.');
  int frac = dot == std::string::npos ? 0 : static_cast<int>(s.size() - dot - 1);
  Interval ulp = pow_int(Interval::from_ratio(1, 10), frac);
  return intersects(x, hull(d, d + ulp));
}
}  // namespace

TEST_CASE("constructors and endpoint access") {
  Interval x(3);
  CHECK(x.lo_d() == 3.0);
  CHECK(x.hi_d() == 3.0);
  Interval r = Interval::from_ratio(1, 3);
  CHECK(r.lo_d() < r.hi_d());
  CHECK(contains_decimal(r, "0.3333333333333333333333333333333333333333"));
  Interval e = Interval::from_endpoints(-1.5, 2.25);
  CHECK(e.lo_d() == -1.5);
  CHECK(e.hi_d() == 2.25);
  CHECK(e.contains_zero());
  CHECK_THROWS_AS(Interval::from_endpoints(1.0, 0.0), domain_violation);
}

TEST_CASE("arithmetic encloses the exact result") {
  Interval third = Interval::from_ratio(1, 3);
  Interval one = 3 * third;
  CHECK(one.contains(Interval(1)));
  CHECK(one.width_d() > 0.0);
  Interval zero = third + third - 2 * third;
  CHECK(zero.contains_zero());
  Interval q = third / third;
  CHECK(q.contains(Interval(1)));
}

TEST_CASE("sqrt exp log pow round-trips") {
  Interval two(2);
  CHECK(pow_int(sqrt(two), 2).contains(two));
  CHECK(log(exp(two)).contains(two));
  CHECK(exp(log(two)).contains(two));
  CHECK(pow(two, Interval::from_ratio(1, 2)).contains(sqrt(two)));
  CHECK_THROWS_AS(sqrt(Interval(-1)), domain_violation);
  CHECK_THROWS_AS(log(Interval(0)), domain_violation);
}

TEST_CASE("pow_int with even exponent on straddling interval") {
  Interval x = Interval::from_endpoints(-2.0, 1.0);
  Interval sq = pow_int(x, 2);
  CHECK(sq.lo_d() == 0.0);
  CHECK(sq.hi_d() >= 4.0);
  Interval cube = pow_int(x, 3);
  CHECK(cube.lo_d() <= -8.0);
  CHECK(cube.hi_d() >= 1.0);
}

TEST_CASE("known constants") {
  // Reference digits computed independently at 60 digits.
  CHECK(contains_decimal(Interval::pi(),
      "3.14159265358979323846264338327950288419716939937510582097494"));
  CHECK(contains_decimal(Interval::euler_gamma(),
      "0.577215664901532860606512090082402431042159335939923598805767"));
  CHECK(contains_decimal(gamma_enclosure(Interval::from_ratio(1, 2)),
      "1.772453850905516027298167483341145182797549456122387128213807"));
  CHECK(contains_decimal(gamma_enclosure(Interval::from_ratio(19, 20)),
      "1.031453317129032196165754795930273754862082894016687094276500"));
  CHECK(contains_decimal(zeta_enclosure(Interval(3)),
      "1.20205690315959428539973816151144999076498629234049888179227"));
  CHECK(contains_decimal(zeta_enclosure(Interval::from_ratio(19, 10)),
      "1.749746435125060813979490999942883868547300997252072326889370"));
  CHECK(factorial(6).contains(Interval(720)));
}

TEST_CASE("zeta is decreasing and gamma has the known minimum") {
  Interval z2 = zeta_enclosure(Interval(2));
  Interval z3 = zeta_enclosure(Interval(3));
  CHECK(certainly_less(z3, z2));
  // Gamma on (1, 2) stays above the certified minimum value.
  Interval g = gamma_enclosure(Interval::from_ratio(3, 2));
  CHECK(g.lo_d() > 0.8856031944108887);
}

TEST_CASE("interval inclusion monotonicity under arithmetic") {
  std::mt19937 rng(20260826);
  std::uniform_real_distribution<double> mid(-5.0, 5.0);
  std::uniform_real_distribution<double> rad(0.0, 0.5);
  for (int trial = 0; trial < 100; ++trial) {
    double am = mid(rng), ar = rad(rng), ar2 = ar + rad(rng);
    double bm = mid(rng), br = rad(rng), br2 = br + rad(rng);
    Interval a = Interval::from_endpoints(am - ar, am + ar);
    Interval aw = Interval::from_endpoints(am - ar2, am + ar2);
    Interval b = Interval::from_endpoints(bm - br, bm + br);
    Interval bw = Interval::from_endpoints(bm - br2, bm + br2);
    CHECK(aw.contains(a));
    CHECK((aw + bw).contains(a + b));
    CHECK((aw - bw).contains(a - b));
    CHECK((aw * bw).contains(a * b));
    CHECK(pow_int(aw, 2).contains(pow_int(a, 2)));
    if (!bw.contains_zero()) CHECK((aw / bw).contains(a / b));
  }
}

TEST_CASE("gamma functional equation Gamma(x+1) = x Gamma(x)") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> pts(0.05, 4.0);
  for (int trial = 0; trial < 100; ++trial) {
    double p = pts(rng);
    Interval x = Interval::from_endpoints(p, p);
    Interval lhs = gamma_enclosure(x + 1);
    Interval rhs = x * gamma_enclosure(x);
    CHECK(intersects(lhs, rhs));
  }
}

TEST_CASE("hull intersect imin imax") {
  Interval a = Interval::from_endpoints(0.0, 2.0);
  Interval b = Interval::from_endpoints(1.0, 3.0);
  Interval h = hull(a, b);
  CHECK(h.lo_d() == 0.0);
  CHECK(h.hi_d() == 3.0);
  CHECK(intersects(a, b));
  Interval m = intersect(a, b);
  CHECK(m.lo_d() == 1.0);
  CHECK(m.hi_d() == 2.0);
  CHECK(imin(a, b).hi_d() == 2.0);
  CHECK(imax(a, b).lo_d() == 1.0);
  Interval c = Interval::from_endpoints(5.0, 6.0);
  CHECK(!intersects(a, c));
  CHECK(certainly_less(a, c));
}

TEST_CASE("string rendering is outward") {
  Interval third = Interval::from_ratio(1, 3);
  Interval lo = Interval::from_string(third.lo_str(18));
  Interval hi = Interval::from_string(third.hi_str(18));
  CHECK(lo.hi_d() <= third.lo_d() + 1e-16);
  CHECK(hi.lo_d() >= third.hi_d() - 1e-16);
  Interval full = Interval::from_string(third.lo_str_full());
  CHECK(full.lo_d() <= third.lo_d());
}

TEST_CASE("precision control changes enclosure width") {
  set_precision_dps(30);
  Interval coarse = Interval::pi();
  set_precision_dps(60);
  Interval fine = Interval::pi();
  CHECK(fine.width_d() < coarse.width_d());
  CHECK(intersects(coarse, fine));
  CHECK_THROWS_AS(set_precision_dps(5), domain_violation);
  set_precision_dps(60);
}
