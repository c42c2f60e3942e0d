#include "steklov/interval.hpp"

#include <cmath>
#include <cstdio>
#include <vector>

namespace steklov {

namespace {

int g_dps = 140;
mpfr_prec_t g_bits = 482;

mpfr_prec_t bits_for(int dps) {
  return static_cast<mpfr_prec_t>(std::ceil(dps * 3.3219280948873626)) + 16;
}

// Location of the positive minimum of Gamma and a certified lower bound for
// its value there (truncated well inside the true digits).
constexpr const char* kGammaMinXLo = "1.4616321449";
constexpr const char* kGammaMinXHi = "1.46163214497";
constexpr const char* kGammaMinValLo = "0.88560319441088870027";

}  // namespace

void set_precision_dps(int dps) {
  if (dps < 30) throw domain_violation("precision below 30 digits rejected");
  g_dps = dps;
  g_bits = bits_for(dps);
}

int precision_dps() { return g_dps; }
mpfr_prec_t precision_bits() { return g_bits; }

Interval::Interval() {
  mpfr_init2(lo_, g_bits);
  mpfr_init2(hi_, g_bits);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(long v) {
  mpfr_init2(lo_, g_bits);
  mpfr_init2(hi_, g_bits);
  mpfr_set_si(lo_, v, MPFR_RNDD);
  mpfr_set_si(hi_, v, MPFR_RNDU);
}

Interval::Interval(const Interval& o) {
  mpfr_init2(lo_, mpfr_get_prec(o.lo_));
  mpfr_init2(hi_, mpfr_get_prec(o.hi_));
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& o) noexcept {
  mpfr_init2(lo_, MPFR_PREC_MIN);
  mpfr_init2(hi_, MPFR_PREC_MIN);
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
}

Interval& Interval::operator=(const Interval& o) {
  if (this != &o) {
    mpfr_set_prec(lo_, mpfr_get_prec(o.lo_));
    mpfr_set_prec(hi_, mpfr_get_prec(o.hi_));
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
  }
  return *this;
}

Interval& Interval::operator=(Interval&& o) noexcept {
  if (this != &o) {
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
  }
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Interval Interval::from_ratio(long num, long den) {
  if (den == 0) throw domain_violation("zero denominator");
  return Interval(num) / Interval(den);
}

Interval Interval::from_string(const std::string& s) {
  Interval r;
  if (mpfr_set_str(r.lo_, s.c_str(), 10, MPFR_RNDD) != 0 &&
      mpfr_nan_p(r.lo_)) {
    throw domain_violation("unparsable decimal literal: " + s);
  }
  mpfr_set_str(r.hi_, s.c_str(), 10, MPFR_RNDU);
  return r;
}

Interval Interval::from_endpoints(double lo, double hi) {
  if (!(lo <= hi)) throw domain_violation("endpoints out of order");
  Interval r;
  mpfr_set_d(r.lo_, lo, MPFR_RNDD);
  mpfr_set_d(r.hi_, hi, MPFR_RNDU);
  return r;
}

Interval Interval::pi() {
  Interval r;
  mpfr_const_pi(r.lo_, MPFR_RNDD);
  mpfr_const_pi(r.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::euler_gamma() {
  Interval r;
  mpfr_const_euler(r.lo_, MPFR_RNDD);
  mpfr_const_euler(r.hi_, MPFR_RNDU);
  return r;
}

double Interval::lo_d() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Interval::hi_d() const { return mpfr_get_d(hi_, MPFR_RNDU); }

double Interval::mid_d() const {
  mpfr_t m;
  mpfr_init2(m, 64);
  mpfr_add(m, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(m, m, 1, MPFR_RNDN);
  double v = mpfr_get_d(m, MPFR_RNDN);
  mpfr_clear(m);
  return v;
}

double Interval::width_d() const {
  mpfr_t w;
  mpfr_init2(w, 64);
  mpfr_sub(w, hi_, lo_, MPFR_RNDU);
  double v = mpfr_get_d(w, MPFR_RNDU);
  mpfr_clear(w);
  return v;
}

bool Interval::is_finite() const {
  return mpfr_number_p(lo_) && mpfr_number_p(hi_);
}

bool Interval::contains_zero() const {
  return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
}

bool Interval::is_positive() const { return mpfr_sgn(lo_) > 0; }
bool Interval::is_nonnegative() const { return mpfr_sgn(lo_) >= 0; }

bool Interval::contains(const Interval& inner) const {
  return mpfr_cmp(lo_, inner.lo_) <= 0 && mpfr_cmp(hi_, inner.hi_) >= 0;
}

bool Interval::contains(long v) const {
  return mpfr_cmp_si(lo_, v) <= 0 && mpfr_cmp_si(hi_, v) >= 0;
}

namespace {
std::string fmt_endpoint(const mpfr_t& x, int digits, mpfr_rnd_t rnd,
                         bool fixed) {
  char buf[512];
  if (fixed) {
    mpfr_snprintf(buf, sizeof(buf), "%.*R*f", digits, rnd, x);
  } else {
    mpfr_snprintf(buf, sizeof(buf), "%.*R*e", digits, rnd, x);
  }
  return std::string(buf);
}
}  // namespace

std::string Interval::lo_str(int digits) const {
  return fmt_endpoint(lo_, digits, MPFR_RNDD, true);
}
std::string Interval::hi_str(int digits) const {
  return fmt_endpoint(hi_, digits, MPFR_RNDU, true);
}
std::string Interval::lo_str_full() const {
  return fmt_endpoint(lo_, g_dps + 5, MPFR_RNDD, false);
}
std::string Interval::hi_str_full() const {
  return fmt_endpoint(hi_, g_dps + 5, MPFR_RNDU, false);
}
std::string Interval::str(int digits) const {
  return "[" + lo_str(digits) + ", " + hi_str(digits) + "]";
}

void Interval::add_assign(const Interval& a) {
  mpfr_add(lo_, lo_, a.lo_, MPFR_RNDD);
  mpfr_add(hi_, hi_, a.hi_, MPFR_RNDU);
}

void Interval::sub_assign(const Interval& a) {
  mpfr_sub(lo_, lo_, a.hi_, MPFR_RNDD);
  mpfr_sub(hi_, hi_, a.lo_, MPFR_RNDU);
}

void Interval::addmul_pos(const Interval& a, const Interval& b) {
  mpfr_fma(lo_, a.lo_, b.lo_, lo_, MPFR_RNDD);
  mpfr_fma(hi_, a.hi_, b.hi_, hi_, MPFR_RNDU);
}

void Interval::addmul(const Interval& a, const Interval& b) {
  if (a.is_nonnegative() && b.is_nonnegative()) {
    addmul_pos(a, b);
  } else {
    add_assign(a * b);
  }
}

Interval operator+(const Interval& a, const Interval& b) {
  Interval r;
  mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval operator-(const Interval& a, const Interval& b) {
  Interval r;
  mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
  return r;
}

Interval operator-(const Interval& a) {
  Interval r;
  mpfr_neg(r.lo_, a.hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, a.lo_, MPFR_RNDU);
  return r;
}

Interval operator*(const Interval& a, const Interval& b) {
  Interval r;
  if (a.is_nonnegative() && b.is_nonnegative()) {
    mpfr_mul(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_mul(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
  }
  // General case: lo = min of the four products rounded down, hi = max
  // rounded up.
  mpfr_t p, q;
  mpfr_init2(p, g_bits);
  mpfr_init2(q, g_bits);
  mpfr_mul(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_mul(p, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, p, MPFR_RNDD);
  mpfr_mul(p, a.hi_, b.lo_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, p, MPFR_RNDD);
  mpfr_mul(p, a.hi_, b.hi_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, p, MPFR_RNDD);

  mpfr_mul(r.hi_, a.lo_, b.lo_, MPFR_RNDU);
  mpfr_mul(q, a.lo_, b.hi_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, q, MPFR_RNDU);
  mpfr_mul(q, a.hi_, b.lo_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, q, MPFR_RNDU);
  mpfr_mul(q, a.hi_, b.hi_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, q, MPFR_RNDU);
  mpfr_clear(p);
  mpfr_clear(q);
  return r;
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw domain_violation("division by interval containing 0");
  Interval r;
  if (b.is_positive() && a.is_nonnegative()) {
    mpfr_div(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_div(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
    return r;
  }
  mpfr_t p, q;
  mpfr_init2(p, g_bits);
  mpfr_init2(q, g_bits);
  mpfr_div(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_div(p, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, p, MPFR_RNDD);
  mpfr_div(p, a.hi_, b.lo_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, p, MPFR_RNDD);
  mpfr_div(p, a.hi_, b.hi_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, p, MPFR_RNDD);

  mpfr_div(r.hi_, a.lo_, b.lo_, MPFR_RNDU);
  mpfr_div(q, a.lo_, b.hi_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, q, MPFR_RNDU);
  mpfr_div(q, a.hi_, b.lo_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, q, MPFR_RNDU);
  mpfr_div(q, a.hi_, b.hi_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, q, MPFR_RNDU);
  mpfr_clear(p);
  mpfr_clear(q);
  return r;
}

Interval sqrt(const Interval& x) {
  if (!x.is_nonnegative()) throw domain_violation("sqrt of negative box");
  Interval r;
  mpfr_sqrt(r.lo_mut(), x.lo(), MPFR_RNDD);
  mpfr_sqrt(r.hi_mut(), x.hi(), MPFR_RNDU);
  return r;
}

Interval exp(const Interval& x) {
  Interval r;
  mpfr_exp(r.lo_mut(), x.lo(), MPFR_RNDD);
  mpfr_exp(r.hi_mut(), x.hi(), MPFR_RNDU);
  return r;
}

Interval log(const Interval& x) {
  if (!x.is_positive()) throw domain_violation("log of nonpositive box");
  Interval r;
  mpfr_log(r.lo_mut(), x.lo(), MPFR_RNDD);
  mpfr_log(r.hi_mut(), x.hi(), MPFR_RNDU);
  return r;
}

Interval pow(const Interval& x, const Interval& y) {
  if (!x.is_positive()) throw domain_violation("pow needs positive base box");
  return exp(y * log(x));
}

Interval pow_int(const Interval& x, long k) {
  if (k < 0) return recip(pow_int(x, -k));
  if (k == 0) return Interval(1);
  Interval r;
  const bool even = (k % 2 == 0);
  if (x.is_nonnegative() || !even) {
    // monotone on the whole line for odd k, on [0,inf) for even k
    mpfr_pow_si(r.lo_mut(), x.lo(), k, MPFR_RNDD);
    mpfr_pow_si(r.hi_mut(), x.hi(), k, MPFR_RNDU);
    return r;
  }
  if (mpfr_sgn(x.hi()) <= 0) {
    mpfr_pow_si(r.lo_mut(), x.hi(), k, MPFR_RNDD);
    mpfr_pow_si(r.hi_mut(), x.lo(), k, MPFR_RNDU);
    return r;
  }
  // even power of a box straddling zero
  mpfr_set_zero(r.lo_mut(), 1);
  mpfr_t t;
  mpfr_init2(t, precision_bits());
  mpfr_pow_si(r.hi_mut(), x.lo(), k, MPFR_RNDU);
  mpfr_pow_si(t, x.hi(), k, MPFR_RNDU);
  mpfr_max(r.hi_mut(), r.hi_mut(), t, MPFR_RNDU);
  mpfr_clear(t);
  return r;
}

Interval abs(const Interval& x) {
  if (x.is_nonnegative()) return x;
  Interval r;
  if (mpfr_sgn(x.hi()) <= 0) {
    mpfr_neg(r.lo_mut(), x.hi(), MPFR_RNDD);
    mpfr_neg(r.hi_mut(), x.lo(), MPFR_RNDU);
    return r;
  }
  mpfr_set_zero(r.lo_mut(), 1);
  mpfr_t t;
  mpfr_init2(t, precision_bits());
  mpfr_neg(t, x.lo(), MPFR_RNDU);
  mpfr_max(r.hi_mut(), t, x.hi(), MPFR_RNDU);
  mpfr_clear(t);
  return r;
}

Interval recip(const Interval& x) { return Interval(1) / x; }

Interval gamma_enclosure(const Interval& x) {
  if (!x.is_positive()) throw domain_violation("gamma needs positive box");
  static const char* xlo_s = kGammaMinXLo;
  static const char* xhi_s = kGammaMinXHi;
  mpfr_t xs_lo, xs_hi;
  mpfr_init2(xs_lo, precision_bits());
  mpfr_init2(xs_hi, precision_bits());
  mpfr_set_str(xs_lo, xlo_s, 10, MPFR_RNDD);
  mpfr_set_str(xs_hi, xhi_s, 10, MPFR_RNDU);
  Interval r;
  if (mpfr_cmp(x.hi(), xs_lo) <= 0) {
    // left of the minimum: decreasing
    mpfr_gamma(r.lo_mut(), x.hi(), MPFR_RNDD);
    mpfr_gamma(r.hi_mut(), x.lo(), MPFR_RNDU);
  } else if (mpfr_cmp(x.lo(), xs_hi) >= 0) {
    // right of the minimum: increasing
    mpfr_gamma(r.lo_mut(), x.lo(), MPFR_RNDD);
    mpfr_gamma(r.hi_mut(), x.hi(), MPFR_RNDU);
  } else {
    // straddles the minimum: certified constant below, endpoint max above
    mpfr_set_str(r.lo_mut(), kGammaMinValLo, 10, MPFR_RNDD);
    mpfr_t t;
    mpfr_init2(t, precision_bits());
    mpfr_gamma(r.hi_mut(), x.lo(), MPFR_RNDU);
    mpfr_gamma(t, x.hi(), MPFR_RNDU);
    mpfr_max(r.hi_mut(), r.hi_mut(), t, MPFR_RNDU);
    mpfr_clear(t);
  }
  mpfr_clear(xs_lo);
  mpfr_clear(xs_hi);
  return r;
}

Interval zeta_enclosure(const Interval& s) {
  mpfr_t one;
  mpfr_init2(one, 8);
  mpfr_set_si(one, 1, MPFR_RNDN);
  bool bad = mpfr_cmp(s.lo(), one) <= 0;
  mpfr_clear(one);
  if (bad) throw domain_violation("zeta needs s > 1");
  // zeta is strictly decreasing on (1, inf)
  Interval r;
  mpfr_zeta(r.lo_mut(), s.hi(), MPFR_RNDD);
  mpfr_zeta(r.hi_mut(), s.lo(), MPFR_RNDU);
  return r;
}

Interval factorial(unsigned long q) {
  Interval r;
  mpfr_fac_ui(r.lo_mut(), q, MPFR_RNDD);
  mpfr_fac_ui(r.hi_mut(), q, MPFR_RNDU);
  return r;
}

Interval hull(const Interval& a, const Interval& b) {
  Interval r;
  mpfr_min(r.lo_mut(), a.lo(), b.lo(), MPFR_RNDD);
  mpfr_max(r.hi_mut(), a.hi(), b.hi(), MPFR_RNDU);
  return r;
}

bool intersects(const Interval& a, const Interval& b) {
  return mpfr_cmp(a.lo(), b.hi()) <= 0 && mpfr_cmp(b.lo(), a.hi()) <= 0;
}

Interval intersect(const Interval& a, const Interval& b) {
  if (!intersects(a, b)) throw domain_violation("empty intersection");
  Interval r;
  mpfr_max(r.lo_mut(), a.lo(), b.lo(), MPFR_RNDD);
  mpfr_min(r.hi_mut(), a.hi(), b.hi(), MPFR_RNDU);
  return r;
}

Interval imin(const Interval& a, const Interval& b) {
  Interval r;
  mpfr_min(r.lo_mut(), a.lo(), b.lo(), MPFR_RNDD);
  mpfr_min(r.hi_mut(), a.hi(), b.hi(), MPFR_RNDU);
  return r;
}

Interval imax(const Interval& a, const Interval& b) {
  Interval r;
  mpfr_max(r.lo_mut(), a.lo(), b.lo(), MPFR_RNDD);
  mpfr_max(r.hi_mut(), a.hi(), b.hi(), MPFR_RNDU);
  return r;
}

bool certainly_less(const Interval& a, const Interval& b) {
  return mpfr_cmp(a.hi(), b.lo()) < 0;
}

}  // namespace steklov
