#pragma once

#include <mpfr.h>

#include <stdexcept>
#include <string>

// Outward-rounded interval arithmetic on MPFR endpoints.  Every operation
// returns an interval that provably contains the exact image of its operand
// box; endpoints are rounded away from each other at the active precision.

namespace steklov {

struct domain_violation : std::domain_error {
  using std::domain_error::domain_error;
};

// Working precision, decimal digits.  Set once at the start of a computation;
// values below 30 are rejected (certification widths blow up there).
void set_precision_dps(int dps);
int precision_dps();
mpfr_prec_t precision_bits();

class Interval {
 public:
  Interval();
  Interval(long v);  // NOLINT: implicit by design, exact embedding of integers
  Interval(const Interval& o);
  Interval(Interval&& o) noexcept;
  Interval& operator=(const Interval& o);
  Interval& operator=(Interval&& o) noexcept;
  ~Interval();

  static Interval from_ratio(long num, long den);
  // Outward enclosure of a decimal literal (round-trip safe for constants).
  static Interval from_string(const std::string& s);
  static Interval from_endpoints(double lo, double hi);
  static Interval pi();
  static Interval euler_gamma();

  const mpfr_t& lo() const { return lo_; }
  const mpfr_t& hi() const { return hi_; }
  mpfr_t& lo_mut() { return lo_; }
  mpfr_t& hi_mut() { return hi_; }

  double lo_d() const;     // rounded down
  double hi_d() const;     // rounded up
  double mid_d() const;    // approximate midpoint
  double width_d() const;  // hi - lo, rounded up

  bool is_finite() const;
  bool contains_zero() const;
  bool is_positive() const;     // lo > 0
  bool is_nonnegative() const;  // lo >= 0
  bool contains(const Interval& inner) const;
  bool contains(long v) const;

  // Decimal endpoint strings; `digits` fractional digits, rounded outward.
  std::string lo_str(int digits) const;
  std::string hi_str(int digits) const;
  // Full-precision decimal strings (scientific), outward.
  std::string lo_str_full() const;
  std::string hi_str_full() const;
  std::string str(int digits = 18) const;  // "[lo, hi]"

  // In-place accumulation, used by the hot loops (fma on both endpoints).
  void add_assign(const Interval& a);
  void sub_assign(const Interval& a);
  void addmul(const Interval& a, const Interval& b);      // += a*b, any signs
  void addmul_pos(const Interval& a, const Interval& b);  // += a*b, a,b >= 0

 private:
  mpfr_t lo_;
  mpfr_t hi_;
  friend Interval operator+(const Interval&, const Interval&);
  friend Interval operator-(const Interval&, const Interval&);
  friend Interval operator*(const Interval&, const Interval&);
  friend Interval operator/(const Interval&, const Interval&);
  friend Interval operator-(const Interval&);
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);
Interval operator/(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);

inline Interval operator+(const Interval& a, long b) { return a + Interval(b); }
inline Interval operator-(const Interval& a, long b) { return a - Interval(b); }
inline Interval operator-(long a, const Interval& b) { return Interval(a) - b; }
inline Interval operator*(const Interval& a, long b) { return a * Interval(b); }
inline Interval operator*(long a, const Interval& b) { return Interval(a) * b; }
inline Interval operator/(const Interval& a, long b) { return a / Interval(b); }
inline Interval operator/(long a, const Interval& b) { return Interval(a) / b; }

Interval sqrt(const Interval& x);  // x.lo >= 0
Interval exp(const Interval& x);
Interval log(const Interval& x);  // x.lo > 0
Interval pow(const Interval& x, const Interval& y);  // x.lo > 0
Interval pow_int(const Interval& x, long k);
Interval abs(const Interval& x);
Interval recip(const Interval& x);
Interval gamma_enclosure(const Interval& x);  // x.lo > 0
Interval zeta_enclosure(const Interval& s);   // s.lo > 1
Interval factorial(unsigned long q);          // exact q!

Interval hull(const Interval& a, const Interval& b);
bool intersects(const Interval& a, const Interval& b);
Interval intersect(const Interval& a, const Interval& b);  // throws if empty
Interval imin(const Interval& a, const Interval& b);
Interval imax(const Interval& a, const Interval& b);

// a.hi < b.lo: every point of a is below every point of b.
bool certainly_less(const Interval& a, const Interval& b);

}  // namespace steklov
