#pragma once

#include <mpfr.h>
#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>

namespace latsum {

struct PrecisionContext {
  int digits = 50;
  int guard_digits = 10;

  void validate() const;
  // working precision in bits, guard digits included
  long bits() const;
  int total_digits() const { return digits + guard_digits; }
};

// Sets the working precision of the current thread for its lifetime.
class PrecisionGuard {
 public:
  explicit PrecisionGuard(const PrecisionContext& ctx);
  explicit PrecisionGuard(long bits);
  ~PrecisionGuard();
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  long saved_;
};

long working_bits();

class Real {
 public:
  Real();
  Real(int v);   // NOLINT
  Real(long v);  // NOLINT
  explicit Real(double v);
  explicit Real(const mpq_class& v);
  explicit Real(const mpz_class& v);
  explicit Real(const std::string& decimal);
  Real(const Real& o);
  Real(Real&& o) noexcept;
  Real& operator=(const Real& o);
  Real& operator=(Real&& o) noexcept;
  ~Real();

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);
  Real operator-() const;

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  long exponent() const;  // floor(log2|x|)+1, 0 for zero
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
  // scientific notation with `sig` significant digits, deterministic
  std::string to_string(int sig) const;
  // fixed notation with `frac` digits after the point
  std::string to_fixed(int frac) const;

  static Real pi();
  static Real pow10(long e);
  static Real ldexp(const Real& x, long e);

 private:
  mpfr_t v_;
};

Real operator+(Real a, const Real& b);
Real operator-(Real a, const Real& b);
Real operator*(Real a, const Real& b);
Real operator/(Real a, const Real& b);
bool operator==(const Real& a, const Real& b);
bool operator!=(const Real& a, const Real& b);
bool operator<(const Real& a, const Real& b);
bool operator<=(const Real& a, const Real& b);
bool operator>(const Real& a, const Real& b);
bool operator>=(const Real& a, const Real& b);

Real abs(const Real& x);
Real sqrt(const Real& x);
Real cbrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real sinh(const Real& x);
Real cosh(const Real& x);
Real atan2(const Real& y, const Real& x);
Real pow(const Real& x, const Real& y);
Real pow(const Real& x, long n);
Real gamma_raw(const Real& x);
Real zeta_ui(unsigned long n);
Real floor(const Real& x);
Real ceil(const Real& x);
Real max(const Real& a, const Real& b);
Real min(const Real& a, const Real& b);

std::ostream& operator<<(std::ostream& os, const Real& x);

struct Complex {
  Real re;
  Real im;

  Complex() = default;
  Complex(Real r) : re(std::move(r)), im(0) {}  // NOLINT
  Complex(int r) : re(r), im(0) {}               // NOLINT
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

  static Complex i() { return Complex(Real(0), Real(1)); }

  Complex& operator+=(const Complex& o);
  Complex& operator-=(const Complex& o);
  Complex& operator*=(const Complex& o);
  Complex& operator/=(const Complex& o);
  Complex& operator*=(const Real& o);
  Complex& operator/=(const Real& o);
  Complex operator-() const { return Complex(-re, -im); }

  Complex conj() const { return Complex(re, -im); }
  Real norm() const { return re * re + im * im; }
  Real abs() const;
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
};

Complex operator+(Complex a, const Complex& b);
Complex operator-(Complex a, const Complex& b);
Complex operator*(Complex a, const Complex& b);
Complex operator/(Complex a, const Complex& b);
Complex operator*(Complex a, const Real& b);
Complex operator*(const Real& b, Complex a);
Complex operator/(Complex a, const Real& b);

Complex exp(const Complex& z);
Complex pow(const Complex& z, long n);
Complex sqr(const Complex& z);
Real abs(const Complex& z);

std::ostream& operator<<(std::ostream& os, const Complex& z);

// |a-b| <= tol*max(1,|b|)
bool close_rel(const Real& a, const Real& b, const Real& tol);
bool close_rel(const Complex& a, const Complex& b, const Real& tol);

}  // namespace latsum
