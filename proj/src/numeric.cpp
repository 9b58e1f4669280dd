#include "latsum/numeric.hpp"

#include <cmath>
#include <ostream>
#include <vector>

#include "latsum/errors.hpp"

namespace latsum {

namespace {

long digits_to_bits(int digits) {
  return static_cast<long>(std::ceil(digits * 3.3219280948873623)) + 8;
}

thread_local long tl_bits = digits_to_bits(60);

}  // namespace

void PrecisionContext::validate() const {
  if (digits < 15) throw PreconditionError("digits must be >= 15");
  if (guard_digits < 5) throw PreconditionError("guard_digits must be >= 5");
  if (digits > 100000) throw PreconditionError("digits too large");
}

long PrecisionContext::bits() const { return digits_to_bits(digits + guard_digits); }

PrecisionGuard::PrecisionGuard(const PrecisionContext& ctx) : saved_(tl_bits) {
  ctx.validate();
  tl_bits = ctx.bits();
}

PrecisionGuard::PrecisionGuard(long bits) : saved_(tl_bits) {
  if (bits < MPFR_PREC_MIN || bits > 10000000) throw PreconditionError("bad precision");
  tl_bits = bits;
}

PrecisionGuard::~PrecisionGuard() { tl_bits = saved_; }

long working_bits() { return tl_bits; }

Real::Real() { mpfr_init2(v_, tl_bits); mpfr_set_zero(v_, 1); }
Real::Real(int v) { mpfr_init2(v_, tl_bits); mpfr_set_si(v_, v, MPFR_RNDN); }
Real::Real(long v) { mpfr_init2(v_, tl_bits); mpfr_set_si(v_, v, MPFR_RNDN); }
Real::Real(double v) { mpfr_init2(v_, tl_bits); mpfr_set_d(v_, v, MPFR_RNDN); }
Real::Real(const mpq_class& v) { mpfr_init2(v_, tl_bits); mpfr_set_q(v_, v.get_mpq_t(), MPFR_RNDN); }
Real::Real(const mpz_class& v) { mpfr_init2(v_, tl_bits); mpfr_set_z(v_, v.get_mpz_t(), MPFR_RNDN); }

Real::Real(const std::string& decimal) {
  mpfr_init2(v_, tl_bits);
  if (mpfr_set_str(v_, decimal.c_str(), 10, MPFR_RNDN) != 0) {
    mpfr_clear(v_);
    throw PreconditionError("not a number: " + decimal);
  }
}

Real::Real(const Real& o) {
  mpfr_init2(v_, std::max<long>(tl_bits, mpfr_get_prec(o.v_)));
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, o.v_);
}

Real& Real::operator=(const Real& o) {
  if (this != &o) {
    if (mpfr_get_prec(v_) < mpfr_get_prec(o.v_)) mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real& Real::operator+=(const Real& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
Real& Real::operator-=(const Real& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
Real& Real::operator*=(const Real& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
Real& Real::operator/=(const Real& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }

Real Real::operator-() const {
  Real r(*this);
  mpfr_neg(r.v_, r.v_, MPFR_RNDN);
  return r;
}

long Real::exponent() const {
  if (!mpfr_regular_p(v_)) return 0;
  return mpfr_get_exp(v_);
}

std::string Real::to_string(int sig) const {
  if (sig < 1) sig = 1;
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return mpfr_sgn(v_) > 0 ? "inf" : "-inf";
  if (mpfr_zero_p(v_)) return "0";
  mpfr_exp_t e = 0;
  char* s = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(sig), v_, MPFR_RNDN);
  std::string digits(s);
  mpfr_free_str(s);
  std::string out;
  if (digits[0] == '-') {
    out = "-";
    digits.erase(0, 1);
  }
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
  long exp10 = static_cast<long>(e) - 1;
  if (exp10 >= -5 && exp10 < sig) {
    if (exp10 >= 0) {
      if (static_cast<long>(digits.size()) <= exp10 + 1) {
        out += digits + std::string(exp10 + 1 - digits.size(), '0');
      } else {
        out += digits.substr(0, exp10 + 1) + "." + digits.substr(exp10 + 1);
      }
    } else {
      out += "0." + std::string(-exp10 - 1, '0') + digits;
    }
    return out;
  }
  out += digits.substr(0, 1);
  if (digits.size() > 1) out += "." + digits.substr(1);
  out += "e" + std::to_string(exp10);
  return out;
}

std::string Real::to_fixed(int frac) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rf", frac, v_);
  std::string out(buf);
  mpfr_free_str(buf);
  if (out.find_first_not_of("-0.") == std::string::npos && out[0] == '-') out.erase(0, 1);
  return out;
}

Real Real::pi() {
  Real r;
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

Real Real::pow10(long e) {
  Real r(10);
  mpfr_pow_si(r.v_, r.v_, e, MPFR_RNDN);
  return r;
}

Real Real::ldexp(const Real& x, long e) {
  Real r(x);
  mpfr_mul_2si(r.v_, r.v_, e, MPFR_RNDN);
  return r;
}

Real operator+(Real a, const Real& b) { return a += b; }
Real operator-(Real a, const Real& b) { return a -= b; }
Real operator*(Real a, const Real& b) { return a *= b; }
Real operator/(Real a, const Real& b) { return a /= b; }
bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.raw(), b.raw()) != 0; }
bool operator!=(const Real& a, const Real& b) { return !(a == b); }
bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.raw(), b.raw()) != 0; }
bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.raw(), b.raw()) != 0; }
bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.raw(), b.raw()) != 0; }
bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.raw(), b.raw()) != 0; }

#define LATSUM_UNARY(name, fn)        \
  Real name(const Real& x) {          \
    Real r;                           \
    fn(r.raw(), x.raw(), MPFR_RNDN);  \
    return r;                         \
  }

LATSUM_UNARY(abs, mpfr_abs)
LATSUM_UNARY(sqrt, mpfr_sqrt)
LATSUM_UNARY(cbrt, mpfr_cbrt)
LATSUM_UNARY(exp, mpfr_exp)
LATSUM_UNARY(log, mpfr_log)
LATSUM_UNARY(sin, mpfr_sin)
LATSUM_UNARY(cos, mpfr_cos)
LATSUM_UNARY(sinh, mpfr_sinh)
LATSUM_UNARY(cosh, mpfr_cosh)
LATSUM_UNARY(gamma_raw, mpfr_gamma)

#undef LATSUM_UNARY

Real floor(const Real& x) {
  Real r;
  mpfr_floor(r.raw(), x.raw());
  return r;
}

Real ceil(const Real& x) {
  Real r;
  mpfr_ceil(r.raw(), x.raw());
  return r;
}

Real atan2(const Real& y, const Real& x) {
  Real r;
  mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
  return r;
}

Real pow(const Real& x, const Real& y) {
  Real r;
  mpfr_pow(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
  return r;
}

Real pow(const Real& x, long n) {
  Real r;
  mpfr_pow_si(r.raw(), x.raw(), n, MPFR_RNDN);
  return r;
}

Real zeta_ui(unsigned long n) {
  Real r;
  mpfr_zeta_ui(r.raw(), n, MPFR_RNDN);
  return r;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }
Real min(const Real& a, const Real& b) { return b < a ? b : a; }

std::ostream& operator<<(std::ostream& os, const Real& x) {
  auto p = os.precision();
  return os << x.to_string(p > 0 ? static_cast<int>(p) : 6);
}

Complex& Complex::operator+=(const Complex& o) { re += o.re; im += o.im; return *this; }
Complex& Complex::operator-=(const Complex& o) { re -= o.re; im -= o.im; return *this; }

Complex& Complex::operator*=(const Complex& o) {
  Real r = re * o.re - im * o.im;
  Real i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

Complex& Complex::operator/=(const Complex& o) {
  if (o.is_zero()) throw DomainError("complex division by zero");
  Real d = o.norm();
  Real r = (re * o.re + im * o.im) / d;
  Real i = (im * o.re - re * o.im) / d;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

Complex& Complex::operator*=(const Real& o) { re *= o; im *= o; return *this; }
Complex& Complex::operator/=(const Real& o) { re /= o; im /= o; return *this; }

Real Complex::abs() const {
  Real r;
  mpfr_hypot(r.raw(), re.raw(), im.raw(), MPFR_RNDN);
  return r;
}

Complex operator+(Complex a, const Complex& b) { return a += b; }
Complex operator-(Complex a, const Complex& b) { return a -= b; }
Complex operator*(Complex a, const Complex& b) { return a *= b; }
Complex operator/(Complex a, const Complex& b) { return a /= b; }
Complex operator*(Complex a, const Real& b) { return a *= b; }
Complex operator*(const Real& b, Complex a) { return a *= b; }
Complex operator/(Complex a, const Real& b) { return a /= b; }

Complex exp(const Complex& z) {
  Real m = exp(z.re);
  Real s, c;
  mpfr_sin_cos(s.raw(), c.raw(), z.im.raw(), MPFR_RNDN);
  return Complex(m * c, m * s);
}

Complex sqr(const Complex& z) {
  return Complex(z.re * z.re - z.im * z.im, Real::ldexp(z.re * z.im, 1));
}

Complex pow(const Complex& z, long n) {
  if (n < 0) return Complex(1) / pow(z, -n);
  Complex result(1);
  Complex base = z;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n) base = sqr(base);
  }
  return result;
}

Real abs(const Complex& z) { return z.abs(); }

std::ostream& operator<<(std::ostream& os, const Complex& z) {
  return os << "(" << z.re << ", " << z.im << ")";
}

bool close_rel(const Real& a, const Real& b, const Real& tol) {
  return abs(a - b) <= tol * max(Real(1), abs(b));
}

bool close_rel(const Complex& a, const Complex& b, const Real& tol) {
  return abs(a - b) <= tol * max(Real(1), abs(b));
}

}  // namespace latsum
