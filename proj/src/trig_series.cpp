#include "latsum/trig_series.hpp"

#include <cmath>
#include <mutex>

#include "latsum/errors.hpp"

namespace latsum {

namespace {

std::mutex g_poly_mutex;
std::vector<std::vector<GaussianQ>> g_polys;  // g_polys[l-1] = Q_l

void require_tau(const Complex& tau) {
  if (!(tau.im > Real(0))) throw DomainError("Im(tau) must be positive");
  if (tau.im < Real(1) / Real(20))
    throw DomainError("Im(tau) < 0.05: nome too close to the unit circle for the trigonometric series");
}

Complex nome(const Complex& z) {
  // exp(2 pi i z)
  Real two_pi = Real::ldexp(Real::pi(), 1);
  return exp(Complex(-two_pi * z.im, two_pi * z.re));
}

Complex delta_of(const Complex& w) {
  // -2i w/(1-w)
  Complex num(Real::ldexp(w.im, 1), Real::ldexp(-w.re, 1));
  return num / (Complex(1) - w);
}

std::vector<Complex> to_complex(const std::vector<GaussianQ>& q) {
  std::vector<Complex> out;
  out.reserve(q.size());
  for (const auto& c : q) out.emplace_back(Real(c.re), Real(c.im));
  return out;
}

Complex horner(const std::vector<Complex>& coeffs, const Complex& x) {
  Complex acc = coeffs.back();
  for (size_t j = coeffs.size() - 1; j-- > 0;) {
    acc *= x;
    acc += coeffs[j];
  }
  return acc;
}

long table_extra_bits(int max_power) { return 4L * max_power + 32; }

}  // namespace

const std::vector<GaussianQ>& eps_polynomial(int l) {
  if (l < 1) throw PreconditionError("eps_polynomial: l >= 1");
  std::lock_guard<std::mutex> lock(g_poly_mutex);
  if (g_polys.empty()) g_polys.push_back({{0, -1}, {1, 0}});
  while (static_cast<int>(g_polys.size()) < l) {
    const auto& prev = g_polys.back();
    int n = static_cast<int>(g_polys.size());
    // derivative
    std::vector<GaussianQ> d;
    for (size_t j = 1; j < prev.size(); ++j) d.push_back({prev[j].re * j, prev[j].im * j});
    // times (delta^2 - 2i delta) / n
    std::vector<GaussianQ> next(d.size() + 2, {0, 0});
    for (size_t j = 0; j < d.size(); ++j) {
      next[j + 2].re += d[j].re;
      next[j + 2].im += d[j].im;
      next[j + 1].re += 2 * d[j].im;
      next[j + 1].im -= 2 * d[j].re;
    }
    for (auto& c : next) {
      c.re /= n;
      c.im /= n;
    }
    g_polys.push_back(std::move(next));
  }
  return g_polys[l - 1];
}

Complex eps_l(int l, const Complex& z) {
  if (l < 1) throw PreconditionError("eps_l: l >= 1");
  if (!(z.im > Real(0))) throw DomainError("eps_l: Im z must be positive");
  Complex delta = delta_of(nome(z));
  return horner(to_complex(eps_polynomial(l)), delta) * pow(Real::pi(), static_cast<long>(l));
}

Complex eps_l(int l, const Complex& z, const PrecisionContext& ctx) {
  PrecisionGuard g(ctx);
  return eps_l(l, z);
}

Complex EpsDerivativeTable::moment(int l, int t) const {
  if (l < 1 || l > max_order) throw PreconditionError("eps table: order out of range");
  if (t < 0 || t > max_power) throw PreconditionError("eps table: power out of range");
  Complex acc;
  for (int n = n_max; n >= 1; --n) {
    if (t == 0)
      acc += values[l][n];
    else
      acc += values[l][n] * pow(Real(n), static_cast<long>(t));
  }
  return acc;
}

EpsDerivativeTable make_eps_table(const Complex& tau, int max_order, int max_power) {
  require_tau(tau);
  if (max_order < 1 || max_power < 0) throw PreconditionError("eps table: bad order");
  PrecisionGuard guard(working_bits() + table_extra_bits(max_power));
  EpsDerivativeTable tab;
  tab.tau = tau;
  tab.max_order = max_order;
  tab.max_power = max_power;

  // |eps_l(n tau)| <= (2 pi/(1-x))^l x with x = exp(-2 pi n Im tau), l >= 2
  double im = tau.im.to_double();
  double log_tol = -static_cast<double>(working_bits()) * std::log(2.0) - 10.0;
  int lmax = std::max(max_order, 2);
  auto log_term = [&](int n) {
    double x = std::exp(-2 * M_PI * n * im);
    return max_power * std::log(static_cast<double>(n)) + lmax * std::log(2 * M_PI / (1 - x)) -
           2 * M_PI * n * im;
  };
  int n = 1;
  for (;; ++n) {
    double x = std::exp(-2 * M_PI * (n + 1) * im);
    double ratio = max_power * std::log(static_cast<double>(n + 2) / (n + 1)) - 2 * M_PI * im;
    if (x <= 0.5 && ratio < -std::log(2.0) && log_term(n + 1) < log_tol) break;
    if (n > 100000) throw InternalConsistencyError("eps table: n_max did not converge");
  }
  tab.n_max = n;
  tab.tail_bound = Real::ldexp(exp(Real(log_term(n + 1))), 1);

  std::vector<std::vector<Complex>> coeffs;
  for (int l = 1; l <= max_order; ++l) coeffs.push_back(to_complex(eps_polynomial(l)));
  std::vector<Real> pi_pow(max_order + 1);
  pi_pow[0] = Real(1);
  Real pi = Real::pi();
  for (int l = 1; l <= max_order; ++l) pi_pow[l] = pi_pow[l - 1] * pi;

  tab.values.assign(max_order + 1, std::vector<Complex>(tab.n_max + 1));
  Complex w1 = nome(tau);
  Complex w = w1;
  for (int k = 1; k <= tab.n_max; ++k) {
    Complex delta = delta_of(w);
    for (int l = 1; l <= max_order; ++l) tab.values[l][k] = horner(coeffs[l - 1], delta) * pi_pow[l];
    w *= w1;
  }
  return tab;
}

Complex fast_coefficient(int p, int t, const Complex& tau) {
  Complex acc;
  for (int s = 1; s <= t; ++s) {
    mpz_class c1, c2;
    mpz_bin_uiui(c1.get_mpz_t(), p, s);
    mpz_bin_uiui(c2.get_mpz_t(), p - s, t - s);
    Real c = Real(mpz_class(c1 * c2));
    if ((t - s) % 2) c = -c;
    acc += pow(tau, t - s) * Complex(c * pow(tau, s).im);
  }
  return acc;
}

SumValue s2_rayleigh(const LatticeSpec& lat) {
  require_tau(lat.tau);
  PrecisionGuard guard(working_bits() + 16);
  Complex w1 = nome(lat.tau);
  Complex w = w1;
  Complex acc;
  Real stop = Real::ldexp(Real(1), -working_bits() - 8);
  for (int m = 1; m < 1000000; ++m) {
    // 1/sin^2(m pi tau) = -4 w/(1-w)^2
    Complex one_minus = Complex(1) - w;
    acc += w * Real(-4) / sqr(one_minus);
    if (abs(w) < stop) break;
    w *= w1;
  }
  Real pi = Real::pi();
  Complex s2 = Complex(pi * pi * lat.tau.im) * (Complex(Real(1) / Real(3)) + acc * Real(2));
  SumValue v;
  v.value = s2;
  v.method = Method::TRIG_SERIES;
  v.precision_estimate = Real::ldexp(abs(s2) + Real(1), -working_bits() + 24);
  return v;
}

SumValue s2_rayleigh(const LatticeSpec& lat, const PrecisionContext& ctx) {
  PrecisionGuard g(ctx);
  return s2_rayleigh(lat);
}

SumValue s31_series(const LatticeSpec& lat) {
  require_tau(lat.tau);
  SumValue s2 = s2_rayleigh(lat);
  PrecisionGuard guard(working_bits() + 16);
  Complex w1 = nome(lat.tau);
  Complex w = w1;
  Complex acc;
  Real stop = Real::ldexp(Real(1), -working_bits() - 8);
  for (int m = 1; m < 1000000; ++m) {
    Complex one_minus = Complex(1) - w;
    acc += w * (Complex(1) + w) * Real(m) / (one_minus * sqr(one_minus));
    if (abs(w) * Real(m) < stop) break;
    w *= w1;
  }
  Real pi = Real::pi();
  Real c = Real(16) * pi * pi * pi * lat.tau.im * lat.tau.im;
  SumValue v;
  v.value = s2.value + acc * c;
  v.method = Method::TRIG_SERIES;
  v.precision_estimate = Real::ldexp(abs(v.value) + Real(1), -working_bits() + 24);
  return v;
}

SumValue s31_series(const LatticeSpec& lat, const PrecisionContext& ctx) {
  PrecisionGuard g(ctx);
  return s31_series(lat);
}

SumValue sum_fast(const SumIndex& idx, const LatticeSpec& lat, const EpsDerivativeTable& table) {
  const int p = idx.p;
  const int r = idx.q - idx.p;
  if (p < 0) throw PreconditionError("sum_fast: p must be >= 0");
  if (r < 2) throw PreconditionError("sum_fast: q - p must be >= 2");
  require_tau(lat.tau);
  SumValue v;
  v.method = Method::TRIG_SERIES;
  if (r % 2) {
    // terms for n and -n cancel
    v.value = Complex(0);
    v.precision_estimate = Real(0);
    return v;
  }
  if (table.max_order < idx.q || table.max_power < p)
    throw PreconditionError("sum_fast: eps table too small");
  PrecisionGuard guard(working_bits() + table_extra_bits(p));
  Real im = lat.tau.im;
  Real pref = pow(sqrt(im), static_cast<long>(r));

  Complex base = Complex(Real::ldexp(zeta_ui(r), 1)) + table.moment(r, 0) * Real(2);
  Complex series;
  Real scale = abs(base);
  for (int t = 1; t <= p; ++t) {
    Complex term = fast_coefficient(p, t, lat.tau) * table.moment(r + t, t) * Real(2);
    scale = max(scale, abs(term) * Real(2));
    series += term;
  }
  // S = pref (V_r - 2i sum_t A_t M_t)
  Complex total = base - Complex(Real(0), Real(2)) * series;
  v.value = total * pref;
  Real coeff_sum(1);
  for (int t = 1; t <= p; ++t) coeff_sum += abs(fast_coefficient(p, t, lat.tau)) * Real(4);
  v.precision_estimate =
      pref * (table.tail_bound * coeff_sum + Real::ldexp(scale + Real(1), -working_bits() + table_extra_bits(p) + 8));
  return v;
}

SumValue sum_fast(const SumIndex& idx, const LatticeSpec& lat) {
  if (idx.p < 0) throw PreconditionError("sum_fast: p must be >= 0");
  if (idx.q - idx.p < 2) throw PreconditionError("sum_fast: q - p must be >= 2");
  if ((idx.q - idx.p) % 2) {
    SumValue v;
    v.method = Method::TRIG_SERIES;
    v.value = Complex(0);
    v.precision_estimate = Real(0);
    return v;
  }
  EpsDerivativeTable tab = make_eps_table(lat.tau, idx.q, idx.p);
  return sum_fast(idx, lat, tab);
}

SumValue sum_fast(const SumIndex& idx, const LatticeSpec& lat, const PrecisionContext& ctx) {
  PrecisionGuard g(ctx);
  return sum_fast(idx, lat);
}

}  // namespace latsum
