#pragma once

// Reference computations that share no code path with the library.

#include <gmpxx.h>

#include <complex>
#include <vector>

#include "latsum/numeric.hpp"

namespace oracle {

using latsum::Complex;
using latsum::Real;

// Bernoulli numbers by the Akiyama-Tanigawa table
inline std::vector<mpq_class> bernoulli_table(int n) {
  std::vector<mpq_class> out;
  std::vector<mpq_class> a(n + 1);
  for (int m = 0; m <= n; ++m) {
    a[m] = mpq_class(1, m + 1);
    for (int j = m; j >= 1; --j) {
      a[j - 1] = j * (a[j - 1] - a[j]);
      a[j - 1].canonicalize();
    }
    out.push_back(a[0]);
  }
  out[1] = -out[1];  // B1 = -1/2 convention
  return out;
}

// log Gamma by the Stirling series after shifting x past `shift`
inline Real gamma_stirling(const Real& x) {
  const long bits = latsum::working_bits();
  const long shift = bits / 2 + 20;
  Real prod(1);
  Real y = x;
  while (y < Real(shift)) {
    prod *= y;
    y += Real(1);
  }
  static thread_local std::vector<mpq_class> B = bernoulli_table(160);
  Real pi = Real::pi();
  Real lg = (y - Real(1) / Real(2)) * latsum::log(y) - y + latsum::log(Real(2) * pi) / Real(2);
  Real yk = y;
  Real y2 = y * y;
  for (int k = 1; 2 * k < 160; ++k) {
    Real term = Real(B[2 * k]) / (Real(2 * k) * Real(2 * k - 1) * yk);
    lg += term;
    if (latsum::abs(term) < latsum::Real::ldexp(Real(1), -bits - 10)) break;
    yk *= y2;
  }
  return latsum::exp(lg) / prod;
}

// theta functions at nome q in (0,1)
inline Real theta2(const Real& q) {
  Real acc(0);
  for (long n = 0;; ++n) {
    Real e = (Real(n) + Real(1) / Real(2)) * (Real(n) + Real(1) / Real(2));
    Real t = latsum::pow(q, e);
    acc += t;
    if (t < latsum::Real::ldexp(Real(1), -latsum::working_bits() - 8)) break;
  }
  return Real(2) * acc;
}

inline Real theta3(const Real& q) {
  Real acc(1);
  for (long n = 1;; ++n) {
    Real t = latsum::pow(q, n * n);
    acc += Real(2) * t;
    if (t < latsum::Real::ldexp(Real(1), -latsum::working_bits() - 8)) break;
  }
  return acc;
}

// modulus with K'/K = x, and K itself, from the nome exp(-pi x)
inline Real modulus_from_ratio(const Real& x) {
  Real q = latsum::exp(-Real::pi() * x);
  Real r = theta2(q) / theta3(q);
  return r * r;
}

inline Real K_from_ratio(const Real& x) {
  Real q = latsum::exp(-Real::pi() * x);
  Real t = theta3(q);
  return Real::pi() / Real(2) * t * t;
}

// K and E by their hypergeometric series, |k| < 1/2 for speed
inline Real K_series(const Real& k) {
  Real k2 = k * k, c(1), acc(0), kp(1);
  for (int n = 0; n < 4000; ++n) {
    Real t = c * c * kp;
    acc += t;
    if (t < latsum::Real::ldexp(Real(1), -latsum::working_bits() - 8)) break;
    c = c * Real(2 * n + 1) / Real(2 * n + 2);
    kp *= k2;
  }
  return Real::pi() / Real(2) * acc;
}

inline Real E_series(const Real& k) {
  Real k2 = k * k, c(1), acc(0), kp(1);
  for (int n = 0; n < 4000; ++n) {
    Real t = c * c * kp / Real(1 - 2 * n);
    acc += t;
    if (latsum::abs(t) < latsum::Real::ldexp(Real(1), -latsum::working_bits() - 8)) break;
    c = c * Real(2 * n + 1) / Real(2 * n + 2);
    kp *= k2;
  }
  return Real::pi() / Real(2) * acc;
}

inline Complex csin(const Complex& z) {
  return Complex(latsum::sin(z.re) * latsum::cosh(z.im), latsum::cos(z.re) * latsum::sinh(z.im));
}
inline Complex ccos(const Complex& z) {
  return Complex(latsum::cos(z.re) * latsum::cosh(z.im), -(latsum::sin(z.re) * latsum::sinh(z.im)));
}

// sum over m of (m+z)^-1 (symmetric) and (m+z)^-2
inline Complex pi_cot(const Complex& z) {
  Complex w = z * Real::pi();
  return Complex(Real::pi()) * ccos(w) / csin(w);
}
inline Complex pi2_csc2(const Complex& z) {
  Complex s = csin(z * Real::pi());
  return Complex(Real::pi() * Real::pi()) / (s * s);
}

// Eisenstein E2 of the lattice Z + tau Z: rows of pi^2/sin^2 summed over n
inline Complex e2_rows(const Complex& z, const Complex& tau, int rows) {
  Complex acc;
  for (int n = -rows; n <= rows; ++n) acc += pi2_csc2(z - tau * Real(n));
  return acc;
}

// brute force over the box max(|m|,|n|) <= R in double precision, q - p >= 3
inline std::complex<double> box_sum(int p, int q, std::complex<double> tau, int R) {
  std::complex<double> acc = 0;
  double norm = std::pow(tau.imag(), 0.5 * (q - p));
  for (int n = -R; n <= R; ++n)
    for (int m = -R; m <= R; ++m) {
      if (m == 0 && n == 0) continue;
      std::complex<double> w = double(m) + double(n) * tau;
      acc += std::pow(std::conj(w), p) / std::pow(w, q);
    }
  return acc * norm;
}

}  // namespace oracle
