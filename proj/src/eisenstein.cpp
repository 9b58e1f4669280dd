#include "latsum/eisenstein.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <deque>
#include <vector>

#include "latsum/errors.hpp"

namespace latsum {

namespace {

std::mutex g_bern_mutex;
std::deque<mpq_class> g_bern{mpq_class(1)};

mpz_class binom(long n, long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

// sum over x > M of (x+d)^(-j), j >= 2, by Euler-Maclaurin at x = M
Complex hurwitz_tail(int j, const Complex& d, long M) {
  Complex u = d + Complex(Real(M));
  Complex ui = Complex(1) / u;
  Complex uj1 = pow(ui, j - 1);
  Complex uj = uj1 * ui;
  Complex acc = uj1 / Real(j - 1) - uj / Real(2);
  Complex ui2 = sqr(ui);
  Complex upow = uj1;  // u^-(j+2k-1) at k = 0
  Real eps = Real::ldexp(Real(1), -working_bits() - 4);
  Real prev_mag;
  mpz_class fact = 1;   // (2k)!
  mpz_class rising = 1; // j (j+1) ... (j+2k-2)
  for (int k = 1; k <= 60; ++k) {
    fact *= (2 * k - 1) * (2 * k);
    if (k == 1)
      rising = j;
    else
      rising *= mpz_class(j + 2 * k - 3) * (j + 2 * k - 2);
    upow *= ui2;
    mpq_class c = bernoulli(2 * k) * mpq_class(rising, fact);
    c.canonicalize();
    Complex term = upow * Real(c);
    Real mag = abs(term);
    if (k > 1 && mag > prev_mag) break;  // asymptotic series turned
    acc += term;
    if (mag <= eps * abs(acc)) break;
    prev_mag = mag;
  }
  return acc;
}

// sum over x > M of (x + conj(d))^p (x+d)^(-q)
Complex shifted_tail(int p, int q, const Complex& d, long M) {
  Complex diff(Real(0), Real::ldexp(-d.im, 1));  // conj(d) - d
  Complex acc;
  Complex dpow(1);
  for (int s = 0; s <= p; ++s) {
    acc += dpow * hurwitz_tail(q - p + s, d, M) * Real(binom(p, s));
    dpow *= diff;
  }
  return acc;
}

Complex term_of(int p, int q, const Complex& w) {
  Real nrm = w.norm();
  Complex inv = w.conj() / nrm;
  Complex t = pow(inv, p + q);
  if (p > 0) t *= pow(nrm, static_cast<long>(p));
  return t;
}

void check_index(const SumIndex& idx, int min_r) {
  if (idx.p < 0) throw PreconditionError("p must be >= 0");
  if (idx.q - idx.p < min_r) {
    if (min_r == 3)
      throw PreconditionError("q - p < 3 is conditionally convergent; use sum_eisenstein");
    throw PreconditionError("q - p < 2: the lattice sum diverges");
  }
}

SumValue iterated(const SumIndex& idx, const LatticeSpec& lat, int N, bool reversed) {
  check_index(idx, 2);
  if (N < 1) throw PreconditionError("N must be positive");
  PrecisionGuard guard(working_bits() + 16);
  const int p = idx.p, q = idx.q;
  auto row = [&](int j) {
    if (!reversed) return inner_line_sum(p, q, lat.tau * Real(j), Complex(1));
    return inner_line_sum(p, q, Complex(Real(j)), lat.tau);
  };
  Complex total = row(0);
  Complex last;
  for (int j = 1; j <= N; ++j) {
    last = row(j) + row(-j);
    total += last;
  }
  Real r_half = pow(sqrt(lat.tau.im), static_cast<long>(q - p));
  SumValue v;
  v.value = total * r_half;
  v.method = Method::EISENSTEIN_ORACLE;
  v.precision_estimate = (abs(last) * Real(4) + Real::ldexp(abs(total) + Real(1), -working_bits() + 40)) * r_half;
  return v;
}

}  // namespace

const mpq_class& bernoulli(int n) {
  if (n < 0) throw PreconditionError("bernoulli: n >= 0");
  std::lock_guard<std::mutex> lock(g_bern_mutex);
  while (static_cast<int>(g_bern.size()) <= n) {
    long m = static_cast<long>(g_bern.size());
    mpq_class acc = 0;
    for (long k = 0; k < m; ++k) acc += mpq_class(binom(m + 1, k)) * g_bern[k];
    acc = -acc / (m + 1);
    acc.canonicalize();
    g_bern.push_back(acc);
  }
  return g_bern[n];
}

Complex inner_line_sum(int p, int q, const Complex& a, const Complex& b) {
  if (q - p < 2) throw PreconditionError("inner_line_sum: q - p >= 2");
  Complex c = a / b;
  long M = static_cast<long>(std::ceil(std::fabs(c.re.to_double()))) +
           std::max<long>(40, static_cast<long>(working_bits() / 3.33));
  Complex direct;
  for (long x = M; x >= 1; --x) {
    for (long sx : {x, -x}) {
      Complex w = a + b * Real(sx);
      if (w.is_zero()) continue;
      direct += term_of(p, q, w);
    }
  }
  if (!a.is_zero()) direct += term_of(p, q, a);
  Complex pref = pow(b.conj(), p) / pow(b, q);
  Complex tail = shifted_tail(p, q, c, M);
  Complex back = shifted_tail(p, q, -c, M);
  if ((p + q) % 2) back = -back;
  return direct + pref * (tail + back);
}

SumValue sum_absolute(const SumIndex& idx, const LatticeSpec& lat, int radius) {
  check_index(idx, 3);
  if (radius < 10) throw PreconditionError("radius must be >= 10");
  SumValue v;
  v.method = Method::EISENSTEIN_ORACLE;
  const int p = idx.p, q = idx.q, r = q - p;
  Real im = lat.tau.im;
  Real r_half = pow(sqrt(im), static_cast<long>(r));
  bool hex = lat.symmetry_order == 6;
  Real rho = hex ? Real(radius) * sqrt(Real(3)) / Real(2)
                 : Real(radius) * im * min(Real(1), Real(1) / abs(lat.tau));
  Real pi = Real::pi();
  v.precision_estimate = r_half * Real::ldexp(pi, 1) * pow(rho, static_cast<long>(2 - r)) / (Real(r - 2) * im);
  if ((p + q) % 2) {
    v.value = Complex(0);
    return v;
  }
  // half plane: n > 0, or n = 0 and m > 0; the other half is equal
  Complex acc;
  for (int m = 1; m <= radius; ++m) acc += term_of(p, q, Complex(Real(m)));
  for (int n = 1; n <= radius; ++n) {
    int lo = -radius;
    int hi = hex ? radius - n : radius;
    Complex nt = lat.tau * Real(n);
    Complex row;
    for (int m = lo; m <= hi; ++m) row += term_of(p, q, nt + Complex(Real(m)));
    acc += row;
  }
  v.value = acc * Real(2) * r_half;
  return v;
}

SumValue sum_absolute(const SumIndex& idx, const LatticeSpec& lat, int radius, const PrecisionContext& ctx) {
  PrecisionGuard g(ctx);
  return sum_absolute(idx, lat, radius);
}

SumValue sum_eisenstein(const SumIndex& idx, const LatticeSpec& lat, int N) {
  if (N < 50) throw PreconditionError("sum_eisenstein: N must be >= 50");
  return iterated(idx, lat, N, false);
}

SumValue sum_eisenstein(const SumIndex& idx, const LatticeSpec& lat, int N, const PrecisionContext& ctx) {
  PrecisionGuard g(ctx);
  return sum_eisenstein(idx, lat, N);
}

SumValue sum_eisenstein_reversed(const SumIndex& idx, const LatticeSpec& lat, int N) {
  if (N < 50) throw PreconditionError("sum_eisenstein_reversed: N must be >= 50");
  return iterated(idx, lat, N, true);
}

}  // namespace latsum
