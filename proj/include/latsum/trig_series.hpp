#pragma once

#include <vector>

#include "latsum/lattice.hpp"
#include "latsum/numeric.hpp"

namespace latsum {

// eps_l(z) = sum over m of (m+z)^(-l), symmetric pairing for l = 1.
Complex eps_l(int l, const Complex& z);
Complex eps_l(int l, const Complex& z, const PrecisionContext& ctx);

// Exact Gaussian rational coefficients of Q_l, eps_l(z) = pi^l Q_l(delta),
// delta = -2i w/(1-w), w = exp(2 pi i z). Index j is the power of delta.
struct GaussianQ {
  mpq_class re;
  mpq_class im;
};
const std::vector<GaussianQ>& eps_polynomial(int l);

struct EpsDerivativeTable {
  Complex tau;
  int max_order = 0;
  int max_power = 0;
  int n_max = 0;
  // values[l][n] = eps_l(n tau), 1 <= l <= max_order, 1 <= n <= n_max
  std::vector<std::vector<Complex>> values;
  // bound on the neglected outer tail
  Real tail_bound;

  // sum over n >= 1 of n^t eps_l(n tau)
  Complex moment(int l, int t) const;
};

// max_power is the largest n^t weight that will be requested.
EpsDerivativeTable make_eps_table(const Complex& tau, int max_order, int max_power);

SumValue s2_rayleigh(const LatticeSpec& lat);
SumValue s2_rayleigh(const LatticeSpec& lat, const PrecisionContext& ctx);
SumValue s31_series(const LatticeSpec& lat);
SumValue s31_series(const LatticeSpec& lat, const PrecisionContext& ctx);

SumValue sum_fast(const SumIndex& idx, const LatticeSpec& lat);
SumValue sum_fast(const SumIndex& idx, const LatticeSpec& lat, const PrecisionContext& ctx);
// reuses a table built for lat.tau with enough order and power
SumValue sum_fast(const SumIndex& idx, const LatticeSpec& lat, const EpsDerivativeTable& table);

// A_t = sum_s (-1)^(t-s) C(p,s) C(p-s,t-s) tau^(t-s) Im(tau^s)
Complex fast_coefficient(int p, int t, const Complex& tau);

}  // namespace latsum
