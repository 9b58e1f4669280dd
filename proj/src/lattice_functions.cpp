#include "latsum/lattice_functions.hpp"

#include <cmath>

#include "latsum/errors.hpp"
#include "latsum/recurrence.hpp"
#include "latsum/trig_series.hpp"

namespace latsum {

LaurentData::LaurentData(const LatticeSpec& lat) : lat_(lat) {
  s2_ = s2_rayleigh(lat).value;
  ClassicBase base = classic_base(lat);
  base_s4_ = base.S4;
  base_s6_ = base.S6;
  Real best(-1);
  for (int n = 0; n <= 10; ++n) {
    for (int m = -10; m <= 10; ++m) {
      if (n == 0 && m <= 0) continue;
      Real d = abs(Complex(Real(m)) + lat.tau * Real(n));
      if (best < Real(0) || d < best) best = d;
    }
  }
  rho_ = best * lat.omega1;
  sums_ = classic_sums_from(base, 3);
}

void LaurentData::extend(int L) {
  int have = static_cast<int>(sums_.size()) / 2;
  if (have >= L) return;
  ClassicBase base{base_s4_, base_s6_, Real(0)};
  sums_ = classic_sums_from(base, std::max(L, 2 * have));
}

const Complex& LaurentData::S(int two_l) {
  if (two_l < 2 || two_l % 2) throw PreconditionError("LaurentData::S: even index >= 2");
  if (two_l == 2) return s2_;
  extend(two_l / 2);
  return sums_[two_l];
}

SeriesValue LaurentData::series(SeriesKind kind, const Complex& z, int L) {
  if (L < 2) throw PreconditionError("weierstrass_series: L >= 2");
  if (z.is_zero()) throw PoleError("lattice function evaluated at a lattice point");
  Real az = abs(z);
  if (!(az < rho_)) throw PreconditionError("weierstrass_series: |z| outside the disk of convergence");
  extend(L + 1);
  Complex z2 = sqr(z);
  Complex zi = Complex(1) / z;
  bool odd = kind == SeriesKind::ZETA || kind == SeriesKind::E1;
  // zeta, E1: 1/z - sum S_{2l} z^(2l-1); wp, E2: 1/z^2 + sum (2l-1) S_{2l} z^(2l-2)
  Complex acc;
  Complex zp = odd ? z * z2 : z2;  // power at l = 2
  for (int l = 2; l <= L; ++l) {
    if (odd)
      acc -= zp * sums_[2 * l];
    else
      acc += zp * (sums_[2 * l] * Real(2 * l - 1));
    zp *= z2;
  }
  SeriesValue out;
  out.terms = L;
  Real ratio2 = sqr(Complex(az / rho_)).re;
  Real next = abs(zp) * abs(sums_[2 * L + 2]) * Real(odd ? 1 : 2 * L + 1);
  out.tail_estimate = next / (Real(1) - ratio2);
  switch (kind) {
    case SeriesKind::ZETA:
      out.value = zi + acc;
      break;
    case SeriesKind::E1:
      out.value = zi + acc - z * s2_;
      break;
    case SeriesKind::WP:
      out.value = sqr(zi) + acc;
      break;
    case SeriesKind::E2:
      out.value = sqr(zi) + acc + s2_;
      break;
  }
  return out;
}

SeriesValue LaurentData::series(SeriesKind kind, const Complex& z) {
  if (z.is_zero()) throw PoleError("lattice function evaluated at a lattice point");
  double ratio = (abs(z) / rho_).to_double();
  if (!(ratio < 1)) throw PreconditionError("weierstrass_series: |z| outside the disk of convergence");
  double need = working_bits() * std::log(2.0) + 20;
  int L = static_cast<int>(std::ceil(need / (-2 * std::log(std::max(ratio, 1e-300))))) + 2;
  L = std::clamp(L, 4, 20000);
  return series(kind, z, L);
}

Complex LaurentData::reduce(const Complex& z) const {
  Real b = z.im / (lat_.omega1 * lat_.tau.im);
  Real a = z.re / lat_.omega1 - b * lat_.tau.re;
  long b0 = floor(b + Real(1) / Real(2)).to_long();
  long a0 = floor(a + Real(1) / Real(2)).to_long();
  Complex best = z;
  Real best_abs = abs(z);
  for (long db = -1; db <= 1; ++db) {
    for (long da = -1; da <= 1; ++da) {
      Complex w = (Complex(Real(a0 + da)) + lat_.tau * Real(b0 + db)) * lat_.omega1;
      Complex d = z - w;
      Real ad = abs(d);
      if (ad < best_abs) {
        best = d;
        best_abs = ad;
      }
    }
  }
  return best;
}

SeriesValue LaurentData::e2(const Complex& z) {
  Complex r = reduce(z);
  if (abs(r) <= Real::ldexp(Real(1), 16 - working_bits()))
    throw PoleError("E2 evaluated at a lattice point");
  return series(SeriesKind::E2, r);
}

SeriesValue weierstrass_series(SeriesKind kind, const Complex& z, const LatticeSpec& lat, int L) {
  LaurentData data(lat);
  return data.series(kind, z, L);
}

SeriesValue weierstrass_series(SeriesKind kind, const Complex& z, const LatticeSpec& lat, int L,
                               const PrecisionContext& ctx) {
  PrecisionGuard g(ctx);
  return weierstrass_series(kind, z, lat, L);
}

Real isotropy_e2(const std::vector<Complex>& points, const LatticeSpec& lat) {
  if (points.empty()) throw PreconditionError("isotropy_e2: at least one point required");
  Real half = Real(1) / Real(2);
  for (const auto& a : points) {
    if (!(abs(a.re) < half && abs(a.im) < half))
      throw PreconditionError("isotropy_e2: points must lie in the open square (-1/2,1/2)^2");
  }
  LaurentData data(lat);
  Real tol = Real::ldexp(Real(1), 16 - working_bits());
  Complex total = data.S2() * Real(static_cast<long>(points.size()));
  for (size_t k = 0; k < points.size(); ++k) {
    for (size_t m = k + 1; m < points.size(); ++m) {
      Complex d = points[k] - points[m];
      if (abs(d) <= tol) throw PoleError("isotropy_e2: coincident points");
      total += data.e2(d).value * Real(2);
    }
  }
  Real n = Real(static_cast<long>(points.size()));
  return total.re / (n * n);
}

Real isotropy_e2(const std::vector<Complex>& points) { return isotropy_e2(points, make_square()); }

Real isotropy_e2(const std::vector<Complex>& points, const LatticeSpec& lat, const PrecisionContext& ctx) {
  PrecisionGuard g(ctx);
  return isotropy_e2(points, lat);
}

}  // namespace latsum
