#include "latsum/recurrence.hpp"

#include "latsum/eisenstein.hpp"
#include "latsum/errors.hpp"
#include "latsum/special.hpp"
#include "latsum/trig_series.hpp"

namespace latsum {

ClassicBase classic_base(const LatticeSpec& lat) {
  ClassicBase out;
  if (lat.family == LatticeFamily::GENERAL || !lat.x) {
    const int radius = 200;
    SumValue s4 = sum_absolute({0, 4}, lat, radius);
    SumValue s6 = sum_absolute({0, 6}, lat, radius);
    out.S4 = s4.value;
    out.S6 = s6.value;
    out.precision_estimate = max(s4.precision_estimate, s6.precision_estimate);
    return out;
  }
  PrecisionGuard guard(working_bits() + 16);
  const Real& x = *lat.x;
  EllipticModulus m = inverse_modulus_ratio(x);
  Real K = ellip_k(m);
  Real k2 = m.k() * m.k();
  Real k4 = k2 * k2;
  Real K2 = K * K;
  Real K4 = K2 * K2;
  Real K6 = K4 * K2;
  Real im = lat.tau.im;
  Real V4, V6;
  if (lat.family == LatticeFamily::RECTANGULAR) {
    V4 = Real(16) / Real(45) * (k4 - k2 + Real(1)) * K4;
    V6 = Real(64) / Real(945) * (k2 - Real(2)) * (Real(2) * k2 - Real(1)) * (k2 + Real(1)) * K6;
  } else {
    V4 = Real(16) / Real(45) * (Real(16) * k4 - Real(16) * k2 + Real(1)) * K4;
    V6 = Real(128) / Real(945) * (Real(2) * k2 - Real(1)) * (Real(32) * k4 - Real(32) * k2 - Real(1)) * K6;
  }
  out.S4 = Complex(im * im * V4);
  out.S6 = Complex(im * im * im * V6);
  // rotation invariance forces exact zeros
  if (lat.symmetry_order == 4) out.S6 = Complex();
  if (lat.symmetry_order == 6) out.S4 = Complex();
  out.precision_estimate = Real::ldexp(abs(out.S4) + abs(out.S6) + Real(1), 24 - working_bits());
  return out;
}

ClassicBase classic_base(const LatticeSpec& lat, const PrecisionContext& ctx) {
  PrecisionGuard g(ctx);
  return classic_base(lat);
}

std::vector<Complex> classic_sums_from(const ClassicBase& base, int L) {
  if (L < 2) throw PreconditionError("classic_sums: L >= 2");
  std::vector<Complex> S(2 * L + 1);
  S[4] = base.S4;
  if (L >= 3) S[6] = base.S6;
  for (int l = 4; l <= L; ++l) {
    Complex acc;
    for (int j = 2; j <= l - 2; ++j) acc += Real((2 * j - 1) * (2 * l - 2 * j - 1)) * S[2 * j] * S[2 * l - 2 * j];
    S[2 * l] = Real(3) * acc / Real(static_cast<long>(2 * l - 1) * (2 * l + 1) * (l - 3));
  }
  return S;
}

std::vector<Complex> classic_sums(const LatticeSpec& lat, int L) { return classic_sums_from(classic_base(lat), L); }

std::vector<Complex> classic_sums(const LatticeSpec& lat, int L, const PrecisionContext& ctx) {
  PrecisionGuard g(ctx);
  return classic_sums(lat, L);
}

std::vector<Complex> s1_sums_from(const std::vector<Complex>& S, const Complex& s2, int M, bool s2_is_pi) {
  if (M < 1) throw PreconditionError("s1_sums: M >= 1");
  if (static_cast<int>(S.size()) < 2 * M + 5) throw PreconditionError("s1_sums: classic sums too short");
  std::vector<Complex> out(2 * M + 4);
  Real two_pi = Real::ldexp(Real::pi(), 1);
  Complex shift = s2_is_pi ? Complex() : s2 - Complex(Real::pi());
  for (int m = 1; m <= M; ++m) {
    Complex rhs = S[2 * m + 4] * Real(2 * m + 5);
    if (!s2_is_pi) rhs -= shift * S[2 * m + 2] * Real(2);
    for (int l = 1; l <= m - 1; ++l)
      rhs -= S[2 * l + 2] * S[2 * (m - l) + 2] * (Real(2 * l + 1) / Real(m + 1));
    out[2 * m + 3] = rhs / two_pi;
  }
  return out;
}

std::vector<Complex> s1_sums(const LatticeSpec& lat, int M) {
  std::vector<Complex> S = classic_sums(lat, M + 2);
  bool reduced = lat.symmetry_order == 4 || lat.symmetry_order == 6;
  Complex s2 = reduced ? Complex(Real::pi()) : s2_rayleigh(lat).value;
  return s1_sums_from(S, s2, M, reduced);
}

std::vector<Complex> s1_sums(const LatticeSpec& lat, int M, const PrecisionContext& ctx) {
  PrecisionGuard g(ctx);
  return s1_sums(lat, M);
}

S1LinearConstants s1_linear_constants(const Real& S4) { return {Real(0), Real(-10) * S4}; }

SumValue sum_recurrence(const SumIndex& idx, const LatticeSpec& lat) {
  SumValue v;
  v.method = Method::RECURRENCE;
  v.precision_estimate = Real(0);
  const int p = idx.p, q = idx.q;
  if (q - p < 2) throw PreconditionError("sum_recurrence: q - p >= 2");
  if (p == 0) {
    if (q == 2) throw PreconditionError("sum_recurrence: S_2 has no recurrence; use the trigonometric series");
    if (q % 2) {
      v.value = Complex(0);
      return v;
    }
    ClassicBase base = classic_base(lat);
    std::vector<Complex> S = classic_sums_from(base, q / 2);
    v.value = S[q];
    v.precision_estimate = base.precision_estimate * pow(Real(2), static_cast<long>(q));
    return v;
  }
  if (p == 1) {
    if (q % 2 == 0) {
      v.value = Complex(0);
      return v;
    }
    if (q < 5) throw PreconditionError("sum_recurrence: S_3^(1) has no recurrence; use the trigonometric series");
    int m = (q - 3) / 2;
    std::vector<Complex> s1 = s1_sums(lat, m);
    v.value = s1[q];
    v.precision_estimate = Real::ldexp(abs(s1[q]) + Real(1), 32 - working_bits());
    if (lat.family == LatticeFamily::GENERAL) v.precision_estimate = Real("1e-3");
    return v;
  }
  throw PreconditionError("sum_recurrence: only p = 0 and p = 1 have recurrences");
}

}  // namespace latsum
