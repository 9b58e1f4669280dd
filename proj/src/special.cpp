#include "latsum/special.hpp"

#include "latsum/errors.hpp"

namespace latsum {

EllipticModulus::EllipticModulus(Real k) : k_(std::move(k)) {
  if (!(k_ > Real(0) && k_ < Real(1))) throw DomainError("elliptic modulus must lie in (0,1)");
  kp_ = sqrt((Real(1) - k_) * (Real(1) + k_));
}

EllipticModulus::EllipticModulus(Real k, Real k_prime) : k_(std::move(k)), kp_(std::move(k_prime)) {
  if (!(k_ > Real(0) && k_ < Real(1))) throw DomainError("elliptic modulus must lie in (0,1)");
  if (!(kp_ > Real(0) && kp_ < Real(1))) throw DomainError("complementary modulus must lie in (0,1)");
  Real resid = abs(k_ * k_ + kp_ * kp_ - Real(1));
  if (resid > Real::ldexp(Real(1), 16 - working_bits()))
    throw InternalConsistencyError("k^2 + k'^2 != 1");
}

Real gamma(const Real& x) {
  if (!(x > Real(0))) throw DomainError("gamma: argument must be positive");
  return gamma_raw(x);
}

Real gamma(const Real& x, const PrecisionContext& ctx) {
  PrecisionGuard g(ctx);
  return gamma(x);
}

EllipticKE ellip_ke(const EllipticModulus& m) {
  Real a(1);
  Real b = m.k_prime();
  Real c = m.k();
  // sum of 2^(n-1) c_n^2
  Real acc = Real::ldexp(c * c, -1);
  Real eps = Real::ldexp(Real(1), 4 - working_bits());
  long weight = 0;
  for (int it = 0; it < 200; ++it) {
    Real an = Real::ldexp(a + b, -1);
    Real bn = sqrt(a * b);
    c = Real::ldexp(a - b, -1);
    a = std::move(an);
    b = std::move(bn);
    acc += Real::ldexp(c * c, weight);
    ++weight;
    if (abs(c) <= eps * a) break;
  }
  Real K = Real::pi() / Real::ldexp(a, 1);
  Real E = K * (Real(1) - acc);
  return {K, E};
}

Real ellip_k(const EllipticModulus& m) {
  Real a(1);
  Real b = m.k_prime();
  Real eps = Real::ldexp(Real(1), 4 - working_bits());
  for (int it = 0; it < 200 && abs(a - b) > eps * a; ++it) {
    Real an = Real::ldexp(a + b, -1);
    b = sqrt(a * b);
    a = std::move(an);
  }
  return Real::pi() / (a + b);
}

Real ellip_k(const EllipticModulus& m, const PrecisionContext& ctx) {
  PrecisionGuard g(ctx);
  return ellip_k(m);
}

Real ellip_e(const EllipticModulus& m) { return ellip_ke(m).E; }

Real ellip_e(const EllipticModulus& m, const PrecisionContext& ctx) {
  PrecisionGuard g(ctx);
  return ellip_e(m);
}

Real modulus_ratio(const EllipticModulus& m) { return ellip_k(m.complement()) / ellip_k(m); }

Real modulus_ratio(const EllipticModulus& m, const PrecisionContext& ctx) {
  PrecisionGuard g(ctx);
  return modulus_ratio(m);
}

Real dx_dk(const EllipticModulus& m) {
  Real K = ellip_k(m);
  return -Real::pi() / (Real::ldexp(m.k(), 1) * m.k_prime() * m.k_prime() * K * K);
}

Real dx_dk(const EllipticModulus& m, const PrecisionContext& ctx) {
  PrecisionGuard g(ctx);
  return dx_dk(m);
}

Real legendre_residual(const EllipticModulus& m) {
  EllipticKE a = ellip_ke(m);
  EllipticKE b = ellip_ke(m.complement());
  return a.E * b.K + b.E * a.K - a.K * b.K - Real::ldexp(Real::pi(), -1);
}

Real legendre_residual(const EllipticModulus& m, const PrecisionContext& ctx) {
  PrecisionGuard g(ctx);
  return legendre_residual(m);
}

EllipticModulus inverse_modulus_ratio(const Real& x) {
  if (!(x > Real(0))) throw DomainError("modulus ratio must be positive");
  if (x < Real(1)) {
    // x(k') = 1/x(k)
    EllipticModulus c = inverse_modulus_ratio(Real(1) / x);
    return c.complement();
  }
  Real lo("1e-10");
  Real hi = sqrt(Real(1) / Real(2));
  if (x == Real(1)) return EllipticModulus(hi, hi);
  if (modulus_ratio(EllipticModulus(lo)) < x)
    throw DomainError("inverse modulus ratio: x outside bracket");
  // x is decreasing in k
  Real coarse("1e-12");
  for (int it = 0; it < 200 && hi - lo > coarse * hi; ++it) {
    Real mid = Real::ldexp(lo + hi, -1);
    if (modulus_ratio(EllipticModulus(mid)) > x)
      lo = mid;
    else
      hi = mid;
  }
  Real k = Real::ldexp(lo + hi, -1);
  Real tol = Real::ldexp(Real(1), 8 - working_bits());
  for (int it = 0; it < 60; ++it) {
    EllipticModulus m(k);
    Real step = (modulus_ratio(m) - x) / dx_dk(m);
    Real next = k - step;
    if (!(next > Real(0) && next < Real(1))) throw InternalConsistencyError("Newton left (0,1)");
    k = std::move(next);
    if (abs(step) <= tol * k) break;
  }
  return EllipticModulus(k);
}

}  // namespace latsum
