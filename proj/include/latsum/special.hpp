#pragma once

#include "latsum/numeric.hpp"

namespace latsum {

// Modulus k in (0,1) carried together with k' = sqrt(1-k^2).
class EllipticModulus {
 public:
  explicit EllipticModulus(Real k);
  EllipticModulus(Real k, Real k_prime);

  const Real& k() const { return k_; }
  const Real& k_prime() const { return kp_; }
  EllipticModulus complement() const { return EllipticModulus(kp_, k_); }

 private:
  Real k_;
  Real kp_;
};

// The overloads without a context work at the current thread precision.
Real gamma(const Real& x);
Real gamma(const Real& x, const PrecisionContext& ctx);

Real ellip_k(const EllipticModulus& m);
Real ellip_k(const EllipticModulus& m, const PrecisionContext& ctx);
Real ellip_e(const EllipticModulus& m);
Real ellip_e(const EllipticModulus& m, const PrecisionContext& ctx);

struct EllipticKE {
  Real K;
  Real E;
};
EllipticKE ellip_ke(const EllipticModulus& m);

// x(k) = K(k')/K(k)
Real modulus_ratio(const EllipticModulus& m);
Real modulus_ratio(const EllipticModulus& m, const PrecisionContext& ctx);

Real dx_dk(const EllipticModulus& m);
Real dx_dk(const EllipticModulus& m, const PrecisionContext& ctx);

Real legendre_residual(const EllipticModulus& m);
Real legendre_residual(const EllipticModulus& m, const PrecisionContext& ctx);

// k with modulus_ratio(k) = x
EllipticModulus inverse_modulus_ratio(const Real& x);

}  // namespace latsum
