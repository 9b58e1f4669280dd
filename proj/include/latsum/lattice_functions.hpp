#pragma once

#include <vector>

#include "latsum/lattice.hpp"
#include "latsum/numeric.hpp"

namespace latsum {

enum class SeriesKind { ZETA, WP, E1, E2 };

struct SeriesValue {
  Complex value;
  Real tail_estimate;
  int terms = 0;
};

// Laurent data for one lattice with periods omega1 and omega1 tau.
class LaurentData {
 public:
  explicit LaurentData(const LatticeSpec& lat);

  const LatticeSpec& lattice() const { return lat_; }
  const Complex& S2() const { return s2_; }
  // shortest nonzero period, the radius of convergence
  const Real& rho() const { return rho_; }
  // S_{2l}, computed on demand
  const Complex& S(int two_l);

  // fixed truncation: l runs up to L
  SeriesValue series(SeriesKind kind, const Complex& z, int L);
  // L chosen from |z|/rho and the working precision
  SeriesValue series(SeriesKind kind, const Complex& z);
  // E2 anywhere off the lattice, via periodicity
  SeriesValue e2(const Complex& z);
  // z minus the nearest lattice point
  Complex reduce(const Complex& z) const;

 private:
  void extend(int L);

  LatticeSpec lat_;
  Complex s2_;
  Real rho_;
  Complex base_s4_;
  Complex base_s6_;
  std::vector<Complex> sums_;  // sums_[2l]
};

SeriesValue weierstrass_series(SeriesKind kind, const Complex& z, const LatticeSpec& lat, int L);
SeriesValue weierstrass_series(SeriesKind kind, const Complex& z, const LatticeSpec& lat, int L,
                               const PrecisionContext& ctx);

Real isotropy_e2(const std::vector<Complex>& points, const LatticeSpec& lat);
Real isotropy_e2(const std::vector<Complex>& points);
Real isotropy_e2(const std::vector<Complex>& points, const LatticeSpec& lat, const PrecisionContext& ctx);

}  // namespace latsum
