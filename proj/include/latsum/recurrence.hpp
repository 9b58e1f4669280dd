#pragma once

#include <vector>

#include "latsum/lattice.hpp"
#include "latsum/numeric.hpp"

namespace latsum {

// complex only for general tau
struct ClassicBase {
  Complex S4;
  Complex S6;
  Real precision_estimate;
};

// S4, S6 from elliptic integrals for tau = i x and tau = (1 + i x)/2;
// direct summation otherwise.
ClassicBase classic_base(const LatticeSpec& lat);
ClassicBase classic_base(const LatticeSpec& lat, const PrecisionContext& ctx);

// result[2l] = S_{2l} for 2 <= l <= L; other slots are zero
std::vector<Complex> classic_sums(const LatticeSpec& lat, int L);
std::vector<Complex> classic_sums(const LatticeSpec& lat, int L, const PrecisionContext& ctx);
std::vector<Complex> classic_sums_from(const ClassicBase& base, int L);

// result[2m+3] = S_{2m+3}^(1) for 1 <= m <= M; even slots stay zero
std::vector<Complex> s1_sums(const LatticeSpec& lat, int M);
std::vector<Complex> s1_sums(const LatticeSpec& lat, int M, const PrecisionContext& ctx);
// same, from classic sums up to 2M+4 and S2
std::vector<Complex> s1_sums_from(const std::vector<Complex>& classic, const Complex& s2, int M, bool s2_is_pi);

struct S1LinearConstants {
  Real c1;
  Real c;
};
// constants fixed by the vanishing linear term: c1 = 0, c = -10 S4
S1LinearConstants s1_linear_constants(const Real& S4);

// S_q^(p) for p in {0, 1} by recurrence; throws for other p
SumValue sum_recurrence(const SumIndex& idx, const LatticeSpec& lat);

}  // namespace latsum
