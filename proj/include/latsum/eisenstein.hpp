#pragma once

#include "latsum/lattice.hpp"
#include "latsum/numeric.hpp"

namespace latsum {

// Truncated absolutely convergent sum over a symmetric region of radius
// `radius` (index box, or the hexagon max(|m|,|n|,|m+n|) <= radius for
// the hexagonal lattice).
SumValue sum_absolute(const SumIndex& idx, const LatticeSpec& lat, int radius);
SumValue sum_absolute(const SumIndex& idx, const LatticeSpec& lat, int radius, const PrecisionContext& ctx);

// Iterated sum: outer n in [-N, N], inner m over all integers.
SumValue sum_eisenstein(const SumIndex& idx, const LatticeSpec& lat, int N = 60);
SumValue sum_eisenstein(const SumIndex& idx, const LatticeSpec& lat, int N, const PrecisionContext& ctx);

// Same series with the order swapped: outer m in [-N, N], inner n.
SumValue sum_eisenstein_reversed(const SumIndex& idx, const LatticeSpec& lat, int N = 60);

// sum over all integers x of conj(a + x b)^p (a + x b)^(-q), zero term skipped
Complex inner_line_sum(int p, int q, const Complex& a, const Complex& b);

// exact Bernoulli number B_n
const mpq_class& bernoulli(int n);

}  // namespace latsum
