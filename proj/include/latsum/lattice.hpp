#pragma once

#include <optional>
#include <string>

#include "latsum/numeric.hpp"

namespace latsum {

enum class LatticeFamily { RECTANGULAR, RHOMBIC, GENERAL };

struct LatticeSpec {
  Complex tau;
  Real omega1;
  LatticeFamily family = LatticeFamily::GENERAL;
  int symmetry_order = 2;
  // x for tau = i x or tau = (1 + i x)/2
  std::optional<Real> x;
  std::string name;
};

enum class LatticeKind { SQUARE, HEXAGONAL, RECT, RHOMBIC, GENERAL };

LatticeSpec make_lattice(LatticeKind kind, const Real& x = Real(1), const Complex& tau = Complex());
LatticeSpec make_square();
LatticeSpec make_hexagonal();
LatticeSpec make_rect(const Real& x);
LatticeSpec make_rhombic(const Real& x);
LatticeSpec make_general(const Complex& tau);

// square | hex | rect:<x> | rhombic:<x> | tau:<re>,<im>
// numbers may be closed forms such as sqrt(2)
LatticeSpec parse_lattice(const std::string& text);

struct SumIndex {
  int p = 0;
  int q = 2;
  int r() const { return q - p; }
};

enum class Method { EISENSTEIN_ORACLE, TRIG_SERIES, RECURRENCE, SYMBOLIC_ELLIPTIC };

const char* method_name(Method m);

struct SumValue {
  Complex value;
  Method method = Method::EISENSTEIN_ORACLE;
  Real precision_estimate;
};

// true iff S_q^(p) vanishes by rotational symmetry; requires q - p >= 3
bool symmetry_vanishes(const SumIndex& idx, const LatticeSpec& lat);

// lattice fixed by the rotation w -> e^{2 pi i/order} w with order 2,4,6
bool sum_vanishes_by_symmetry(int p, int q, int order);

}  // namespace latsum
