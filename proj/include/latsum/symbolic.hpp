#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <tuple>

#include "latsum/lattice.hpp"
#include "latsum/numeric.hpp"
#include "latsum/special.hpp"

namespace latsum {

struct GaussianRational {
  mpq_class re;
  mpq_class im;

  GaussianRational() = default;
  GaussianRational(mpq_class r, mpq_class i = 0) : re(std::move(r)), im(std::move(i)) {}  // NOLINT
  GaussianRational(long r) : re(r), im(0) {}                                             // NOLINT

  bool is_zero() const { return re == 0 && im == 0; }
  GaussianRational conj() const { return {re, -im}; }
  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational operator-() const { return {-re, -im}; }
  std::string to_string() const;
};

GaussianRational operator+(GaussianRational a, const GaussianRational& b);
GaussianRational operator-(GaussianRational a, const GaussianRational& b);
GaussianRational operator*(GaussianRational a, const GaussianRational& b);
bool operator==(const GaussianRational& a, const GaussianRational& b);

// k^k (1-k^2)^omk2 K^K K'^Kp E^E pi^pi
struct Monomial {
  int k = 0;
  int omk2 = 0;
  int K = 0;
  int Kp = 0;
  int E = 0;
  int pi = 0;

  auto key() const { return std::tie(Kp, pi, K, E, omk2, k); }
  bool operator<(const Monomial& o) const { return key() < o.key(); }
  bool operator==(const Monomial& o) const { return key() == o.key(); }
  Monomial operator*(const Monomial& o) const;
};

enum class Family { IX, HALF };

const char* family_name(Family f);

class SymExpr {
 public:
  using Terms = std::map<Monomial, GaussianRational>;

  SymExpr() = default;
  SymExpr(const GaussianRational& c);  // NOLINT
  SymExpr(long c) : SymExpr(GaussianRational(c)) {}  // NOLINT
  static SymExpr monomial(const Monomial& m, const GaussianRational& c = GaussianRational(1));
  static SymExpr k() { return monomial({1, 0, 0, 0, 0, 0}); }
  static SymExpr K() { return monomial({0, 0, 1, 0, 0, 0}); }
  static SymExpr Kp() { return monomial({0, 0, 0, 1, 0, 0}); }
  static SymExpr E() { return monomial({0, 0, 0, 0, 1, 0}); }
  static SymExpr pi_pow(int e) { return monomial({0, 0, 0, 0, 0, e}); }
  static SymExpr one_minus_k2() { return monomial({0, 1, 0, 0, 0, 0}); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  SymExpr& operator+=(const SymExpr& o);
  SymExpr& operator-=(const SymExpr& o);
  SymExpr operator-() const;
  SymExpr scaled(const GaussianRational& c) const;

  SymExpr real_part() const;
  SymExpr imag_part() const;
  SymExpr conj() const { return real_part() - imag_part().scaled(GaussianRational(0, 1)); }

  std::string to_string() const;
  static SymExpr parse(const std::string& text);

  friend SymExpr operator+(SymExpr a, const SymExpr& b) { return a += b; }
  friend SymExpr operator-(SymExpr a, const SymExpr& b) { return a -= b; }
  friend SymExpr operator*(const SymExpr& a, const SymExpr& b);
  friend bool operator==(const SymExpr& a, const SymExpr& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const SymExpr& a, const SymExpr& b) { return !(a == b); }

  void add_term(const Monomial& m, const GaussianRational& c);

 private:
  Terms terms_;
};

SymExpr pow(const SymExpr& e, int n);

// expand every (1-k^2)^b; negative b is removed by exact division
SymExpr canonicalize(const SymExpr& e);

// d/dk with dK/dk = E/(k(1-k^2)) - K/k and dE/dk = (E-K)/k
SymExpr differentiate_k(const SymExpr& e);

// d/dtau expressed in k: c (2i/pi) k (1-k^2) K^2 d/dk, c = 1 for IX, 2 for HALF
SymExpr apply_derivative_operator(const SymExpr& e, Family fam = Family::IX);

// V_r = sum' (m + n tau)^(-r) for even r >= 2 as a polynomial in k, K, E
SymExpr v_base(int r, Family fam);
// V_{2l} through the Weierstrass recurrence, l >= 4
SymExpr v_classic(int l, Family fam);
// V_r for any r >= 2, zero for odd r
SymExpr v_modular(int r, Family fam);
// d^s V_r / dtau^s, cached
SymExpr v_derived(int s, int r, Family fam);
// sum over n of n^t sum over m of (m + n tau)^(-(r+t))
SymExpr lattice_series(int t, int r, Family fam);

// S_q^(p) with tau = i K'/K or (1 + i K'/K)/2
SymExpr assemble_sum(const SumIndex& idx, Family fam);

struct SymValues {
  Real k;
  Real K;
  Real Kp;
  Real E;
};

SymValues sym_values(const EllipticModulus& m);
Complex eval_sym(const SymExpr& e, const SymValues& v);
Complex eval_sym(const SymExpr& e, const EllipticModulus& m);
Complex eval_sym(const SymExpr& e, const EllipticModulus& m, const PrecisionContext& ctx);

// assemble_sum evaluated at the modulus of a rectangular or rhombic lattice
SumValue sum_symbolic(const SumIndex& idx, const LatticeSpec& lat);

// K exponent range over all terms; returns false for the zero expression
bool k_degree_range(const SymExpr& e, int& lo, int& hi);

}  // namespace latsum
