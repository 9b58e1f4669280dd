#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "latsum/closed_form.hpp"
#include "latsum/numeric.hpp"
#include "latsum/special.hpp"
#include "latsum/symbolic.hpp"

namespace latsum {

// modulus k_r with K(k_r')/K(k_r) = sqrt(r)
struct SingularModulusRecord {
  mpq_class r;
  ClosedForm k_form;
  ClosedForm kp_form;
  ClosedForm K_form;
  ClosedForm alpha_form;
  Real k;
  Real k_prime;
  Real K;        // from the gamma closed form
  Real K_prime;  // sqrt(r) K
  Real alpha;
  Real E;
  Real E_prime;

  EllipticModulus modulus() const { return EllipticModulus(k, k_prime); }
  std::string r_text() const { return r.get_str(); }
};

const std::vector<mpq_class>& supported_singular_r();
SingularModulusRecord singular_modulus(const mpq_class& r);
SingularModulusRecord singular_modulus(const mpq_class& r, const PrecisionContext& ctx);

struct ExactSum {
  Real value;
  std::string provenance;
};

// S_q^(p) at tau = i sqrt(r) (IX) or (1 + i sqrt(r))/2 (HALF) evaluated
// with the gamma closed forms
ExactSum exact_sum(const SumIndex& idx, Family fam, const mpq_class& r);
ExactSum exact_sum(const SumIndex& idx, Family fam, const mpq_class& r, const PrecisionContext& ctx);

}  // namespace latsum
