#include "doctest.h"
#include "latsum/eisenstein.hpp"
#include "latsum/errors.hpp"
#include "latsum/lattice.hpp"
#include "latsum/trig_series.hpp"
#include "oracles.hpp"

using namespace latsum;

TEST_SUITE("eisenstein") {
  TEST_CASE("Bernoulli numbers") {
    auto ref = oracle::bernoulli_table(30);
    for (int n = 0; n <= 30; ++n) CHECK_MESSAGE(bernoulli(n) == ref[n], n);
    CHECK(bernoulli(12) == mpq_class(-691, 2730));
  }

  TEST_CASE("inner line sum is the csc^2 row") {
    PrecisionGuard g(PrecisionContext{50, 10});
    Complex tau(Real(0), sqrt(Real(2)));
    for (int n = 1; n <= 3; ++n) {
      Complex a = tau * Real(n);
      CHECK(close_rel(inner_line_sum(0, 2, a, Complex(1)), oracle::pi2_csc2(a), Real("1e-50")));
    }
    // a = 0 skips the zero term: 2 zeta(4)
    CHECK(close_rel(inner_line_sum(0, 4, Complex(), Complex(1)), Complex(Real(2) * zeta_ui(4)), Real("1e-50")));
  }

  TEST_CASE("S2 in Eisenstein order") {
    PrecisionGuard g(PrecisionContext{50, 10});
    CHECK(abs(sum_eisenstein({0, 2}, make_square()).value.re - Real::pi()) < Real("1e-45"));
    CHECK(abs(sum_eisenstein({0, 2}, make_hexagonal()).value.re - Real::pi()) < Real("1e-45"));
  }

  TEST_CASE("iterated sum matches the fast series") {
    PrecisionGuard g(PrecisionContext{40, 10});
    for (const LatticeSpec& lat : {make_square(), make_rect(Real(3) / Real(2)), make_rhombic(Real(2))}) {
      for (SumIndex idx : {SumIndex{1, 3}, SumIndex{2, 4}, SumIndex{0, 6}, SumIndex{3, 7}, SumIndex{2, 8}}) {
        SumValue a = sum_eisenstein(idx, lat);
        SumValue b = sum_fast(idx, lat);
        CHECK_MESSAGE(close_rel(a.value, b.value, Real("1e-35")), lat.name, " ", idx.p, ",", idx.q);
      }
    }
  }

  TEST_CASE("order reversal shifts S2 on a stretched lattice") {
    PrecisionGuard g(PrecisionContext{40, 10});
    LatticeSpec r = make_rect(sqrt(Real(2)));
    Complex a = sum_eisenstein({0, 2}, r).value;
    Complex b = sum_eisenstein_reversed({0, 2}, r).value;
    // the two orders differ by 2 pi after normalization
    CHECK(close_rel(a.re - b.re, Real(2) * Real::pi(), Real("1e-35")));
    // absolutely convergent sums do not care
    CHECK(close_rel(sum_eisenstein({0, 4}, r).value, sum_eisenstein_reversed({0, 4}, r).value, Real("1e-35")));
  }

  TEST_CASE("absolute truncation converges") {
    PrecisionGuard g(PrecisionContext{20, 10});
    SumValue v = sum_absolute({0, 4}, make_square(), 100);
    CHECK(abs(v.value.re - sum_fast({0, 4}, make_square()).value.re) < v.precision_estimate);
    CHECK(sum_absolute({1, 4}, make_square(), 10).value.is_zero());
    CHECK_THROWS_AS(sum_absolute({0, 2}, make_square(), 50), PreconditionError);
    CHECK_THROWS_AS(sum_absolute({0, 4}, make_square(), 5), PreconditionError);
  }

  TEST_CASE("preconditions") {
    PrecisionGuard g(200);
    CHECK_THROWS_AS(sum_eisenstein({0, 2}, make_square(), 10), PreconditionError);
    CHECK_THROWS_AS(sum_eisenstein({2, 3}, make_square()), PreconditionError);
  }
}
