#include "doctest.h"
#include "latsum/errors.hpp"
#include "latsum/recurrence.hpp"
#include "latsum/trig_series.hpp"
#include "oracles.hpp"

using namespace latsum;

TEST_SUITE("recurrence") {
  TEST_CASE("S4 of the square lattice and S6 of the hexagonal one") {
    PrecisionGuard g(PrecisionContext{50, 10});
    Real pi = Real::pi();
    Real g14 = oracle::gamma_stirling(Real(mpq_class(1, 4)));
    Real g13 = oracle::gamma_stirling(Real(mpq_class(1, 3)));
    ClassicBase sq = classic_base(make_square());
    CHECK(close_rel(sq.S4, pow(g14, 8L) / (Real(960) * pi * pi), Real("1e-45")));
    CHECK(sq.S6.is_zero());
    ClassicBase hex = classic_base(make_hexagonal());
    CHECK(hex.S4.is_zero());
    CHECK(close_rel(hex.S6, Real(3) * sqrt(Real(3)) * pow(g13, 18L) / (Real(71680) * pow(pi, 6L)), Real("1e-45")));
  }

  TEST_CASE("classic sums against the fast series") {
    PrecisionGuard g(PrecisionContext{50, 10});
    for (const LatticeSpec& lat : {make_square(), make_hexagonal(), make_rect(Real("1.7")), make_rhombic(Real("2.2"))}) {
      auto S = classic_sums(lat, 9);
      for (int l = 2; l <= 9; ++l)
        CHECK_MESSAGE(close_rel(S[2 * l], sum_fast({0, 2 * l}, lat).value, Real("1e-45")), lat.name, " ", 2 * l);
    }
  }

  TEST_CASE("S_q^(1) against the fast series") {
    PrecisionGuard g(PrecisionContext{50, 10});
    for (const LatticeSpec& lat : {make_square(), make_hexagonal(), make_rect(Real("1.7")), make_rhombic(Real("2.2"))}) {
      auto s1 = s1_sums(lat, 6);
      for (int m = 1; m <= 6; ++m) {
        int q = 2 * m + 3;
        CHECK_MESSAGE(close_rel(s1[q], sum_fast({1, q}, lat).value, Real("1e-40")), lat.name, " ", q);
      }
    }
  }

  TEST_CASE("linear constants") {
    PrecisionGuard g(200);
    S1LinearConstants c = s1_linear_constants(Real(3));
    CHECK(c.c1.is_zero());
    CHECK(c.c == Real(-30));
  }

  TEST_CASE("dispatcher") {
    PrecisionGuard g(PrecisionContext{40, 10});
    CHECK(sum_recurrence({0, 5}, make_square()).value.is_zero());
    CHECK(sum_recurrence({1, 6}, make_square()).value.is_zero());
    CHECK(close_rel(sum_recurrence({0, 8}, make_square()).value, sum_fast({0, 8}, make_square()).value, Real("1e-35")));
    CHECK_THROWS_AS(sum_recurrence({2, 6}, make_square()), PreconditionError);
    CHECK_THROWS_AS(sum_recurrence({0, 2}, make_square()), PreconditionError);
    CHECK_THROWS_AS(sum_recurrence({1, 3}, make_square()), PreconditionError);
  }

  TEST_CASE("general lattices fall back to direct summation") {
    PrecisionGuard g(PrecisionContext{20, 10});
    LatticeSpec gen = make_general(Complex(Real("0.2"), Real("1.3")));
    ClassicBase b = classic_base(gen);
    Complex want = sum_fast({0, 4}, gen).value;
    CHECK(abs(want.im) > Real("0.01"));
    CHECK(abs(b.S4 - want) < b.precision_estimate * Real(10));
  }
}
