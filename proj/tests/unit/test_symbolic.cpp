#include "doctest.h"
#include "latsum/errors.hpp"
#include "latsum/symbolic.hpp"
#include "latsum/trig_series.hpp"
#include "oracles.hpp"

using namespace latsum;

TEST_SUITE("symbolic") {
  TEST_CASE("Gaussian rationals") {
    GaussianRational a(mpq_class(1, 2), mpq_class(3, 4));
    GaussianRational b(2, -1);
    GaussianRational c = a * b;
    CHECK(c.re == mpq_class(1, 2) * 2 + mpq_class(3, 4));
    CHECK(c.im == mpq_class(-1, 2) + mpq_class(3, 2));
    CHECK((a - a).is_zero());
    CHECK(GaussianRational(mpq_class(3, 4)).to_string() == "3/4");
    CHECK(GaussianRational(0, mpq_class(3, 4)).to_string() == "3/4i");
  }

  TEST_CASE("expressions round trip through text") {
    SymExpr e = SymExpr::k() * SymExpr::K() * SymExpr::K() - SymExpr::E().scaled(GaussianRational(0, 5)) +
                SymExpr::Kp() * SymExpr::pi_pow(-1);
    SymExpr back = SymExpr::parse(e.to_string());
    CHECK(back == e);
    CHECK(SymExpr::parse("0").is_zero());
    CHECK_THROWS(SymExpr::parse("K^"));
  }

  TEST_CASE("canonical form expands 1-k^2") {
    SymExpr a = canonicalize(SymExpr::one_minus_k2() * SymExpr::K());
    SymExpr b = SymExpr::K() - SymExpr::k() * SymExpr::k() * SymExpr::K();
    CHECK(a == b);
    SymExpr c = SymExpr::monomial({0, -1, 1, 0, 0, 0}) * (SymExpr(1) - SymExpr::k() * SymExpr::k());
    CHECK(canonicalize(c) == SymExpr::K());
    CHECK_THROWS_AS(canonicalize(SymExpr::monomial({0, -1, 1, 0, 0, 0})), InternalConsistencyError);
  }

  TEST_CASE("d/dk against finite differences") {
    PrecisionGuard g(PrecisionContext{50, 10});
    SymExpr e = SymExpr::k() * pow(SymExpr::K(), 3) * SymExpr::E() + pow(SymExpr::E(), 2);
    SymExpr d = differentiate_k(e);
    Real k("0.37"), h("1e-18");
    auto at = [&](const Real& kk) {
      EllipticModulus m(kk);
      return eval_sym(e, SymValues{kk, ellip_k(m), Real(0), ellip_e(m)}).re;
    };
    Real fd = (at(k + h) - at(k - h)) / (Real(2) * h);
    EllipticModulus m(k);
    Real exact = eval_sym(d, SymValues{k, ellip_k(m), Real(0), ellip_e(m)}).re;
    CHECK(close_rel(exact, fd, Real("1e-30")));
    CHECK_THROWS_AS(differentiate_k(SymExpr::Kp()), PreconditionError);
  }

  TEST_CASE("modular forms evaluate to the classic sums") {
    PrecisionGuard g(PrecisionContext{50, 10});
    for (const char* xs : {"1", "1.5", "2.2"}) {
      Real x(xs);
      EllipticModulus m = inverse_modulus_ratio(x);
      for (int r = 4; r <= 12; r += 2) {
        Complex v = eval_sym(v_modular(r, Family::IX), m);
        Complex want = sum_fast({0, r}, make_rect(x)).value * pow(x, static_cast<long>(-r / 2)) ;
        CHECK_MESSAGE(close_rel(v, want, Real("1e-45")), xs, " ", r);
      }
    }
    CHECK(v_modular(7, Family::IX).is_zero());
  }

  TEST_CASE("assembled sums against the fast series") {
    PrecisionGuard g(PrecisionContext{50, 10});
    for (const char* xs : {"1", "1.4142135623730950488", "1.7320508075688772935", "0.8"}) {
      Real x(xs);
      for (int p = 0; p <= 4; ++p) {
        for (int q = p + 2; q <= p + 6; q += 2) {
          Complex a = sum_symbolic({p, q}, make_rect(x)).value;
          CHECK_MESSAGE(close_rel(a, sum_fast({p, q}, make_rect(x)).value, Real("1e-40")), xs, " ", p, ",", q);
          Complex b = sum_symbolic({p, q}, make_rhombic(x)).value;
          CHECK(close_rel(b, sum_fast({p, q}, make_rhombic(x)).value, Real("1e-40")));
        }
      }
    }
  }

  TEST_CASE("S_4^(2)(i) is pi/3") {
    PrecisionGuard g(PrecisionContext{50, 10});
    SymExpr f = assemble_sum({2, 4}, Family::IX);
    CHECK(close_rel(eval_sym(f, EllipticModulus(Real(1) / sqrt(Real(2)))), Complex(Real::pi() / Real(3)), Real("1e-50")));
  }

  TEST_CASE("assembled sums are real polynomials") {
    for (int p = 0; p <= 6; ++p) {
      SymExpr f = assemble_sum({p, p + 2}, Family::HALF);
      CHECK(f.imag_part().is_zero());
      for (const auto& [m, c] : f.terms()) {
        CHECK(m.omk2 == 0);
        CHECK(m.k >= 0);
        CHECK(m.Kp <= p + 1);
      }
    }
  }

  TEST_CASE("degree bookkeeping") {
    int lo = 0, hi = 0;
    CHECK(k_degree_range(v_derived(2, 4, Family::IX), lo, hi));
    CHECK(lo >= 6);
    CHECK_FALSE(k_degree_range(SymExpr(), lo, hi));
  }

  TEST_CASE("derivative operator on K") {
    // D K = c (2i/pi) k (1-k^2) K^2 dK/dk = c (2i/pi) K^2 (E - (1-k^2) K)
    SymExpr d = apply_derivative_operator(SymExpr::K(), Family::IX);
    SymExpr want = canonicalize((pow(SymExpr::K(), 2) * SymExpr::E() - pow(SymExpr::K(), 3) * SymExpr::one_minus_k2()) *
                                SymExpr::pi_pow(-1).scaled(GaussianRational(0, 2)));
    CHECK(d == want);
    CHECK(apply_derivative_operator(SymExpr::K(), Family::HALF) == want.scaled(GaussianRational(2)));
  }

  TEST_CASE("lattice series normalization") {
    // W(1) = -D V_r / r
    for (Family f : {Family::IX, Family::HALF}) {
      SymExpr w = lattice_series(1, 4, f);
      SymExpr dv = canonicalize(apply_derivative_operator(v_modular(4, f), f));
      CHECK(w == dv.scaled(GaussianRational(mpq_class(-1, 4))));
    }
  }
}
