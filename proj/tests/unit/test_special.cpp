#include "doctest.h"
#include "latsum/errors.hpp"
#include "latsum/special.hpp"
#include "oracles.hpp"

using namespace latsum;

TEST_SUITE("special") {
  TEST_CASE("gamma against the Stirling series") {
    PrecisionGuard g(PrecisionContext{50, 10});
    for (const char* s : {"0.125", "0.25", "0.3333", "0.375", "0.5", "1.7", "6.25"}) {
      Real x(s);
      CHECK_MESSAGE(close_rel(gamma(x), oracle::gamma_stirling(x), Real("1e-50")), s);
    }
    CHECK(close_rel(gamma(Real(mpq_class(1, 2))), sqrt(Real::pi()), Real("1e-55")));
    CHECK(gamma(Real(5)) == Real(24));
    CHECK_THROWS_AS(gamma(Real(0)), DomainError);
    CHECK_THROWS_AS(gamma(Real(-3)), DomainError);
  }

  TEST_CASE("K and E against the hypergeometric series") {
    PrecisionGuard g(PrecisionContext{50, 10});
    for (const char* s : {"0.05", "0.3", "0.45"}) {
      EllipticModulus m{Real(s)};
      CHECK(close_rel(ellip_k(m), oracle::K_series(Real(s)), Real("1e-50")));
      CHECK(close_rel(ellip_e(m), oracle::E_series(Real(s)), Real("1e-50")));
      EllipticKE ke = ellip_ke(m);
      CHECK(close_rel(ke.K, ellip_k(m), Real("1e-55")));
    }
  }

  TEST_CASE("K at the lemniscatic modulus") {
    PrecisionGuard g(PrecisionContext{50, 10});
    Real k = Real(1) / sqrt(Real(2));
    Real want = pow(gamma(Real(mpq_class(1, 4))), 2L) / (Real(4) * sqrt(Real::pi()));
    CHECK(close_rel(ellip_k(EllipticModulus(k)), want, Real("1e-50")));
  }

  TEST_CASE("Legendre relation across (0,1)") {
    PrecisionGuard g(PrecisionContext{50, 10});
    for (int i = 1; i < 20; ++i) {
      EllipticModulus m{Real(i) / Real(20)};
      CHECK(abs(legendre_residual(m)) < Real("1e-45"));
    }
  }

  TEST_CASE("modulus ratio against theta functions") {
    PrecisionGuard g(PrecisionContext{50, 10});
    for (const char* s : {"0.6", "1", "1.41421356", "2.5", "4"}) {
      Real x(s);
      Real k = oracle::modulus_from_ratio(x);
      EllipticModulus m{k};
      CHECK_MESSAGE(close_rel(modulus_ratio(m), x, Real("1e-45")), s);
      CHECK(close_rel(ellip_k(m), oracle::K_from_ratio(x), Real("1e-45")));
      EllipticModulus back = inverse_modulus_ratio(x);
      CHECK(close_rel(back.k(), k, Real("1e-45")));
    }
  }

  TEST_CASE("dx/dk against a central difference") {
    PrecisionGuard g(PrecisionContext{50, 10});
    for (const char* s : {"0.2", "0.5", "0.8"}) {
      Real k(s);
      Real h("1e-15");
      Real fd = (modulus_ratio(EllipticModulus(k + h)) - modulus_ratio(EllipticModulus(k - h))) / (Real(2) * h);
      CHECK(close_rel(dx_dk(EllipticModulus(k)), fd, Real("1e-25")));
    }
  }

  TEST_CASE("modulus validation") {
    PrecisionGuard g(200);
    CHECK_THROWS_AS(EllipticModulus(Real(0)), DomainError);
    CHECK_THROWS_AS(EllipticModulus(Real(1)), DomainError);
    CHECK_THROWS_AS(EllipticModulus(Real("1.5")), DomainError);
    CHECK_THROWS(EllipticModulus(Real("0.6"), Real("0.7")));
    EllipticModulus m(Real("0.6"), Real("0.8"));
    CHECK(m.complement().k() == Real("0.8"));
    CHECK_THROWS(inverse_modulus_ratio(Real(0)));
    CHECK_THROWS(inverse_modulus_ratio(Real(-1)));
  }

  TEST_CASE("context overloads give the same digits") {
    Real a, b;
    {
      PrecisionGuard g(PrecisionContext{40, 10});
      a = ellip_k(EllipticModulus(Real("0.3")));
    }
    b = ellip_k(EllipticModulus(Real("0.3")), PrecisionContext{40, 10});
    CHECK(a.to_string(40) == b.to_string(40));
  }
}
