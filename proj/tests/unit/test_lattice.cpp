#include "doctest.h"
#include "latsum/errors.hpp"
#include "latsum/lattice.hpp"

using namespace latsum;

TEST_SUITE("lattice") {
  TEST_CASE("factories") {
    PrecisionGuard g(PrecisionContext{50, 10});
    LatticeSpec sq = make_square();
    CHECK(sq.symmetry_order == 4);
    CHECK(sq.family == LatticeFamily::RECTANGULAR);
    CHECK(sq.omega1 == Real(1));
    LatticeSpec hex = make_hexagonal();
    CHECK(hex.symmetry_order == 6);
    CHECK(hex.family == LatticeFamily::RHOMBIC);
    // unit cell area
    CHECK(abs(hex.omega1 * hex.omega1 * hex.tau.im - Real(1)) < Real("1e-55"));
    LatticeSpec r = make_rect(sqrt(Real(2)));
    CHECK(r.symmetry_order == 2);
    CHECK(abs(r.omega1 * r.omega1 * r.tau.im - Real(1)) < Real("1e-55"));
    CHECK(make_rhombic(Real(1)).symmetry_order == 4);
    CHECK(make_rect(Real(1)).symmetry_order == 4);
    CHECK(make_general(Complex(Real(mpq_class(1, 2)), sqrt(Real(3)) / Real(2))).symmetry_order == 6);
    CHECK_THROWS_AS(make_general(Complex(Real(0), Real(-1))), DomainError);
    CHECK_THROWS_AS(make_rect(Real(0)), DomainError);
  }

  TEST_CASE("parsing") {
    PrecisionGuard g(200);
    CHECK(parse_lattice("square").symmetry_order == 4);
    CHECK(parse_lattice("hex").symmetry_order == 6);
    CHECK(parse_lattice("hexagonal").symmetry_order == 6);
    LatticeSpec r = parse_lattice("rect:sqrt(2)");
    CHECK(abs(r.tau.im - sqrt(Real(2))) < Real("1e-55"));
    LatticeSpec t = parse_lattice("tau:0.1,1.3");
    CHECK(t.family == LatticeFamily::GENERAL);
    CHECK(abs(t.tau.re - Real("0.1")) < Real("1e-55"));
    CHECK_THROWS_AS(parse_lattice("cubic"), PreconditionError);
    CHECK_THROWS_AS(parse_lattice("tau:1"), PreconditionError);
  }

  TEST_CASE("symmetry rule") {
    CHECK(sum_vanishes_by_symmetry(1, 4, 2));
    CHECK_FALSE(sum_vanishes_by_symmetry(1, 5, 2));
    CHECK(sum_vanishes_by_symmetry(0, 6, 4));
    CHECK_FALSE(sum_vanishes_by_symmetry(0, 8, 4));
    CHECK(sum_vanishes_by_symmetry(0, 4, 6));
    CHECK_FALSE(sum_vanishes_by_symmetry(0, 6, 6));
    CHECK_FALSE(sum_vanishes_by_symmetry(1, 5, 6));
    PrecisionGuard g(200);
    CHECK(symmetry_vanishes({1, 4}, make_hexagonal()));
    CHECK_THROWS_AS(symmetry_vanishes({2, 4}, make_square()), PreconditionError);
  }

  TEST_CASE("method names") {
    CHECK(std::string(method_name(Method::EISENSTEIN_ORACLE)) == "oracle");
    CHECK(std::string(method_name(Method::TRIG_SERIES)) == "fast");
    CHECK(std::string(method_name(Method::RECURRENCE)) == "recurrence");
    CHECK(std::string(method_name(Method::SYMBOLIC_ELLIPTIC)) == "symbolic");
  }
}
