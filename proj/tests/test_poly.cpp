#include "doctest.h"

#include "webworlds/errors.hpp"
#include "webworlds/numbers.hpp"
#include "webworlds/poly.hpp"

using namespace webworlds;

TEST_CASE("integer and rational parsing") {
    CHECK(parse_int("0") == 0);
    CHECK(parse_int("-17") == -17);
    CHECK(parse_int("123456789012345678901234567890") == Int("123456789012345678901234567890"));
    CHECK_THROWS_AS(parse_int(""), InvalidInput);
    CHECK_THROWS_AS(parse_int("12a"), InvalidInput);
    CHECK_THROWS_AS(parse_int("--3"), InvalidInput);

    CHECK(parse_rat("3/4") == Rat(3, 4));
    CHECK(parse_rat("-6/8") == Rat(-3, 4));
    CHECK(parse_rat("5") == Rat(5));
    CHECK_THROWS_AS(parse_rat("1/0"), InvalidInput);
    CHECK_THROWS_AS(parse_rat("1/"), InvalidInput);

    CHECK(int_string(Int(-42)) == "-42");
    CHECK(rat_string(Rat(1, 3)) == "1/3");
    CHECK(rat_string(Rat(2)) == "2/1");
    CHECK(rat_pretty(Rat(2)) == "2");
    CHECK(rat_pretty(Rat(-1, 2)) == "-1/2");
}

TEST_CASE("polynomial normal form") {
    Poly zero;
    CHECK(zero.is_zero());
    CHECK(zero.degree() == -1);
    CHECK(zero.coeff(0) == 0);
    CHECK(zero.coeff(5) == 0);

    Poly trimmed(std::vector<Int>{Int(1), Int(0), Int(0)});
    CHECK(trimmed.degree() == 0);
    CHECK(trimmed == Poly::constant(1));

    Poly p = Poly::monomial(3, 2); // 2x^3
    CHECK(p.degree() == 3);
    CHECK(p.coeff(3) == 2);
    CHECK(p.coeff(2) == 0);
    CHECK(Poly::x() == Poly::monomial(1));
}

TEST_CASE("polynomial arithmetic") {
    Poly x = Poly::x();
    Poly p = x + Poly::monomial(2, 2); // x + 2x^2
    Poly q = Poly::constant(1) - x;

    CHECK(p + q == Poly(std::vector<Int>{Int(1), Int(0), Int(2)}));
    CHECK(p - p == Poly());
    CHECK(p * Poly() == Poly());
    CHECK(p * Poly::constant(1) == p);
    CHECK(x * x == Poly::monomial(2));
    CHECK((x + Poly::constant(1)) * (x - Poly::constant(1)) ==
          Poly(std::vector<Int>{Int(-1), Int(0), Int(1)}));
    CHECK(p * Int(3) == Poly(std::vector<Int>{Int(0), Int(3), Int(6)}));
    CHECK(-p == Poly(std::vector<Int>{Int(0), Int(-1), Int(-2)}));
}

TEST_CASE("coefficient lists") {
    Poly p = Poly::x() + Poly::monomial(2, 2);
    CHECK(coeff_list(p) == "0,1,2");
    CHECK(coeff_list(Poly()) == "0");
    CHECK(poly_from_coeff_list("0,1,2") == p);
    CHECK(poly_from_coeff_list("0, 1, 2") == p);
    CHECK(poly_from_coeff_list("0,1,2,0,0") == p); // trailing zeros trim
    CHECK(poly_from_coeff_list("0") == Poly());
    CHECK_THROWS_AS(poly_from_coeff_list(""), InvalidInput);
    CHECK_THROWS_AS(poly_from_coeff_list("1,,2"), InvalidInput);
    CHECK_THROWS_AS(poly_from_coeff_list("1,x"), InvalidInput);
}

TEST_CASE("pretty printing") {
    CHECK(poly_pretty(Poly()) == "0");
    CHECK(poly_pretty(Poly::constant(3)) == "3");
    CHECK(poly_pretty(Poly::x()) == "x");
    CHECK(poly_pretty(Poly::x() + Poly::monomial(2, 2)) == "x+2x^2");
    CHECK(poly_pretty(Poly::constant(-1) + Poly::monomial(2, -2)) == "-1-2x^2");
    CHECK(poly_pretty(Poly::monomial(4)) == "x^4");
}
