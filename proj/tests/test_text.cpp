#include "doctest.h"

#include "oracle.hpp"
#include "tamedeg/text.hpp"

using namespace tamedeg;

TEST_SUITE("text") {

TEST_CASE("rationals")
{
    CHECK(rational_to_string(Rational(6, 4)) == "3/2");
    CHECK(rational_to_string(Rational(-4, 2)) == "-2");
    CHECK(parse_rational("-10/4") == Rational(-5, 2));
    CHECK(parse_rational("7") == 7);
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("1.5"));
    CHECK_THROWS(parse_rational(""));
}

TEST_CASE("polynomial printing")
{
    Polynomial f(3);
    f.add_term(Monomial({2, 1, 0}), 1);
    f.add_term(Monomial({0, 0, 1}), Rational(3, 2));
    f.add_term(Monomial::one(3), -1);
    CHECK(to_string(f) == "x1^2*x2 + 3/2*x3 - 1");
    CHECK(to_string(Polynomial(2)) == "0");
    CHECK(to_string(-Polynomial::variable(2, 1)) == "-x2");
}

TEST_CASE("polynomial parsing")
{
    CHECK(parse_polynomial("x1^2*x2 + 3/2*x3 - 1", 3).size() == 3);
    CHECK(parse_polynomial("x2*x1", 2) == parse_polynomial("x1*x2", 2));
    CHECK(parse_polynomial("x1 + x1", 1) == parse_polynomial("2*x1", 1));
    CHECK_THROWS(parse_polynomial("x4", 3));
    CHECK_THROWS(parse_polynomial("x1 +", 3));
    CHECK_THROWS(parse_polynomial("y", 3));
}

TEST_CASE("property: print then parse is the identity")
{
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 300; ++trial) {
        auto f = oracle::random_poly(rng, 3, 5, 6);
        f *= Rational(1, 1 + trial % 7);
        CHECK(parse_polynomial(to_string(f), 3) == f);
    }
}

}
