#include <doctest.h>

#include "qmf/expression.hpp"

using namespace qmf;

TEST_CASE("parsing polynomials")
{
    const auto e2 = Polynomial::symbol("E2");
    const auto e4 = Polynomial::symbol("E4");
    CHECK(parse_polynomial("(E2^2 - E4)/12") == ratio(1, 12) * (e2 * e2 - e4));
    CHECK(parse_polynomial(" E2 * E4 ") == e2 * e4);
    CHECK(parse_polynomial("-E4 + E4") == Polynomial());
    CHECK(parse_polynomial("1/12") == Polynomial(ratio(1, 12)));
    CHECK(parse_polynomial("2*(E4+E4)") == Rational(4) * e4);
    CHECK(parse_polynomial("E4^0") == Polynomial(Rational(1)));
    CHECK(parse_polynomial("Delta12*E4").terms().size() == 1);
    CHECK(parse_polynomial("--E6") == Polynomial::symbol("E6"));
    CHECK(parse_polynomial("E4^3/1728 - E6^2/1728") == ratio(1, 1728) * (e4.pow(3) - Polynomial::symbol("E6").pow(2)));
}

TEST_CASE("parse errors")
{
    CHECK_THROWS_AS(parse_polynomial(""), DomainError);
    CHECK_THROWS_AS(parse_polynomial("E4 +"), DomainError);
    CHECK_THROWS_AS(parse_polynomial("(E4"), DomainError);
    CHECK_THROWS_AS(parse_polynomial("E4/E6"), DomainError);
    CHECK_THROWS_AS(parse_polynomial("E4/0"), DomainError);
    CHECK_THROWS_AS(parse_polynomial("E4^E2"), DomainError);
    CHECK_THROWS_AS(parse_polynomial("E4 $"), DomainError);
}

TEST_CASE("weights and printing")
{
    CHECK(symbol_weight("E2") == 2);
    CHECK(symbol_weight("E14") == 14);
    CHECK(symbol_weight("Delta26") == 26);
    CHECK_THROWS_AS(symbol_weight("E3"), DomainError);
    CHECK_THROWS_AS(symbol_weight("F4"), DomainError);
    const auto p = parse_polynomial("E2^2*E4");
    const auto& m = p.terms().begin()->first;
    CHECK(monomial_weight(m) == 8);
    CHECK(e2_degree(m) == 2);
    CHECK(parse_polynomial(to_string(parse_polynomial("(E2^2 - E4)/12 + 3*E6"))) ==
          parse_polynomial("(E2^2 - E4)/12 + 3*E6"));
    CHECK(parse_polynomial("7").is_constant());
    CHECK(parse_polynomial("7 + E4").constant_value() == 7);
}
