#pragma once

// Polynomials in named forms (E2, E4, E6, and catalog names such as Delta12)
// with rational coefficients, and a small parser:
//
//   expr   := term (('+' | '-') term)*
//   term   := factor (('*' | '/') factor)*      '/' only by a nonzero constant
//   factor := ('+' | '-') factor | power
//   power  := atom ('^' integer)?
//   atom   := integer | symbol | '(' expr ')'
//
// Whitespace is ignored. "1/12" parses as 1 divided by 12.

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qmf/exactmath.hpp"

namespace qmf {

/// Symbol -> exponent; exponents are always positive.
using Monomial = std::map<std::string, unsigned>;

class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(const Rational& c);
    static Polynomial symbol(const std::string& name);

    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_constant() const;
    /// Constant term (zero if absent).
    Rational constant_value() const;

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial operator-() const;
    Polynomial pow(unsigned e) const;

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& c, const Polynomial& a);
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void add_term(const Monomial& m, const Rational& c);
    std::map<Monomial, Rational> terms_;
};

Polynomial parse_polynomial(std::string_view text);

std::string to_string(const Monomial& m);
std::string to_string(const Polynomial& p);

/// Weight of a symbol: E<k> -> k, Delta<k> -> k. Throws for unknown names.
int symbol_weight(const std::string& name);

int monomial_weight(const Monomial& m);

/// Exponent of E2 in the monomial.
unsigned e2_degree(const Monomial& m);

} // namespace qmf
