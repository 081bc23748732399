#pragma once

// Exact arithmetic foundation: big integers/rationals (GMP), Bernoulli
// numbers, divisor sums, binomials and an exact dense linear solver.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace qmf {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when an operation is called outside its mathematical domain
/// (odd weight for an Eisenstein series, n = 0 for a Hecke operator, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A verdict would require more q-coefficients than the input carries.
class PrecisionError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Lowest-terms rational from a numerator/denominator pair. Use this (or
/// ratio) rather than the two-argument mpq_class constructor, which does not
/// canonicalize.
Rational make_rational(const Integer& num, const Integer& den);
Rational ratio(long num, long den);

/// "num/den" with the denominator always present ("240/1").
std::string to_string(const Rational& r);

/// Inverse of to_string; also accepts a bare integer ("-24").
Rational parse_rational(const std::string& text);

/// Rational power with a possibly negative exponent. base must be nonzero
/// when exp < 0.
Rational rational_pow(const Rational& base, std::int64_t exp);

Integer integer_pow(const Integer& base, unsigned long exp);

/// B_k for even k >= 2, with B_2 = 1/6, B_4 = -1/30 (so that -2k/B_k = 240
/// for k = 4).
Rational bernoulli(int k);

/// sigma_j(n) = sum of d^j over positive divisors d of n.
Integer sigma(unsigned j, std::uint64_t n);

/// sigma with a possibly negative exponent (sigma_{-1}(2) = 3/2).
Rational sigma_rational(std::int64_t j, std::uint64_t n);

/// Binomial coefficient; zero when r < 0 or r > n.
Integer binomial(std::int64_t n, std::int64_t r);

std::vector<std::uint64_t> divisors(std::uint64_t n);

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Solves A x = b exactly by Gauss-Jordan elimination with the first nonzero
/// pivot in each column. Free variables are set to zero, so the result is
/// deterministic when the solution space has positive dimension. Returns
/// nullopt when the system is inconsistent.
std::optional<std::vector<Rational>> solve_linear(const RationalMatrix& a,
                                                  const std::vector<Rational>& b);

/// Rank of A over Q.
std::size_t matrix_rank(const RationalMatrix& a);

bool is_perfect_square(const Integer& n);

} // namespace qmf
