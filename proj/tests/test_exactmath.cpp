#include <doctest.h>

#include <numeric>

#include "oracles.hpp"
#include "qmf/exactmath.hpp"

using namespace qmf;

TEST_CASE("bernoulli numbers")
{
    CHECK(bernoulli(2) == ratio(1, 6));
    CHECK(bernoulli(4) == ratio(-1, 30));
    CHECK(bernoulli(12) == ratio(-691, 2730));
    CHECK(bernoulli(14) == ratio(7, 6));
    // Sign convention ties -2k/B_k to the E4 multiplier.
    CHECK(-8 / bernoulli(4) == 240);
    CHECK_THROWS_AS(bernoulli(3), DomainError);
    CHECK_THROWS_AS(bernoulli(0), DomainError);
    CHECK_THROWS_AS(bernoulli(-2), DomainError);
}

TEST_CASE("bernoulli denominators follow von Staudt-Clausen up to k = 30")
{
    auto is_prime = [](long p) {
        if (p < 2) {
            return false;
        }
        for (long d = 2; d * d <= p; ++d) {
            if (p % d == 0) {
                return false;
            }
        }
        return true;
    };
    for (int k = 2; k <= 30; k += 2) {
        Integer expected = 1;
        for (long p = 2; p <= k + 1; ++p) {
            if (is_prime(p) && k % (p - 1) == 0) {
                expected *= p;
            }
        }
        CAPTURE(k);
        CHECK(bernoulli(k).get_den() == expected);
        // Alternating sign of the even-index values.
        CHECK(((k / 2) % 2 == 1 ? bernoulli(k) > 0 : bernoulli(k) < 0));
    }
}

TEST_CASE("divisor sums")
{
    CHECK(sigma(1, 6) == 12);
    CHECK(sigma(3, 2) == 9);
    CHECK(sigma(7, 2) == 129);
    CHECK(sigma(0, 12) == 6);
    CHECK(sigma(11, 1) == 1);
    CHECK(sigma_rational(-1, 2) == ratio(3, 2));
    CHECK(sigma_rational(3, 6) == Rational(sigma(3, 6)));
    CHECK(divisors(12) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
    CHECK_THROWS_AS(sigma(1, 0), DomainError);
    CHECK_THROWS_AS(divisors(0), DomainError);
    // Large exponents stay exact.
    CHECK(sigma(25, 2) == Integer("33554433"));
    CHECK(sigma(40, 3) == Integer("12157665459056928802"));
}

TEST_CASE("sigma agrees with trial division and is multiplicative on coprime arguments")
{
    for (unsigned j : {0u, 1u, 3u, 5u, 11u}) {
        for (std::uint64_t m = 1; m <= 50; ++m) {
            CHECK(sigma(j, m) == oracle::sigma_by_trial_division(j, m));
            for (std::uint64_t n = 1; n <= 50; ++n) {
                if (std::gcd(m, n) == 1) {
                    CHECK(sigma(j, m * n) == sigma(j, m) * sigma(j, n));
                }
            }
        }
    }
}

TEST_CASE("binomial coefficients")
{
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(4, 0) == 1);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(3, -1) == 0);
    CHECK(binomial(60, 30) == Integer("118264581564861424"));
    for (int n = 1; n <= 30; ++n) {
        for (int r = 1; r <= n; ++r) {
            CHECK(binomial(n, r) == binomial(n - 1, r - 1) + binomial(n - 1, r));
        }
    }
}

TEST_CASE("rationals stay canonical")
{
    CHECK(to_string(ratio(-12, 4)) == "-3/1");
    CHECK(to_string(ratio(3, -6)) == "-1/2");
    CHECK(parse_rational("-28980/2") == -14490);
    CHECK(to_string(parse_rational("10/4")) == "5/2");
    CHECK(parse_rational("-24") == -24);
    CHECK_THROWS_AS(parse_rational("x/2"), DomainError);
    CHECK_THROWS_AS(make_rational(1, 0), DomainError);
    CHECK(rational_pow(ratio(2, 3), -2) == ratio(9, 4));
    CHECK(rational_pow(ratio(-2, 3), 3) == ratio(-8, 27));
    CHECK_THROWS_AS(rational_pow(Rational(0), -1), DomainError);
    CHECK(is_perfect_square(Integer(144)));
    CHECK_FALSE(is_perfect_square(Integer(-4)));
    CHECK_FALSE(is_perfect_square(Integer(2)));
}

TEST_CASE("solve_linear examples")
{
    using V = std::vector<Rational>;
    CHECK(*solve_linear({{1, 0}, {0, 1}}, {3, 4}) == V{3, 4});
    CHECK(*solve_linear({{1, 1}}, {2}) == V{2, 0});
    CHECK_FALSE(solve_linear({{1}, {1}}, {1, 2}).has_value());
    CHECK(*solve_linear({{0, 2}, {3, 0}}, {4, 9}) == V{3, 2});
    CHECK(*solve_linear({{2, 4}, {1, 2}}, {6, 3}) == V{3, 0});
    CHECK_THROWS_AS(solve_linear({}, {}), DomainError);
    CHECK_THROWS_AS(solve_linear({{1, 2}}, {1, 2}), DomainError);
    CHECK_THROWS_AS(solve_linear({{1, 2}, {1}}, {1, 2}), DomainError);
    CHECK(matrix_rank({{1, 2}, {2, 4}, {0, 0}}) == 1);
    CHECK(matrix_rank({{1, 2}, {0, 1}}) == 2);
}

TEST_CASE("solve_linear reproduces A x for random systems")
{
    oracle::Gen gen(20241016);
    for (int trial = 0; trial < 200; ++trial) {
        const auto rows = static_cast<std::size_t>(gen.integer(1, 6));
        const auto cols = static_cast<std::size_t>(gen.integer(1, 6));
        RationalMatrix a(rows, std::vector<Rational>(cols));
        std::vector<Rational> x(cols);
        for (auto& row : a) {
            for (auto& v : row) {
                // Sparse entries give rank-deficient systems often enough.
                v = gen.integer(0, 3) == 0 ? Rational(0) : gen.rational();
            }
        }
        for (auto& v : x) {
            v = gen.rational();
        }
        auto apply = [&](const std::vector<Rational>& y) {
            std::vector<Rational> out(rows, Rational(0));
            for (std::size_t i = 0; i < rows; ++i) {
                for (std::size_t j = 0; j < cols; ++j) {
                    out[i] += a[i][j] * y[j];
                }
            }
            return out;
        };
        const auto b = apply(x);
        const auto solved = solve_linear(a, b);
        REQUIRE(solved.has_value());
        CHECK(apply(*solved) == b);
    }
}
