#include <doctest.h>

#include "oracles.hpp"
#include "qmf/forms.hpp"

using namespace qmf;

namespace {

constexpr std::size_t kPrec = 64;

std::vector<Rational> ints(std::initializer_list<long> c)
{
    std::vector<Rational> v;
    for (long x : c) {
        v.emplace_back(x);
    }
    return v;
}

std::vector<Rational> head(const QSeries& f, std::size_t n)
{
    return {f.coeffs().begin(), f.coeffs().begin() + static_cast<std::ptrdiff_t>(n)};
}

} // namespace

TEST_CASE("Eisenstein series match the divisor-sum definition")
{
    for (const auto& [k, mult] : oracle::kEisensteinMultiplier) {
        CAPTURE(k);
        const auto e = eisenstein(k, kPrec);
        CHECK(e.weight == k);
        CHECK(e.depth == (k == 2 ? 1 : 0));
        CHECK(e.series == oracle::eisenstein_by_definition(k, kPrec));
        CHECK(e.series[1] == mult);
    }
    CHECK(head(eisenstein(4, 4).series, 3) == ints({1, 240, 2160}));
    CHECK(head(eisenstein(8, 4).series, 4) == ints({1, 480, 61920, 1050240}));
    CHECK(head(eisenstein(10, 4).series, 3) == ints({1, -264, -135432}));
    CHECK(head(eisenstein(14, 4).series, 3) == ints({1, -24, -196632}));
    // Weight 12 has a non-integral multiplier 65520/691.
    CHECK(eisenstein(12, 2).series[1] == ratio(65520, 691));
    CHECK_THROWS_AS(eisenstein(3, 4), DomainError);
    CHECK_THROWS_AS(eisenstein(0, 4), DomainError);
}

TEST_CASE("monomial bases")
{
    using P = std::vector<std::pair<int, int>>;
    CHECK(monomial_exponents(12) == P{{3, 0}, {0, 2}});
    CHECK(monomial_exponents(14) == P{{2, 1}});
    CHECK(monomial_exponents(26) == P{{5, 1}, {2, 3}});
    CHECK(monomial_exponents(0) == P{{0, 0}});
    CHECK(monomial_exponents(2).empty());
    CHECK_THROWS_AS(monomial_exponents(5), DomainError);
    CHECK_THROWS_AS(monomial_exponents(-4), DomainError);
    CHECK(monomial_basis(12, 8).size() == 2);
    CHECK(monomial_basis(14, 8).size() == 1);
    CHECK(monomial_basis(26, 8).size() == 2);
    CHECK(monomial_basis(2, 8).empty());
    const auto e4 = eisenstein(4, 20).series;
    const auto e6 = eisenstein(6, 20).series;
    CHECK(monomial_basis(26, 20)[1].series == e4 * e4 * e6 * e6 * e6);
    for (int k = 0; k <= 40; k += 2) {
        // Classical dimension formula as an independent count.
        const std::size_t classical = (k % 12 == 2) ? static_cast<std::size_t>(k / 12) : static_cast<std::size_t>(k / 12 + 1);
        CHECK(modular_dimension(k) == classical);
    }
}

TEST_CASE("cusp forms Delta_k against frozen coefficients")
{
    const std::map<int, std::vector<Rational>> expected = {
        {12, ints({0, 1, -24, 252, -1472, 4830, -6048, -16744})},
        {16, ints({0, 1, 216, -3348, 13888, 52110, -723168, 2822456})},
        {18, ints({0, 1, -528, -4284, 147712, -1025850, 2261952, 3225992})},
        {20, ints({0, 1, 456, 50652, -316352, -2377410, 23097312, -16917544})},
        {22, ints({0, 1, -288, -128844, -2014208, 21640950, 37107072, -768078808})},
        {26, ints({0, 1, -48, -195804, -33552128, -741989850, 9398592, 39080597192})},
    };
    for (const auto& [k, coeffs] : expected) {
        CAPTURE(k);
        const auto d = cusp_delta(k, 16);
        CHECK(d.weight == k);
        CHECK(head(d.series, coeffs.size()) == coeffs);
        CHECK(d.series.is_integral());
    }
    CHECK(cusp_delta_coordinates(12) == std::vector<Rational>{ratio(1, 1728), ratio(-1, 1728)});
    CHECK_THROWS_AS(cusp_delta(14, 8), DomainError);
    CHECK_THROWS_AS(cusp_delta(24, 8), DomainError);
}

TEST_CASE("Delta12 is (E4^3 - E6^2)/1728 and tau is multiplicative")
{
    const auto e4 = eisenstein(4, kPrec).series;
    const auto e6 = eisenstein(6, kPrec).series;
    const auto d = cusp_delta(12, kPrec).series;
    CHECK(d == ratio(1, 1728) * (e4 * e4 * e4 - e6 * e6));
    CHECK(d[6] == d[2] * d[3]);
    CHECK(d[4] == d[2] * d[2] - (1 << 11));
}

TEST_CASE("cusp forms are unique in their one-dimensional spaces")
{
    for (int k : kDeltaWeights) {
        CAPTURE(k);
        const auto basis = cusp_basis(k, 40);
        REQUIRE(basis.size() == 1);
        CHECK(normalize(basis.front()).first == cusp_delta(k, 40).series);
        // Any cusp form, once normalized, is Delta_k regardless of how it was built.
        const auto scaled = Rational(-7) * cusp_delta(k, 40).series;
        CHECK(normalize(scaled).first == cusp_delta(k, 40).series);
    }
    CHECK(cusp_basis(24, 40).size() == 2);
    CHECK(cusp_basis(10, 40).empty());
}

TEST_CASE("membership in M_k")
{
    const auto e4 = eisenstein(4, kPrec).series;
    const auto e2 = eisenstein(2, kPrec).series;
    const auto e6 = eisenstein(6, kPrec).series;
    CHECK(is_modular_member(e4 * e4, 8) == std::vector<Rational>{1});
    // D E4 - (E2 E4 - E6)/3 vanishes identically.
    const auto zero = derivative_D(e4) - ratio(1, 3) * (e2 * e4 - e6);
    CHECK(zero.is_zero());
    for (int k : {4, 10, 12, 26}) {
        const auto coords = is_modular_member(zero, k);
        REQUIRE(coords.has_value());
        for (const auto& c : *coords) {
            CHECK(c == 0);
        }
    }
    CHECK_THROWS_AS(is_modular_member(e2, 2), DomainError);
    CHECK(is_modular_member(QSeries(kPrec), 2) == std::vector<Rational>{});
    CHECK_FALSE(is_modular_member(e2 * e4, 6).has_value());
    CHECK_FALSE(is_modular_member(e4, 6).has_value());
    CHECK_THROWS_AS(is_modular_member(e4, 7), DomainError);
    CHECK_THROWS_AS(is_modular_member(e4.truncated(5), 4), PrecisionError);
    const auto delta = cusp_delta(12, kPrec).series;
    const auto coords = is_cusp_member(delta, 12);
    REQUIRE(coords.has_value());
    REQUIRE(coords->size() == 1);
    CHECK(coords->front() * cusp_basis(12, kPrec).front() == delta);
    CHECK_FALSE(is_cusp_member(eisenstein(12, kPrec).series, 12).has_value());
}

TEST_CASE("generator polynomials")
{
    const auto de2 = eval_generator_poly(parse_polynomial("(E2^2 - E4)/12"), kPrec);
    CHECK(de2.series == derivative_D(eisenstein(2, kPrec).series));
    CHECK(de2.weight == 4);
    CHECK(de2.depth == 2);
    CHECK(eval_generator_poly(parse_polynomial("E4"), kPrec).series == eisenstein(4, kPrec).series);
    const auto p = eval_generator_poly(parse_polynomial("E2*E4"), kPrec);
    CHECK(p.weight == 6);
    CHECK(p.depth == 1);
    CHECK_THROWS_AS(eval_generator_poly(parse_polynomial("E2 + E4"), kPrec), DomainError);
    CHECK_THROWS_AS(eval_generator_poly(parse_polynomial("Delta12"), kPrec), DomainError);
    CHECK(eval_generator_poly_ungraded(parse_polynomial("E2 + E4"), 8) ==
          eisenstein(2, 8).series + eisenstein(4, 8).series);
    CHECK(eval_generator_poly(parse_polynomial("3"), 5).weight == 0);
}

TEST_CASE("Ramanujan's system")
{
    const auto e2 = eisenstein(2, kPrec).series;
    const auto e4 = eisenstein(4, kPrec).series;
    const auto e6 = eisenstein(6, kPrec).series;
    CHECK(derivative_D(e2) == ratio(1, 12) * (e2 * e2 - e4));
    CHECK(derivative_D(e4) == ratio(1, 3) * (e2 * e4 - e6));
    CHECK(derivative_D(e6) == ratio(1, 2) * (e2 * e6 - e4 * e4));
    const auto d = cusp_delta(12, kPrec).series;
    CHECK(derivative_D(d) == e2 * d);
}

TEST_CASE("product identities among eigenforms")
{
    const FormCatalog cat(kPrec);
    const std::vector<std::array<const char*, 3>> identities = {
        {"E4", "E4", "E8"},        {"E4", "E6", "E10"},       {"E6", "E8", "E14"},       {"E4", "E10", "E14"},
        {"E4", "Delta12", "Delta16"}, {"E6", "Delta12", "Delta18"}, {"E4", "Delta16", "Delta20"},
        {"E8", "Delta12", "Delta20"}, {"E4", "Delta18", "Delta22"}, {"E6", "Delta16", "Delta22"},
        {"E10", "Delta12", "Delta22"}, {"E4", "Delta22", "Delta26"}, {"E6", "Delta20", "Delta26"},
        {"E8", "Delta18", "Delta26"}, {"E10", "Delta16", "Delta26"}, {"E14", "Delta12", "Delta26"},
    };
    for (const auto& [f, g, target] : identities) {
        CAPTURE(f);
        CAPTURE(g);
        CHECK(cat.get(f).series * cat.get(g).series == cat.get(target).series);
    }
    const auto de4 = derivative_D(cat.get("E4").series);
    CHECK(de4 * cat.get("E4").series == ratio(1, 2) * derivative_D(cat.get("E8").series));
    // A product that is not on the list.
    CHECK(cat.get("E4").series * cat.get("E8").series != eisenstein(12, kPrec).series);
}

TEST_CASE("catalog")
{
    const FormCatalog cat(24);
    CHECK(FormCatalog::names().size() == 12);
    CHECK(FormCatalog::names().front() == "E2");
    CHECK(cat.contains("Delta26"));
    CHECK_FALSE(cat.contains("E12"));
    CHECK(cat.get("Delta12").weight == 12);
    CHECK_THROWS_AS(cat.get("Delta24"), DomainError);
    CHECK(cat.resolve("E4*Delta12").series == cat.get("Delta16").series);
    CHECK(cat.resolve("E12").series == eisenstein(12, 24).series);
    CHECK(cat.evaluate(parse_polynomial("E2*Delta12")).weight == 14);
    CHECK_THROWS_AS(cat.resolve("E4 + Delta12"), DomainError);
}
