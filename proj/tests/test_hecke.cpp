#include <doctest.h>

#include <numeric>

#include "oracles.hpp"
#include "qmf/forms.hpp"
#include "qmf/hecke.hpp"
#include "qmf/verify.hpp"

using namespace qmf;

namespace {

constexpr std::size_t kPrec = 128;

const FormCatalog& catalog()
{
    static const FormCatalog cat(kPrec);
    return cat;
}

Rational pow_u(std::uint64_t base, int e)
{
    return rational_pow(Rational(static_cast<unsigned long>(base)), e);
}

} // namespace

TEST_CASE("Hecke operator examples")
{
    const auto delta = cusp_delta(12, 40);
    CHECK(hecke(delta, 2).series[1] == -24);
    const auto e4 = eisenstein(4, 40);
    const auto t2 = hecke(e4, 2);
    CHECK(t2.series[0] == 9);
    CHECK(t2.series[1] == 2160);
    CHECK(t2.series == Rational(9) * e4.series.truncated(20));
    CHECK(t2.weight == 4);
    CHECK(hecke(e4, 1).series == e4.series);
    CHECK(hecke(e4, 3).prec() == 13);
    CHECK(hecke(e4, 7).prec() == 5);
    CHECK_THROWS_AS(hecke(e4, 0), DomainError);
    CHECK(hecke(eisenstein(4, 3), 5).prec() == 0);
    CHECK(hecke_precision_warning(3, 5).has_value());
    CHECK_FALSE(hecke_precision_warning(10, 5).has_value());
}

TEST_CASE("Hecke coefficients agree with the divisor-sum oracle")
{
    for (const auto& name : FormCatalog::names()) {
        const auto& f = catalog().get(name);
        for (std::uint64_t n = 1; n <= 10; ++n) {
            const auto t = hecke(f, n);
            for (std::size_t m = 0; m <= t.prec(); ++m) {
                CAPTURE(name);
                CAPTURE(n);
                CAPTURE(m);
                CHECK(t.series[m] == oracle::hecke_coefficient(f.series, f.weight, n, m));
            }
        }
    }
}

TEST_CASE("multiplicativity on coprime indices")
{
    for (const auto& name : FormCatalog::names()) {
        const auto& f = catalog().get(name);
        for (std::uint64_t m = 1; m <= 6; ++m) {
            for (std::uint64_t n = 1; n <= 6; ++n) {
                if (std::gcd(m, n) != 1) {
                    continue;
                }
                CAPTURE(name);
                CHECK(agree_on_common_window(hecke(hecke(f, n), m).series, hecke(f, m * n).series));
            }
        }
    }
    // The relation is formal: it holds on arbitrary weight-tagged series.
    oracle::Gen gen(23);
    for (int trial = 0; trial < 20; ++trial) {
        const GradedSeries f{gen.series(72), static_cast<int>(2 * gen.integer(1, 7)), std::nullopt};
        CHECK(agree_on_common_window(hecke(hecke(f, 2), 3).series, hecke(f, 6).series));
        CHECK(agree_on_common_window(hecke(hecke(f, 5), 2).series, hecke(f, 10).series));
    }
}

TEST_CASE("prime-power recursion")
{
    for (const auto& name : FormCatalog::names()) {
        const auto& f = catalog().get(name);
        for (std::uint64_t p : {2u, 3u}) {
            std::uint64_t pr = p;
            std::uint64_t prev = 1;
            for (int r = 1; r <= 2; ++r) {
                const auto lhs = hecke(hecke(f, pr), p).series;
                const auto rhs = hecke(f, pr * p).series + pow_u(p, f.weight - 1) * hecke(f, prev).series;
                CAPTURE(name);
                CAPTURE(p);
                CAPTURE(r);
                CHECK(agree_on_common_window(lhs, rhs));
                prev = pr;
                pr *= p;
            }
        }
    }
}

TEST_CASE("D commutes with T_n up to n^m")
{
    for (const auto& name : FormCatalog::names()) {
        const auto& f = catalog().get(name);
        for (unsigned m = 0; m <= 3; ++m) {
            for (std::uint64_t n = 1; n <= 6; ++n) {
                const auto lhs = derivative_D(hecke(f, n), m).series;
                const auto rhs = rational_pow(Rational(static_cast<unsigned long>(n)), -static_cast<int>(m))
                                 * hecke(derivative_D(f, m), n).series;
                CAPTURE(name);
                CAPTURE(m);
                CAPTURE(n);
                CHECK(agree_on_common_window(lhs, rhs));
            }
        }
    }
}

TEST_CASE("eigenform test on Delta12 and Eisenstein series")
{
    const auto r = eigenform_test(catalog().get("Delta12"));
    CHECK(r.is_eigen_up_to_bound);
    CHECK(r.tested_bound == 10);
    CHECK(r.window == 12);
    CHECK(r.eigenvalue(2) == -24);
    CHECK(r.eigenvalue(3) == 252);
    CHECK(r.eigenvalue(4) == -1472);
    CHECK(r.precision_used == kPrec);
    CHECK(r.hecke_precisions.size() == 10);
    CHECK(r.hecke_precisions[9] == std::pair<std::uint64_t, std::size_t>{10, 12});
    for (int k : {2, 4, 6, 8, 10, 14}) {
        const auto e = eigenform_test(catalog().get("E" + std::to_string(k)));
        CAPTURE(k);
        CHECK(e.is_eigen_up_to_bound);
        for (std::uint64_t n = 1; n <= 10; ++n) {
            CHECK(e.eigenvalue(n) == Rational(sigma(static_cast<unsigned>(k - 1), n)));
        }
    }
}

TEST_CASE("non-eigen products carry a verifiable witness")
{
    const auto e2 = catalog().get("E2");
    for (const auto& f : {e2 * e2, e2 * catalog().get("E4"), catalog().get("E4") * catalog().get("E8"),
                          catalog().get("Delta12") * catalog().get("Delta12")}) {
        const auto r = eigenform_test(f);
        CHECK_FALSE(r.is_eigen_up_to_bound);
        REQUIRE(r.first_violation.has_value());
        const auto& v = *r.first_violation;
        CHECK(v.expected != v.actual);
        CHECK(v.actual == oracle::hecke_coefficient(f.series, f.weight, v.n, v.exponent));
        CHECK(revalidate_violation(f.series, f.weight, v));
    }
    const auto r = eigenform_test(e2 * catalog().get("E4"));
    CHECK(r.first_violation->n == 2);
    CHECK(r.first_violation->exponent == 1);
    CHECK(r.first_violation->expected == 7128);
    CHECK(r.first_violation->actual == -3672);
}

TEST_CASE("D(E4) E4 is an eigenform equal to D(E8)/2")
{
    const auto de4 = derivative_D(catalog().get("E4"));
    const auto prod = de4 * catalog().get("E4");
    CHECK((prod - ratio(1, 2) * derivative_D(catalog().get("E8"))).series.is_zero());
    const auto r = eigenform_test(prod);
    CHECK(r.is_eigen_up_to_bound);
    CHECK(r.eigenvalue(2) == 2 * sigma(7, 2));
}

TEST_CASE("eigenvalue shift under D")
{
    for (const char* name : {"E4", "E6", "Delta12", "Delta16", "Delta26"}) {
        const auto base = eigenform_test(catalog().get(name));
        REQUIRE(base.is_eigen_up_to_bound);
        for (unsigned m = 1; m <= 3; ++m) {
            const auto shifted = eigenform_test(derivative_D(catalog().get(name), m));
            CAPTURE(name);
            CAPTURE(m);
            CHECK(shifted.is_eigen_up_to_bound);
            for (std::uint64_t n = 1; n <= 10; ++n) {
                CHECK(*shifted.eigenvalue(n) == rational_pow(Rational(static_cast<unsigned long>(n)), m) * *base.eigenvalue(n));
            }
        }
    }
}

TEST_CASE("normalized eigenforms satisfy the multiplicative coefficient relations")
{
    for (const auto& name : FormCatalog::names()) {
        const auto& f = catalog().get(name);
        REQUIRE(eigenform_test(f).is_eigen_up_to_bound);
        const auto a1 = f.series[1];
        auto a = [&](std::size_t m) { return f.series[m] / a1; };
        CAPTURE(name);
        CHECK(a(2) * a(3) == a(6));
        CHECK(a(2) * a(2) == a(4) + rational_pow(Rational(2), f.weight - 1));
    }
}

TEST_CASE("eigenform test preconditions")
{
    CHECK_THROWS_AS(eigenform_test(cusp_delta(12, 100)), PrecisionError);
    CHECK_NOTHROW(eigenform_test(cusp_delta(12, 120)));
    CHECK_NOTHROW(eigenform_test(cusp_delta(12, 40), 4, 10));
    CHECK_THROWS_AS(eigenform_test(GradedSeries{QSeries(128), 12, 0}), DomainError);
    // A form vanishing on the whole comparison window.
    CHECK_THROWS_AS(eigenform_test(GradedSeries{QSeries::monomial(60, 1, 128), 12, 0}), DomainError);
}

TEST_CASE("E2* is a Hecke eigenform on both Y components")
{
    const auto e2s = e2_star(kPrec);
    for (std::uint64_t n = 1; n <= 10; ++n) {
        const auto t = hecke_nearly(e2s, n);
        const Rational s = Rational(sigma(1, n));
        CHECK(t.component(0) == s * e2s.component(0).truncated(t.prec()));
        CHECK(t.component(1) == s * e2s.component(1).truncated(t.prec()));
    }
    // Y^1 component at n = 2: 2 sigma_{-1}(2) (-3) = -9.
    CHECK(hecke_nearly(e2s, 2).component(1)[0] == -9);
    CHECK(2 * sigma_rational(-1, 2) * -3 == -9);
    const auto r = eigenform_test(e2s);
    CHECK(r.is_eigen_up_to_bound);
    CHECK(r.eigenvalue(7) == 8);
}

TEST_CASE("hecke_nearly reduces to hecke at depth zero")
{
    for (const auto& name : FormCatalog::names()) {
        const auto& f = catalog().get(name);
        for (std::uint64_t n : {1u, 2u, 5u, 9u}) {
            CHECK(hecke_nearly(YPolyForm(f), n).component(0) == hecke(f, n).series);
        }
    }
}

TEST_CASE("EigenReport JSON")
{
    const auto j = to_json(eigenform_test(catalog().get("Delta12")));
    CHECK(j.at("is_eigen_up_to_bound") == true);
    CHECK(j.at("eigenvalues").size() == 10);
    CHECK(j.dump().find("\"-24/1\"") != std::string::npos);
    const auto bad = to_json(eigenform_test(catalog().get("E2") * catalog().get("E2")));
    CHECK(bad.at("is_eigen_up_to_bound") == false);
    CHECK(bad.at("first_violation").is_object());
}
