#include "qmf/hecke.hpp"

#include <numeric>

namespace qmf {

QSeries hecke_component(const QSeries& f, int weight, std::size_t r, std::uint64_t n)
{
    if (n == 0) {
        throw DomainError("hecke: n must be positive");
    }
    const std::size_t out_prec = f.prec() / n;
    const auto exponent = static_cast<std::int64_t>(weight) - 2 * static_cast<std::int64_t>(r) - 1;
    const Rational n_pow = rational_pow(Rational(static_cast<unsigned long>(n)), static_cast<std::int64_t>(r));

    std::vector<Rational> d_pow;
    const auto divs = divisors(n);
    d_pow.reserve(divs.size());
    for (auto d : divs) {
        d_pow.push_back(rational_pow(Rational(static_cast<unsigned long>(d)), exponent));
    }

    std::vector<Rational> c(out_prec + 1, Rational(0));
    for (std::size_t m = 0; m <= out_prec; ++m) {
        const std::uint64_t g = std::gcd(static_cast<std::uint64_t>(m), n);
        Rational acc = 0;
        for (std::size_t i = 0; i < divs.size(); ++i) {
            const auto d = divs[i];
            if (g % d != 0) {
                continue;
            }
            const std::uint64_t idx = m * n / (d * d);
            if (f[idx] != 0) {
                acc += d_pow[i] * f[idx];
            }
        }
        c[m] = n_pow * acc;
    }
    return QSeries(std::move(c));
}

GradedSeries hecke(const GradedSeries& f, std::uint64_t n)
{
    return {hecke_component(f.series, f.weight, 0, n), f.weight, f.depth};
}

YPolyForm hecke_nearly(const YPolyForm& f, std::uint64_t n)
{
    std::vector<QSeries> c;
    for (std::size_t r = 0; r < f.components().size(); ++r) {
        c.push_back(hecke_component(f.components()[r], f.weight(), r, n));
    }
    return YPolyForm(std::move(c), f.weight());
}

std::optional<std::string> hecke_precision_warning(std::size_t prec, std::uint64_t n)
{
    if (n > 0 && prec < n) {
        return "T_" + std::to_string(n) + " of a series known to q^" + std::to_string(prec)
               + " only determines the constant term (result precision 0)";
    }
    return std::nullopt;
}

std::optional<Rational> EigenReport::eigenvalue(std::uint64_t n) const
{
    for (const auto& [k, v] : eigenvalues) {
        if (k == n) {
            return v;
        }
    }
    return std::nullopt;
}

namespace {

// Shared driver: `components` are the Y^r parts (a single one for
// holomorphic input).
EigenReport run_eigen_test(const std::vector<QSeries>& components, int weight, std::uint64_t bound,
                           std::size_t window)
{
    if (bound == 0) {
        throw DomainError("eigenform_test: bound must be positive");
    }
    std::size_t prec = components.front().prec();
    for (const auto& c : components) {
        prec = std::min(prec, c.prec());
    }
    if (prec < bound * window) {
        throw PrecisionError("eigenform_test: bound " + std::to_string(bound) + " with window "
                             + std::to_string(window) + " needs precision " + std::to_string(bound * window)
                             + ", have " + std::to_string(prec));
    }

    // Leading coefficient: lowest Y-power, then lowest q-exponent.
    std::optional<std::pair<std::size_t, std::size_t>> lead;
    for (std::size_t r = 0; r < components.size() && !lead; ++r) {
        for (std::size_t m = 0; m <= window; ++m) {
            if (components[r][m] != 0) {
                lead = {r, m};
                break;
            }
        }
    }
    if (!lead) {
        throw DomainError("eigenform_test: form vanishes on the comparison window");
    }

    EigenReport report;
    report.tested_bound = bound;
    report.window = window;
    report.precision_used = prec;
    report.is_eigen_up_to_bound = true;

    for (std::uint64_t n = 1; n <= bound; ++n) {
        report.hecke_precisions.emplace_back(n, prec / n);
        std::vector<QSeries> image;
        for (std::size_t r = 0; r < components.size(); ++r) {
            image.push_back(hecke_component(components[r], weight, r, n));
        }
        const auto [lr, lm] = *lead;
        const Rational lambda = image[lr][lm] / components[lr][lm];
        report.eigenvalues.emplace_back(n, lambda);

        for (std::size_t r = 0; r < components.size(); ++r) {
            for (std::size_t m = 0; m <= window; ++m) {
                const Rational expected = lambda * components[r][m];
                if (image[r][m] != expected) {
                    report.is_eigen_up_to_bound = false;
                    report.first_violation = EigenViolation{n, m, r, expected, image[r][m]};
                    return report;
                }
            }
        }
    }
    return report;
}

} // namespace

EigenReport eigenform_test(const GradedSeries& f, std::uint64_t bound, std::size_t window)
{
    return run_eigen_test({f.series}, f.weight, bound, window);
}

EigenReport eigenform_test(const YPolyForm& f, std::uint64_t bound, std::size_t window)
{
    return run_eigen_test(f.components(), f.weight(), bound, window);
}

nlohmann::json to_json(const EigenReport& r)
{
    auto eig = nlohmann::json::array();
    for (const auto& [n, v] : r.eigenvalues) {
        eig.push_back({{"n", n}, {"lambda", to_string(v)}});
    }
    nlohmann::json violation = nullptr;
    if (r.first_violation) {
        const auto& v = *r.first_violation;
        violation = {{"n", v.n},
                     {"exponent", v.exponent},
                     {"component", v.component},
                     {"expected", to_string(v.expected)},
                     {"actual", to_string(v.actual)}};
    }
    auto precs = nlohmann::json::array();
    for (const auto& [n, p] : r.hecke_precisions) {
        precs.push_back({{"n", n}, {"prec", p}});
    }
    return {{"is_eigen_up_to_bound", r.is_eigen_up_to_bound},
            {"tested_bound", r.tested_bound},
            {"window", r.window},
            {"eigenvalues", std::move(eig)},
            {"first_violation", std::move(violation)},
            {"precision_used", r.precision_used},
            {"hecke_precisions", std::move(precs)}};
}

} // namespace qmf
