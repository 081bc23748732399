#pragma once

// Hecke operators on weight-tagged q-series and Y-polynomial forms, and a
// finite eigenform test.
//
// On a weight-k series the level-1 operator acts on coefficients by
//
//   (T_n f)_m = sum_{d | gcd(m, n)} d^{k-1} a_{mn/d^2},
//
// so T_n f is known to exponent floor(prec / n). On the Y^r component of a
// nearly holomorphic form of weight k the factor becomes n^r d^{k-2r-1},
// since Im((nz + bd)/d^2) = n Im(z)/d^2.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "qmf/nearly.hpp"
#include "qmf/qseries.hpp"

namespace qmf {

GradedSeries hecke(const GradedSeries& f, std::uint64_t n);

/// Hecke action on a single Y^r component of a weight-k form.
QSeries hecke_component(const QSeries& f, int weight, std::size_t r, std::uint64_t n);

YPolyForm hecke_nearly(const YPolyForm& f, std::uint64_t n);

/// Non-empty when f.prec < n, i.e. T_n f only retains its constant term.
std::optional<std::string> hecke_precision_warning(std::size_t prec, std::uint64_t n);

inline constexpr std::uint64_t kDefaultHeckeBound = 10;
inline constexpr std::size_t kDefaultWindow = 12;

struct EigenViolation {
    std::uint64_t n;
    std::size_t exponent;
    /// Y-power of the offending component (0 for holomorphic input).
    std::size_t component;
    /// lambda_n * a_m.
    Rational expected;
    /// (T_n f)_m.
    Rational actual;
};

/// Outcome of eigenform_test. A positive verdict means T_n f = lambda_n f for
/// every n <= tested_bound on exponents 0..window; it is a necessary
/// condition for being an eigenform, not a proof.
struct EigenReport {
    bool is_eigen_up_to_bound = false;
    std::uint64_t tested_bound = 0;
    std::size_t window = 0;
    std::vector<std::pair<std::uint64_t, Rational>> eigenvalues;
    std::optional<EigenViolation> first_violation;
    std::size_t precision_used = 0;
    /// floor(prec / n) for each tested n.
    std::vector<std::pair<std::uint64_t, std::size_t>> hecke_precisions;

    /// lambda_n, if it was determined.
    std::optional<Rational> eigenvalue(std::uint64_t n) const;
};

/// Requires a nonzero input and prec >= bound * window.
EigenReport eigenform_test(const GradedSeries& f, std::uint64_t bound = kDefaultHeckeBound,
                           std::size_t window = kDefaultWindow);
EigenReport eigenform_test(const YPolyForm& f, std::uint64_t bound = kDefaultHeckeBound,
                           std::size_t window = kDefaultWindow);

nlohmann::json to_json(const EigenReport& r);

} // namespace qmf
