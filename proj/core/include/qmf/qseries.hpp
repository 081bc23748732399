#pragma once

// Truncated q-expansions over Q with explicit precision, and the derivative
// D = q d/dq.

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "qmf/exactmath.hpp"

namespace qmf {

/// sum_{m=0}^{prec} a_m q^m, known to be correct for every exponent <= prec.
/// Values are immutable once built; every operation returns a new series.
class QSeries {
public:
    /// The zero series known to precision `prec`.
    explicit QSeries(std::size_t prec = 0);
    /// Takes coefficients a_0..a_N; the precision is N.
    explicit QSeries(std::vector<Rational> coeffs);

    static QSeries constant(const Rational& c, std::size_t prec);
    /// c q^j (zero if j > prec).
    static QSeries monomial(std::size_t j, const Rational& c, std::size_t prec);

    std::size_t prec() const { return coeffs_.size() - 1; }
    const Rational& operator[](std::size_t m) const { return coeffs_[m]; }
    /// a_m, or an error when m is beyond the known precision.
    const Rational& at(std::size_t m) const;
    std::span<const Rational> coeffs() const { return coeffs_; }

    bool is_zero() const;
    /// Index of the first nonzero coefficient, if any.
    std::optional<std::size_t> valuation() const;
    bool is_integral() const;

    QSeries truncated(std::size_t prec) const;

    friend bool operator==(const QSeries&, const QSeries&) = default;

private:
    std::vector<Rational> coeffs_;
};

QSeries operator+(const QSeries& f, const QSeries& g);
QSeries operator-(const QSeries& f, const QSeries& g);
QSeries operator-(const QSeries& f);
QSeries operator*(const Rational& c, const QSeries& f);
/// Truncated Cauchy product. Integral inputs (after clearing denominators)
/// go through a big-integer kernel; the result is identical to the rational
/// schoolbook product.
QSeries operator*(const QSeries& f, const QSeries& g);

QSeries add(const QSeries& f, const QSeries& g);
QSeries mul(const QSeries& f, const QSeries& g);
/// Schoolbook product over Q with no integer fast path. Reference kernel.
QSeries mul_rational(const QSeries& f, const QSeries& g);

/// D f: a_m -> m a_m.
QSeries derivative_D(const QSeries& f);
/// D^r f: a_m -> m^r a_m.
QSeries derivative_D(const QSeries& f, unsigned r);

/// (f / c, c) with c the first nonzero coefficient.
std::pair<QSeries, Rational> normalize(const QSeries& f);

/// True when f and g agree on every exponent <= min(f.prec, g.prec).
bool agree_on_common_window(const QSeries& f, const QSeries& g);

/// First exponent <= min(prec) where f and g differ.
std::optional<std::size_t> first_difference(const QSeries& f, const QSeries& g);

/// A q-series with a weight tag and an optional depth bound.
struct GradedSeries {
    QSeries series;
    int weight = 0;
    std::optional<int> depth;

    std::size_t prec() const { return series.prec(); }
};

/// Weights must match.
GradedSeries operator+(const GradedSeries& f, const GradedSeries& g);
GradedSeries operator-(const GradedSeries& f, const GradedSeries& g);
GradedSeries operator*(const Rational& c, const GradedSeries& f);
/// Weights add; depth bounds add when both are known.
GradedSeries operator*(const GradedSeries& f, const GradedSeries& g);
/// Weight + 2r; depth bound + r.
GradedSeries derivative_D(const GradedSeries& f, unsigned r = 1);

nlohmann::json to_json(const QSeries& f);
nlohmann::json to_json(const GradedSeries& f);
QSeries qseries_from_json(const nlohmann::json& j);

} // namespace qmf
