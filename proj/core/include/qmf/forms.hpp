#pragma once

// Level-1 forms: Eisenstein series, monomial bases E4^a E6^b of M_k, the
// normalized cusp forms Delta_k for one-dimensional cusp spaces, membership
// testing in M_k and evaluation of polynomials in E2, E4, E6.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qmf/expression.hpp"
#include "qmf/qseries.hpp"

namespace qmf {

/// Weights with dim S_k = 1.
inline constexpr int kDeltaWeights[] = {12, 16, 18, 20, 22, 26};

/// E_k = 1 - (2k/B_k) sum sigma_{k-1}(m) q^m, for even k >= 2. Depth 0 for
/// k >= 4; E2 is tagged depth 1.
GradedSeries eisenstein(int k, std::size_t prec);

/// Exponent pairs (a, b) with 4a + 6b = k, a descending. k = 0 gives {(0,0)}.
std::vector<std::pair<int, int>> monomial_exponents(int k);

/// dim M_k, counted as the number of exponent pairs.
std::size_t modular_dimension(int k);

/// E4^a E6^b for every exponent pair of weight k (empty for k = 2, [1] for
/// k = 0).
std::vector<GradedSeries> monomial_basis(int k, std::size_t prec);

/// The normalized cusp form of weight k in {12,16,18,20,22,26}, solved for
/// inside span(monomial_basis(k)) from "a_0 = 0, a_1 = 1".
GradedSeries cusp_delta(int k, std::size_t prec);

/// Coordinates of the cusp form in monomial_basis(k) (e.g. k = 12 gives
/// {1/1728, -1/1728}).
std::vector<Rational> cusp_delta_coordinates(int k);

inline constexpr std::size_t kDefaultMembershipMargin = 10;

/// Coordinates of f in monomial_basis(k) if the linear system built from all
/// coefficients 0..f.prec is consistent; nullopt if f is not in M_k (to
/// this precision). Throws PrecisionError when f.prec + 1 < dim M_k + margin,
/// and DomainError when M_k = 0 but f is nonzero or k is odd/negative.
std::optional<std::vector<Rational>> is_modular_member(const QSeries& f, int k,
                                                       std::size_t margin = kDefaultMembershipMargin);

/// Basis of the cusp subspace S_k (as series), from a row-reduced basis of
/// M_k restricted to a_0 = 0.
std::vector<QSeries> cusp_basis(int k, std::size_t prec);

/// Coordinates of f in a basis of S_k; nullopt if f is not a cusp form of
/// weight k (to this precision).
std::optional<std::vector<Rational>> is_cusp_member(const QSeries& f, int k,
                                                    std::size_t margin = kDefaultMembershipMargin);

/// A polynomial in E2, E4, E6 evaluated on their q-expansions. Requires
/// weight homogeneity; the depth is the largest E2 degree.
GradedSeries eval_generator_poly(const Polynomial& p, std::size_t prec);

/// Same without a weight tag; any polynomial in E2, E4, E6 is accepted.
QSeries eval_generator_poly_ungraded(const Polynomial& p, std::size_t prec);

/// Named catalog entries, computed once at a fixed precision.
class FormCatalog {
public:
    explicit FormCatalog(std::size_t prec);

    /// E2, E4, E6, E8, E10, E14, Delta12, Delta16, Delta18, Delta20,
    /// Delta22, Delta26 in that order.
    static const std::vector<std::string>& names();

    std::size_t prec() const { return prec_; }
    bool contains(const std::string& name) const;
    const GradedSeries& get(const std::string& name) const;

    /// Evaluates a polynomial whose symbols are catalog names or any E_k.
    /// Requires homogeneity.
    GradedSeries evaluate(const Polynomial& p) const;

    /// A catalog name or an expression.
    GradedSeries resolve(const std::string& name_or_expr) const;

private:
    GradedSeries symbol_series(const std::string& sym) const;

    std::size_t prec_;
    std::map<std::string, GradedSeries> entries_;
};

} // namespace qmf
