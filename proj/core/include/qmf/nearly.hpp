#pragma once

// Nearly holomorphic forms as polynomials in Y = 1/(pi Im z) with q-series
// coefficients. With this scaling
//
//   E2* = E2 - 3Y,   delta_k F = D F - (k/4) Y F,   D(Y) = Y^2/4,
//
// so every coefficient stays rational.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "qmf/qseries.hpp"

namespace qmf {

inline constexpr const char* kYScaling = "Y=1/(pi*Im z)";

class YPolyForm {
public:
    /// Components indexed by Y-power; trailing zero components are dropped.
    YPolyForm(std::vector<QSeries> components, int weight);
    /// Depth-0 form.
    explicit YPolyForm(const GradedSeries& f);

    int weight() const { return weight_; }
    int depth() const { return static_cast<int>(components_.size()) - 1; }
    const std::vector<QSeries>& components() const { return components_; }
    /// Y^r component (zero of matching precision when r > depth).
    QSeries component(std::size_t r) const;
    /// Minimum precision over all components.
    std::size_t prec() const;
    bool is_zero() const;

    /// Set when depth > weight/2, which no nonzero form should exhibit.
    std::optional<std::string> depth_warning() const;

    friend bool operator==(const YPolyForm&, const YPolyForm&) = default;

private:
    std::vector<QSeries> components_;
    int weight_;
};

YPolyForm operator+(const YPolyForm& f, const YPolyForm& g);
YPolyForm operator-(const YPolyForm& f, const YPolyForm& g);
YPolyForm operator*(const Rational& c, const YPolyForm& f);
YPolyForm operator*(const YPolyForm& f, const YPolyForm& g);

/// D on Y-polynomials: D(F_r Y^r) = (D F_r) Y^r + (r/4) F_r Y^{r+1}.
YPolyForm derivative_D(const YPolyForm& f);

/// delta_k F = D F - (k/4) Y F with k = F.weight(); result has weight k + 2.
YPolyForm maass_shimura(const YPolyForm& f);

/// E2 - 3Y, weight 2.
YPolyForm e2_star(std::size_t prec);

/// The Y^0 component with the weight tag.
GradedSeries constant_term(const YPolyForm& f);

/// f_r in M_{k-2r} with f = sum_r D^r f_r.
struct DecompositionPart {
    int r;
    GradedSeries form;
    /// Coordinates in monomial_basis(k - 2r).
    std::vector<Rational> coordinates;
};

/// Writes a quasimodular form of weight k and depth <= p (p < k/2) as
/// sum_{r=0}^{p} D^r(f_r), f_r in M_{k-2r}, by one joint linear solve over
/// the columns D^r(E4^a E6^b). Returns nullopt when no such decomposition
/// reproduces f on its full precision window.
std::optional<std::vector<DecompositionPart>> quasimodular_decompose(const GradedSeries& f, int p);

/// sum_r D^r(f_r) at the given precision.
QSeries reassemble(const std::vector<DecompositionPart>& parts);

nlohmann::json to_json(const YPolyForm& f);

} // namespace qmf
